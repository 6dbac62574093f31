#pragma once

#include <mpfr.h>

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "dualadd/errors.hpp"
#include "dualadd/rational.hpp"

namespace dualadd {

// Working precision is per thread, so worker pools can run suites at different P.
// Every BigFloat carries its own precision; results of arithmetic are rounded
// (to nearest) at the working precision current when they are produced.

inline thread_local int tl_working_digits = 60;

inline mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 16;
}

inline int working_digits() { return tl_working_digits; }
inline mpfr_prec_t working_bits() { return digits_to_bits(tl_working_digits); }

/// Sets the working precision of the current thread for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(int digits) : saved_(tl_working_digits) {
    if (digits < 5) throw PrecisionError("working precision must be at least 5 digits");
    tl_working_digits = digits;
  }
  ~PrecisionScope() { tl_working_digits = saved_; }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  int saved_;
};

/// MPFR-backed real number.
class BigFloat {
 public:
  BigFloat() {
    mpfr_init2(v_, working_bits());
    mpfr_set_zero(v_, 1);
  }
  BigFloat(long n) {  // NOLINT(google-explicit-constructor)
    mpfr_init2(v_, working_bits());
    mpfr_set_si(v_, n, MPFR_RNDN);
  }
  BigFloat(int n) : BigFloat(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  BigFloat(unsigned n) : BigFloat(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  explicit BigFloat(double d) {
    mpfr_init2(v_, working_bits());
    mpfr_set_d(v_, d, MPFR_RNDN);
  }
  explicit BigFloat(const Rational& q) {
    mpfr_init2(v_, working_bits());
    mpfr_set_q(v_, q.value().get_mpq_t(), MPFR_RNDN);
  }

  /// Decimal literal such as "0.3" or "-1.5e-4", rounded once at working precision.
  static BigFloat parse(std::string_view s) {
    BigFloat r;
    std::string buf(s);
    char* end = nullptr;
    if (!buf.empty()) mpfr_strtofr(r.v_, buf.c_str(), &end, 10, MPFR_RNDN);
    if (buf.empty() || end != buf.c_str() + buf.size() || !r.is_finite())
      throw DomainError("malformed decimal: '" + buf + "'");
    return r;
  }

  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }
  mpfr_prec_t precision_bits() const { return mpfr_get_prec(v_); }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  /// Scientific notation with `digits` significant digits, e.g. "1.25e-31"; "0" for zero.
  std::string str(int digits = 6) const {
    if (is_zero()) return "0";
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits > 1 ? digits - 1 : 0, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  BigFloat operator-() const {
    BigFloat r;
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

#define DUALADD_BF_OP(op, fn)                                       \
  friend BigFloat operator op(const BigFloat& a, const BigFloat& b) { \
    BigFloat r;                                                     \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                \
    return r;                                                       \
  }                                                                 \
  BigFloat& operator op##=(const BigFloat & b) { return *this = *this op b; }
  DUALADD_BF_OP(+, mpfr_add)
  DUALADD_BF_OP(-, mpfr_sub)
  DUALADD_BF_OP(*, mpfr_mul)
  DUALADD_BF_OP(/, mpfr_div)
#undef DUALADD_BF_OP

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_); }

  friend std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.str(20); }

 private:
  mpfr_t v_;
};

namespace detail {

template <class Fn>
BigFloat unary(const BigFloat& x, Fn fn) {
  BigFloat r;
  fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace detail

inline BigFloat abs(const BigFloat& x) { return detail::unary(x, mpfr_abs); }
inline BigFloat sqrt(const BigFloat& x) { return detail::unary(x, mpfr_sqrt); }
inline BigFloat exp(const BigFloat& x) { return detail::unary(x, mpfr_exp); }
inline BigFloat log(const BigFloat& x) { return detail::unary(x, mpfr_log); }
inline BigFloat log1p(const BigFloat& x) { return detail::unary(x, mpfr_log1p); }
inline BigFloat sin(const BigFloat& x) { return detail::unary(x, mpfr_sin); }
inline BigFloat cos(const BigFloat& x) { return detail::unary(x, mpfr_cos); }
inline BigFloat sinh(const BigFloat& x) { return detail::unary(x, mpfr_sinh); }
inline BigFloat cosh(const BigFloat& x) { return detail::unary(x, mpfr_cosh); }

inline BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r;
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}
inline BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r;
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}
inline BigFloat pow(const BigFloat& x, const BigFloat& y) {
  BigFloat r;
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}
inline BigFloat pow(const BigFloat& x, long n) {
  BigFloat r;
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}
inline BigFloat pi() {
  BigFloat r;
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}
inline BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

/// Copy of x rounded to the current working precision.
inline BigFloat rounded(const BigFloat& x) {
  BigFloat r;
  mpfr_set(r.get(), x.get(), MPFR_RNDN);
  return r;
}

/// 10^e at working precision.
inline BigFloat pow10(long e) { return pow(BigFloat(10), e); }

/// Decimal exponent estimate floor(log10|x|); very negative for zero.
inline long decimal_exponent(const BigFloat& x) {
  if (x.is_zero()) return -1000000;
  const long e2 = mpfr_get_exp(x.get());  // |x| in [2^{e2-1}, 2^{e2})
  return static_cast<long>(std::floor((e2 - 1) * 0.3010299956639812));
}

/// Complex number as a pair of BigFloats.
struct BigComplex {
  BigFloat re, im;

  BigComplex() = default;
  BigComplex(BigFloat r) : re(std::move(r)), im(0L) {}  // NOLINT(google-explicit-constructor)
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  BigComplex(long n) : re(n), im(0L) {}  // NOLINT(google-explicit-constructor)
  BigComplex(int n) : re(static_cast<long>(n)), im(0L) {}  // NOLINT(google-explicit-constructor)
  explicit BigComplex(const Rational& q) : re(q), im(0L) {}

  static BigComplex i() { return {BigFloat(0L), BigFloat(1L)}; }

  bool is_real() const { return im.is_zero(); }

  BigComplex conj() const { return {re, -im}; }
  BigComplex operator-() const { return {-re, -im}; }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator*(const BigComplex& a, const BigFloat& s) { return {a.re * s, a.im * s}; }
  friend BigComplex operator*(const BigFloat& s, const BigComplex& a) { return {a.re * s, a.im * s}; }
  friend BigComplex operator/(const BigComplex& a, const BigFloat& s) { return {a.re / s, a.im / s}; }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    if (b.re.is_zero() && b.im.is_zero()) throw DomainError("complex division by zero");
    const BigFloat d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  BigComplex& operator+=(const BigComplex& b) { return *this = *this + b; }
  BigComplex& operator-=(const BigComplex& b) { return *this = *this - b; }
  BigComplex& operator*=(const BigComplex& b) { return *this = *this * b; }
  BigComplex& operator/=(const BigComplex& b) { return *this = *this / b; }

  friend std::ostream& operator<<(std::ostream& os, const BigComplex& z) {
    return os << z.re.str(20) << (z.im.sign() < 0 ? " - " : " + ") << abs(z.im).str(20) << "i";
  }
};

inline BigFloat norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
inline BigFloat abs(const BigComplex& z) { return hypot(z.re, z.im); }
inline BigFloat arg(const BigComplex& z) { return atan2(z.im, z.re); }
inline BigComplex exp(const BigComplex& z) {
  const BigFloat m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}
inline BigComplex rounded(const BigComplex& z) { return {rounded(z.re), rounded(z.im)}; }

/// Principal logarithm.
inline BigComplex log(const BigComplex& z) {
  if (z.re.is_zero() && z.im.is_zero()) throw DomainError("log of zero");
  return {log(abs(z)), arg(z)};
}

}  // namespace dualadd
