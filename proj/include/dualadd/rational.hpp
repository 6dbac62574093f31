#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "dualadd/errors.hpp"

namespace dualadd {

/// Exact fraction with arbitrary-precision numerator and positive denominator,
/// always kept in lowest terms. Division by zero throws DomainError.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

  Rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  explicit Rational(mpz_class n) : v_(std::move(n)) {}
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  /// Parses "p/q" or "p" with decimal integers and an optional leading minus on p.
  static Rational parse(std::string_view s) {
    auto digits = [](std::string_view d) {
      if (d.empty()) return false;
      for (char c : d)
        if (c < '0' || c > '9') return false;
      return true;
    };
    std::string_view num = s, den;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
      num = s.substr(0, slash);
      den = s.substr(slash + 1);
      if (!digits(den)) throw DomainError("malformed rational: '" + std::string(s) + "'");
    }
    std::string_view mag = num;
    if (!mag.empty() && mag.front() == '-') mag.remove_prefix(1);
    if (!digits(mag)) throw DomainError("malformed rational: '" + std::string(s) + "'");
    mpz_class p(std::string(num), 10);
    mpz_class q = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (q == 0) throw DomainError("malformed rational (zero denominator): '" + std::string(s) + "'");
    return Rational(mpq_class(p, q));
  }

  const mpq_class& value() const noexcept { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const noexcept { return sgn(v_) == 0; }
  int sign() const noexcept { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const { return v_.get_str(10); }

  double to_double() const { return v_.get_d(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_{0};
};

/// Shifted factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
inline Rational pochhammer(const Rational& a, unsigned n) {
  mpq_class acc(1), term(a.value());
  for (unsigned i = 0; i < n; ++i) {
    acc *= term;
    term += 1;
  }
  return Rational(std::move(acc));
}

inline Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(std::move(f));
}

inline Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(std::move(b));
}

/// Integer power; negative exponents require a nonzero base.
inline Rational pow(const Rational& base, long e) {
  if (e < 0) {
    if (base.is_zero()) throw DomainError("zero to a negative power");
    return Rational(1) / pow(base, -e);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.value().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.value().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(num, den));
}

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace dualadd
