#pragma once

#include <mutex>
#include <vector>

#include "dualadd/bigfloat.hpp"
#include "dualadd/errors.hpp"
#include "dualadd/rational.hpp"

namespace dualadd {

/// Exact Bernoulli number B_{2k}, cached process-wide.
inline Rational bernoulli_even(unsigned k) {
  static std::mutex mu;
  static std::vector<Rational> b{Rational(1)};  // all B_n, n = 0, 1, 2, ...
  std::lock_guard lock(mu);
  const unsigned need = 2 * k;
  // sum_{j=0}^{n} binom(n+1, j) B_j = 0 for n >= 1
  while (b.size() <= need) {
    const auto n = static_cast<unsigned>(b.size());
    Rational acc;
    for (unsigned j = 0; j < n; ++j) acc += binomial(n + 1, j) * b[j];
    b.push_back(-acc / Rational(n + 1));
  }
  return b[need];
}

namespace detail {

inline bool is_nonpositive_integer(const BigComplex& z) {
  return z.im.is_zero() && z.re.is_integer() && z.re.sign() <= 0;
}

// log Gamma(z) with |Gamma| always exact to the working precision; the imaginary part
// (the principal branch) is only produced when want_arg is set.
inline BigComplex log_gamma_impl(const BigComplex& z_in, bool want_arg) {
  if (is_nonpositive_integer(z_in))
    throw DomainError("Gamma has a pole at " + z_in.re.str(20));
  const int outer = working_digits();
  BigComplex result;
  {
    PrecisionScope guard(outer + 10);
    const int p = working_digits();
    const BigFloat radius(0.366 * (p + 10) + 1.0);
    const BigFloat r2 = radius * radius;
    BigComplex w = rounded(z_in);
    BigComplex prod(1L);
    BigFloat argsum(0L);
    // Shift right until Stirling's series is accurate: |w| >= R and Re w >= 0.
    while (w.re.sign() < 0 || norm(w) < r2) {
      prod *= w;
      if (want_arg) argsum += arg(w);
      w.re += BigFloat(1L);
    }
    const BigFloat half(Rational(1, 2));
    BigComplex s = (w - BigComplex(half)) * log(w) - w;
    s.re += log(BigFloat(2L) * pi()) * half;
    const BigComplex winv = BigComplex(1L) / w;
    const BigComplex winv2 = winv * winv;
    BigComplex pw = winv;
    const BigFloat tiny = pow10(-(p + 5));
    BigFloat last_mag;
    for (unsigned k = 1;; ++k) {
      const Rational coeff = bernoulli_even(k) / Rational(2 * k * (2 * k - 1));
      const BigComplex term = pw * BigFloat(coeff);
      const BigFloat mag = abs(term.re) + abs(term.im);
      s += term;
      if (mag < tiny) break;
      if (k > 1 && mag > last_mag)
        throw PrecisionError("Stirling series diverged before reaching working precision");
      last_mag = mag;
      pw *= winv2;
    }
    result.re = s.re - log(abs(prod));
    result.im = want_arg ? s.im - argsum : BigFloat(0L);
  }
  return rounded(result);
}

}  // namespace detail

/// Principal branch of log Gamma(z) (cut along the negative real axis).
/// Relative error of exp(log_gamma) is well below 10^{-P+5} at working precision P.
inline BigComplex log_gamma(const BigComplex& z) { return detail::log_gamma_impl(z, true); }

/// log|Gamma(z)|, skipping the argument bookkeeping.
inline BigFloat log_abs_gamma(const BigComplex& z) { return detail::log_gamma_impl(z, false).re; }

inline BigComplex gamma(const BigComplex& z) { return exp(log_gamma(z)); }

/// Real Gamma function; poles throw DomainError.
inline BigFloat gamma(const BigFloat& x) {
  if (x.is_integer() && x.sign() <= 0) throw DomainError("Gamma has a pole at " + x.str(20));
  BigFloat r;
  mpfr_gamma(r.get(), x.get(), MPFR_RNDN);
  return r;
}

inline BigFloat gamma(const Rational& x) { return gamma(BigFloat(x)); }

/// |Gamma(z)|^2 = Gamma(z) Gamma(conj z).
inline BigFloat abs_gamma_sq(const BigComplex& z) { return exp(BigFloat(2L) * log_abs_gamma(z)); }

}  // namespace dualadd
