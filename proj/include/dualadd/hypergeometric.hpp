#pragma once

#include <span>
#include <string>
#include <vector>

#include "dualadd/bigfloat.hpp"
#include "dualadd/errors.hpp"
#include "dualadd/gamma.hpp"
#include "dualadd/rational.hpp"

namespace dualadd {

enum class Gauss2F1Path { automatic, direct, pfaff };

namespace detail {

inline constexpr long kTermBudget = 1000000;

// Power series of 2F1 at real z with |z| < 1. Sets `loss` to the number of decimal
// digits lost to cancellation (log10 of max |term| / |sum|).
inline BigComplex gauss_series(const BigComplex& a, const BigComplex& b, const BigComplex& c,
                               const BigFloat& z, long& loss) {
  const int p = working_digits();
  const BigFloat eps = pow10(-p);
  BigComplex sum(1L), term(1L);
  BigFloat max_term(1L);
  int small_run = 0;
  for (long k = 0; k < kTermBudget; ++k) {
    const BigComplex kk{BigFloat(k)};
    const BigComplex num = (a + kk) * (b + kk);
    const BigComplex den = (c + kk) * BigComplex(BigFloat(k + 1));
    term = term * num / den * z;
    sum += term;
    const BigFloat mag = abs(term.re) + abs(term.im);
    if (mag > max_term) max_term = mag;
    const BigFloat smag = abs(sum.re) + abs(sum.im);
    // The next ratio must also be contracting, so a temporarily small term cannot stop us.
    const bool shrinking = term.re.is_zero() && term.im.is_zero() ? true : abs(num) * abs(z) < abs(den);
    if (mag <= eps * smag && shrinking) {
      if (++small_run == 3) {
        loss = smag.is_zero() ? p : decimal_exponent(max_term / smag);
        return sum;
      }
    } else {
      small_run = 0;
    }
  }
  throw PrecisionError("2F1 series did not converge within " + std::to_string(kTermBudget) +
                       " terms at z=" + z.str(20));
}

inline void require_not_pole(const BigComplex& c, const char* what) {
  if (is_nonpositive_integer(c))
    throw DomainError(std::string(what) + " is a nonpositive integer: " + c.re.str(20));
}

}  // namespace detail

/// Gauss 2F1(a, b; c; z) for real z <= 0. The direct series is used on (-1, 0], the Pfaff
/// transformation (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)) for z <= -1, unless a path is forced.
/// Summation runs with 10 guard digits and is repeated at higher precision if more than
/// 8 digits cancel; the relative error is at most 10^{-P+5}.
inline BigComplex gauss_2f1(const BigComplex& a, const BigComplex& b, const BigComplex& c,
                            const BigFloat& z, Gauss2F1Path path = Gauss2F1Path::automatic) {
  detail::require_not_pole(c, "2F1 lower parameter c");
  if (z.sign() > 0) throw DomainError("2F1 is only evaluated for z <= 0, got " + z.str(20));
  if (z.is_zero()) return BigComplex(1L);
  if (path == Gauss2F1Path::automatic)
    path = z <= BigFloat(-1L) ? Gauss2F1Path::pfaff : Gauss2F1Path::direct;
  if (path == Gauss2F1Path::direct && z <= BigFloat(-1L))
    throw DomainError("direct 2F1 series needs z > -1");

  const int outer = working_digits();
  int extra = 10;
  for (int attempt = 0; attempt < 4; ++attempt) {
    BigComplex value;
    long loss = 0;
    {
      PrecisionScope guard(outer + extra);
      if (path == Gauss2F1Path::direct) {
        value = detail::gauss_series(a, b, c, rounded(z), loss);
      } else {
        const BigFloat zz = rounded(z);
        const BigFloat one_minus = BigFloat(1L) - zz;
        const BigFloat w = zz / (zz - BigFloat(1L));
        const BigComplex s = detail::gauss_series(a, c - b, c, w, loss);
        const BigComplex prefactor = exp(-rounded(a) * BigComplex(log(one_minus)));
        value = prefactor * s;
      }
    }
    if (loss <= extra - 2) return rounded(value);
    extra = static_cast<int>(loss) + 12;
  }
  throw PrecisionError("2F1 cancellation could not be compensated at z=" + z.str(20));
}

/// Terminating pFq(-n, a_2..a_p; b_1..b_q; z) summed over k = 0..n. The first upper
/// parameter is -n; the remaining ones and the lower ones are arbitrary (lower ones must
/// not vanish in the first n factors).
inline BigComplex terminating_pfq(unsigned n, std::span<const BigComplex> upper,
                                  std::span<const BigComplex> lower, const BigComplex& z) {
  BigComplex term(1L), sum(1L);
  for (unsigned k = 1; k <= n; ++k) {
    const BigFloat km1(static_cast<long>(k) - 1);
    BigComplex num = BigComplex(BigFloat(static_cast<long>(k) - 1 - static_cast<long>(n)));
    for (const auto& u : upper) num *= u + BigComplex(km1);
    BigComplex den = BigComplex(BigFloat(static_cast<long>(k)));
    for (const auto& l : lower) den *= l + BigComplex(km1);
    term = term * num * z / den;
    sum += term;
  }
  return sum;
}

inline BigComplex pochhammer(const BigComplex& a, unsigned n) {
  BigComplex acc(1L);
  for (unsigned i = 0; i < n; ++i) acc *= a + BigComplex(BigFloat(static_cast<long>(i)));
  return acc;
}

/// Jacobi function phi_lambda^{(alpha,beta)}(t) = 2F1((a+b+1+i lambda)/2, (a+b+1-i lambda)/2;
/// alpha+1; -sinh^2 t). Exactly 1 at t = 0.
inline BigComplex phi(const BigComplex& lambda, const Rational& alpha, const Rational& beta,
                      const BigFloat& t) {
  if (t.is_zero()) return BigComplex(1L);
  const BigFloat half(Rational(1, 2));
  const BigComplex base(BigFloat(alpha + beta + 1));
  const BigComplex il = BigComplex::i() * lambda;
  const BigFloat sh = sinh(t);
  return gauss_2f1((base + il) * half, (base - il) * half, BigComplex(alpha + 1), -(sh * sh));
}

/// The four parameters +-i lambda +- i mu + alpha/2 + 1/4, ordered
/// (+,+), (+,-), (-,+), (-,-): a+b = alpha+1/2+2i lambda, a+c = alpha+1/2+2i mu, a+d = b+c = alpha+1/2.
struct WilsonParams {
  BigFloat lambda, mu;
  Rational alpha;
  BigComplex a, b, c, d;

  WilsonParams(BigFloat lam, BigFloat m, Rational al)
      : lambda(std::move(lam)), mu(std::move(m)), alpha(std::move(al)) {
    if (alpha <= Rational(-1, 2)) throw DomainError("Wilson parameters need alpha > -1/2");
    const BigFloat base(alpha / 2 + Rational(1, 4));
    a = {base, lambda + mu};
    b = {base, lambda - mu};
    c = {base, mu - lambda};
    d = {base, -lambda - mu};
  }
  /// Same lambda, mu with alpha shifted: parameters + shift/2.
  WilsonParams shifted(const Rational& delta_alpha) const { return {lambda, mu, alpha + delta_alpha}; }
  std::vector<BigComplex> list() const { return {a, b, c, d}; }
};

/// Wilson polynomial W_n(x^2; a, b, c, d) at a complex point x (only x^2 matters).
inline BigComplex wilson_poly_complex(unsigned n, const BigComplex& x, const BigComplex& a,
                                      const BigComplex& b, const BigComplex& c, const BigComplex& d) {
  const BigComplex ix = BigComplex::i() * x;
  const std::vector<BigComplex> upper{
      BigComplex(BigFloat(static_cast<long>(n) - 1)) + a + b + c + d, a + ix, a - ix};
  const std::vector<BigComplex> lower{a + b, a + c, a + d};
  return terminating_pfq(n, upper, lower, BigComplex(1L)) * pochhammer(a + b, n) *
         pochhammer(a + c, n) * pochhammer(a + d, n);
}

/// W_n(x^2) for real x^2 with the conjugate-pair parameters; the imaginary part of the
/// evaluation must vanish to 10^{-P+10} relative, otherwise PrecisionError.
inline BigFloat wilson_poly(unsigned n, const BigFloat& xsq, const WilsonParams& p) {
  if (xsq.sign() < 0) throw DomainError("wilson_poly takes x^2 >= 0");
  const BigComplex w = wilson_poly_complex(n, BigComplex(sqrt(xsq)), p.a, p.b, p.c, p.d);
  if (abs(w.im) > pow10(-working_digits() + 10) * max(abs(w.re), BigFloat(1L)))
    throw PrecisionError("Wilson polynomial has a non-negligible imaginary part: " + w.im.str());
  return w.re;
}

/// |Gamma(i nu +- i lambda +- i mu + alpha/2 + 1/4) / Gamma(2 i nu)|^2, using
/// 1/|Gamma(2 i nu)|^2 = 2 nu sinh(2 pi nu) / pi, so the value at nu = 0 is 0.
inline BigFloat wilson_weight(const BigFloat& nu, const WilsonParams& p) {
  if (nu.is_zero()) return BigFloat(0L);
  const BigComplex inu = BigComplex::i() * BigComplex(nu);
  BigFloat lg(0L);
  for (const auto& q : {p.a, p.b, p.c, p.d}) lg += log_abs_gamma(q + inu);
  const BigFloat two_pi_nu = BigFloat(2L) * pi() * nu;
  return exp(BigFloat(2L) * lg) * BigFloat(2L) * nu * sinh(two_pi_nu) / pi();
}

}  // namespace dualadd
