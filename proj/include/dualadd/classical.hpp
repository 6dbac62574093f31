#pragma once

#include "dualadd/errors.hpp"
#include "dualadd/rational.hpp"
#include "dualadd/unipoly.hpp"

namespace dualadd {

namespace detail {

inline void require_above_minus_one(const Rational& a, const char* what) {
  if (a <= Rational(-1)) throw DomainError(std::string(what) + " must exceed -1, got " + a.str());
}

inline void require_above_minus_half(const Rational& a, const char* what) {
  if (a <= Rational(-1, 2))
    throw DomainError(std::string(what) + " must exceed -1/2, got " + a.str());
}

}  // namespace detail

/// Gegenbauer parameter alpha with alpha > -1.
class GegenbauerContext {
 public:
  explicit GegenbauerContext(Rational alpha) : alpha_(std::move(alpha)) {
    detail::require_above_minus_one(alpha_, "alpha");
  }
  const Rational& alpha() const { return alpha_; }
  void require_above_minus_half() const { detail::require_above_minus_half(alpha_, "alpha"); }

 private:
  Rational alpha_;
};

/// Jacobi polynomial normalized to 1 at x = 1, built from the terminating
/// 2F1(-n, n+a+b+1; a+1; (1-x)/2).
inline UniPoly jacobi_r(unsigned n, const Rational& alpha, const Rational& beta) {
  detail::require_above_minus_one(alpha, "alpha");
  detail::require_above_minus_one(beta, "beta");
  const UniPoly half_one_minus_x(std::vector<Rational>{Rational(1, 2), Rational(-1, 2)});
  UniPoly result, power = UniPoly::constant(1);
  Rational coeff(1);
  const Rational upper = Rational(n) + alpha + beta + 1;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) {
      coeff *= (Rational(k) - 1 - n) * (upper + k - 1) / ((alpha + k) * Rational(k));
      power *= half_one_minus_x;
    }
    result += power * coeff;
  }
  return result;
}

/// R_n^{(alpha,alpha)} from the explicit power series in 2x.
/// At alpha = -1/2 the series is 0/0 termwise and the 2F1 form is used instead.
inline UniPoly gegenbauer_r(unsigned n, const Rational& alpha) {
  detail::require_above_minus_one(alpha, "alpha");
  if (alpha == Rational(-1, 2)) return jacobi_r(n, alpha, alpha);
  const Rational lead = factorial(n) / pochhammer(2 * alpha + 1, n);
  std::vector<Rational> c(n + 1);
  const Rational a_half = alpha + Rational(1, 2);
  for (unsigned k = 0; 2 * k <= n; ++k) {
    const unsigned d = n - 2 * k;
    Rational term = pochhammer(a_half, n - k) / (factorial(k) * factorial(d)) * pow(Rational(2), d);
    c[d] = (k % 2 ? -term : term) * lead;
  }
  return UniPoly(std::move(c));
}

/// Physicists' Hermite polynomial, leading coefficient 2^n.
inline UniPoly hermite(unsigned n) {
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; 2 * k <= n; ++k) {
    const unsigned d = n - 2 * k;
    Rational term = factorial(n) / (factorial(k) * factorial(d)) * pow(Rational(2), d);
    c[d] = k % 2 ? -term : term;
  }
  return UniPoly(std::move(c));
}

/// Normalized even moment of (1-x^2)^alpha on [-1,1]: (1/2)_k / (alpha+3/2)_k.
inline Rational even_moment(unsigned k, const Rational& alpha) {
  detail::require_above_minus_one(alpha, "alpha");
  return pochhammer(Rational(1, 2), k) / pochhammer(alpha + Rational(3, 2), k);
}

/// <p, q> against (1-x^2)^alpha dx divided by the total mass of the weight.
inline Rational inner_product(const UniPoly& p, const UniPoly& q, const Rational& alpha) {
  detail::require_above_minus_one(alpha, "alpha");
  const UniPoly prod = p * q;
  const auto& c = prod.coefficients();
  Rational acc, moment(1);
  // moment(k+1) = moment(k) * (k+1/2) / (k+alpha+3/2)
  for (std::size_t d = 0; d < c.size(); d += 2) {
    const auto k = static_cast<long>(d / 2);
    if (k > 0) moment *= (Rational(k) - Rational(1, 2)) / (alpha + Rational(1, 2) + Rational(k));
    acc += c[d] * moment;
  }
  return acc;
}

/// h_n / h_0 for the Gegenbauer weight.
inline Rational norm_ratio(unsigned n, const Rational& alpha) {
  detail::require_above_minus_one(alpha, "alpha");
  if (n == 0) return Rational(1);
  return (Rational(n) + 2 * alpha + 1) / (Rational(2 * n) + 2 * alpha + 1) * factorial(n) /
         pochhammer(2 * alpha + 2, n);
}

/// Leading coefficient (n+a+b+1)_n / (2^n (a+1)_n) of jacobi_r.
inline Rational jacobi_r_leading(unsigned n, const Rational& alpha, const Rational& beta) {
  return pochhammer(Rational(n) + alpha + beta + 1, n) /
         (pow(Rational(2), n) * pochhammer(alpha + 1, n));
}

/// R_n - R_{n-2} - (n+alpha-1/2)/(alpha+1) (x^2-1) R_{n-2}^{(alpha+1,alpha+1)}; zero for n >= 2.
inline UniPoly difference_residual(unsigned n, const Rational& alpha) {
  if (n < 2) throw DomainError("difference formula needs n >= 2");
  detail::require_above_minus_one(alpha, "alpha");
  const UniPoly x2m1(std::vector<Rational>{-1, 0, 1});
  const Rational c = (Rational(n) + alpha - Rational(1, 2)) / (alpha + 1);
  return gegenbauer_r(n, alpha) - gegenbauer_r(n - 2, alpha) -
         x2m1 * gegenbauer_r(n - 2, alpha + 1) * c;
}

}  // namespace dualadd
