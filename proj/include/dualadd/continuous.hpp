#pragma once

#include <string>
#include <vector>

#include "dualadd/bigfloat.hpp"
#include "dualadd/errors.hpp"
#include "dualadd/gamma.hpp"
#include "dualadd/hypergeometric.hpp"
#include "dualadd/quadrature.hpp"
#include "dualadd/rational.hpp"

namespace dualadd {

/// Relative size |a - b| / |b| (absolute when b = 0).
inline BigFloat relative_residual(const BigComplex& a, const BigComplex& b) {
  const BigFloat d = abs(a - b);
  const BigFloat s = abs(b);
  return s.is_zero() ? d : d / s;
}

// --- Jacobi functions ------------------------------------------------------------------

/// LHS - RHS of (phi_{lambda-i} - phi_{lambda+i}) / (i lambda) = sinh^2 t/(alpha+1) phi_lambda^{(alpha+1,beta)}.
/// At lambda = 0 the undivided 2F1 contiguous relation
///   F(A,B;c;z) - F(A-1,B+1;c;z) - (B-A+1) z/c F(A,B+1;c+1;z)
/// with A = (alpha+beta+2)/2, B = (alpha+beta)/2 is returned instead.
inline BigComplex contiguous_residual(const BigFloat& lambda, const Rational& alpha,
                                      const Rational& beta, const BigFloat& t) {
  const BigFloat sh = sinh(t);
  const BigFloat sh2 = sh * sh;
  if (lambda.is_zero()) {
    const BigFloat half(Rational(1, 2));
    const BigComplex s(BigFloat(alpha + beta + 1));
    const BigComplex A = (s + BigComplex(1L)) * half, B = (s - BigComplex(1L)) * half;
    const BigComplex c(alpha + 1);
    const BigFloat z = -sh2;
    return gauss_2f1(A, B, c, z) - gauss_2f1(A - BigComplex(1L), B + BigComplex(1L), c, z) -
           (B - A + BigComplex(1L)) * BigComplex(z) / c *
               gauss_2f1(A, B + BigComplex(1L), c + BigComplex(1L), z);
  }
  const BigComplex lam(lambda);
  const BigComplex i = BigComplex::i();
  const BigComplex lhs = (phi(lam - i, alpha, beta, t) - phi(lam + i, alpha, beta, t)) / (i * lam);
  const BigComplex rhs = phi(lam, alpha + 1, beta, t) * (sh2 / BigFloat(alpha + 1));
  return lhs - rhs;
}

/// phi_{2 lambda}^{(alpha,alpha)}(t) - phi_lambda^{(alpha,-1/2)}(2t).
inline BigComplex quadratic_transform_residual(const BigFloat& lambda, const Rational& alpha,
                                               const BigFloat& t) {
  return phi(BigComplex(BigFloat(2L) * lambda), alpha, alpha, t) -
         phi(BigComplex(lambda), alpha, Rational(-1, 2), BigFloat(2L) * t);
}

// --- Conical function -------------------------------------------------------------------

struct ConicalArgs {
  BigFloat g, r, k;
};

namespace detail {
inline void require_positive_g(const ConicalArgs& a) {
  if (a.g.sign() <= 0) throw DomainError("conical function needs g > 0");
}
}  // namespace detail

/// F(g; r, 2k) = Gamma(g+ik) Gamma(g-ik) / (2 Gamma(2g)) phi_k^{(g-1/2,-1/2)}(r).
/// g must be rational-representable here only through BigFloat, so the Jacobi function is
/// evaluated through its 2F1 with c = g + 1/2.
inline BigComplex conical_f(const ConicalArgs& a) {
  detail::require_positive_g(a);
  const BigFloat half(Rational(1, 2));
  const BigComplex ik = BigComplex::i() * BigComplex(a.k);
  // phi_k^{(g-1/2,-1/2)}(r) = 2F1((g+ik)/2, (g-ik)/2; g+1/2; -sinh^2 r)
  const BigFloat sh = sinh(a.r);
  const BigComplex ph = a.r.is_zero()
                            ? BigComplex(1L)
                            : gauss_2f1((BigComplex(a.g) + ik) * half, (BigComplex(a.g) - ik) * half,
                                        BigComplex(a.g + half), -(sh * sh));
  const BigFloat pre = abs_gamma_sq(BigComplex(a.g, a.k)) / (BigFloat(2L) * gamma(BigFloat(2L) * a.g));
  return ph * pre;
}

/// Same function from Gamma(g+ik)Gamma(g-ik)/(2 Gamma(2g)) 2F1(g+ik, g-ik; g+1/2; -sinh^2(r/2)).
inline BigComplex conical_f_hypergeometric(const ConicalArgs& a) {
  detail::require_positive_g(a);
  const BigFloat half(Rational(1, 2));
  const BigComplex ik = BigComplex::i() * BigComplex(a.k);
  const BigFloat sh = sinh(a.r * half);
  const BigComplex f = gauss_2f1(BigComplex(a.g) + ik, BigComplex(a.g) - ik, BigComplex(a.g + half),
                                 -(sh * sh));
  const BigFloat pre = abs_gamma_sq(BigComplex(a.g, a.k)) / (BigFloat(2L) * gamma(BigFloat(2L) * a.g));
  return f * pre;
}

// --- Wilson orthogonality ---------------------------------------------------------------

enum class NormVariant { corrected, printed };

/// Squared norm of W_n: Gamma(n+alpha+1/2)^2 |Gamma(n+alpha+1/2+2i lambda)|^2
/// |Gamma(n+alpha+1/2+2i mu)|^2 / Gamma(2n+2alpha+1) (n+2alpha)_n n!.
/// The printed variant has Gamma(alpha+1/2)^2 in place of Gamma(n+alpha+1/2)^2.
inline BigFloat wilson_norm(unsigned n, const WilsonParams& p, NormVariant v = NormVariant::corrected) {
  const Rational base = Rational(n) + p.alpha + Rational(1, 2);
  const BigFloat g = gamma(v == NormVariant::corrected ? base : p.alpha + Rational(1, 2));
  const BigFloat two(2L);
  return g * g * abs_gamma_sq(BigComplex(BigFloat(base), two * p.lambda)) *
         abs_gamma_sq(BigComplex(BigFloat(base), two * p.mu)) /
         gamma(Rational(2 * n) + 2 * p.alpha + 1) * BigFloat(pochhammer(Rational(n) + 2 * p.alpha, n)) *
         BigFloat(factorial(n));
}

/// (1/4pi) int_R W_m W_n weight dnu for 0 <= m, n <= max_n, all in one quadrature.
inline std::vector<std::vector<BigFloat>> wilson_gram(unsigned max_n, const WilsonParams& p,
                                                      const BigFloat& tolerance) {
  const unsigned dim = max_n + 1;
  auto integrand = [&](const BigFloat& nu) {
    std::vector<BigFloat> out(dim * (dim + 1) / 2, BigFloat(0L));
    const BigFloat w = wilson_weight(nu, p);
    if (w.is_zero()) return out;
    const BigFloat nu2 = nu * nu;
    std::vector<BigFloat> W;
    for (unsigned n = 0; n < dim; ++n) W.push_back(wilson_poly(n, nu2, p));
    std::size_t idx = 0;
    for (unsigned m = 0; m < dim; ++m)
      for (unsigned n = m; n < dim; ++n) out[idx++] = W[m] * W[n] * w;
    return out;
  };
  const auto res = self_refining_integral(integrand, dim * (dim + 1) / 2, tolerance);
  const BigFloat four_pi = BigFloat(4L) * pi();
  std::vector<std::vector<BigFloat>> g(dim, std::vector<BigFloat>(dim));
  std::size_t idx = 0;
  for (unsigned m = 0; m < dim; ++m)
    for (unsigned n = m; n < dim; ++n) {
      g[m][n] = res.values[idx++] / four_pi;
      g[n][m] = g[m][n];
    }
  return g;
}

/// |gram[m][n] - delta_{mn} h_n| / sqrt(h_m h_n): relative for the diagonal, and measured on
/// the scale of the two norms off the diagonal.
inline BigFloat wilson_orthogonality_residual(const std::vector<std::vector<BigFloat>>& gram,
                                              unsigned m, unsigned n, const WilsonParams& p,
                                              NormVariant v = NormVariant::corrected) {
  const BigFloat hm = wilson_norm(m, p, v), hn = wilson_norm(n, p, v);
  const BigFloat expected = m == n ? hn : BigFloat(0L);
  return abs(gram[m][n] - expected) / sqrt(hm * hn);
}

// --- Dual product formula ---------------------------------------------------------------

/// Gamma(alpha+1/2)^2 |Gamma(alpha+1/2+2i lambda)|^2 |Gamma(alpha+1/2+2i mu)|^2 / Gamma(2alpha+1)
/// phi_{2 lambda}^{(alpha,-1/2)}(t) phi_{2 mu}^{(alpha,-1/2)}(t).
inline BigFloat dual_product_lhs(const BigFloat& t, const WilsonParams& p) {
  const BigFloat two(2L);
  const Rational mhalf(-1, 2);
  return wilson_norm(0, p) * phi(BigComplex(two * p.lambda), p.alpha, mhalf, t).re *
         phi(BigComplex(two * p.mu), p.alpha, mhalf, t).re;
}

/// (1/4pi) int_R phi_{2nu}^{(alpha,-1/2)}(t) W_n(nu^2) weight(nu) dnu.
inline BigFloat dual_integral(unsigned n, const BigFloat& t, const WilsonParams& p,
                              const BigFloat& tolerance) {
  auto integrand = [&](const BigFloat& nu) {
    const BigFloat w = wilson_weight(nu, p);
    if (w.is_zero()) return BigFloat(0L);
    BigFloat v = phi(BigComplex(BigFloat(2L) * nu), p.alpha, Rational(-1, 2), t).re * w;
    if (n > 0) v *= wilson_poly(n, nu * nu, p);
    return v;
  };
  return self_refining_integral(integrand, tolerance) / (BigFloat(4L) * pi());
}

/// Relative residual of the dual product formula at (t, lambda, mu, alpha).
inline BigFloat dual_product_residual(const BigFloat& t, const WilsonParams& p,
                                      const BigFloat& tolerance) {
  const BigFloat lhs = dual_product_lhs(t, p);
  return abs(dual_integral(0, t, p, tolerance) - lhs) / abs(lhs);
}

/// The same identity in conical-function form at g = alpha+1/2, r = t, p = 2 lambda, q = 2 mu:
///   F(g;r,2p) F(g;r,2q) = (1/8pi) int_0^inf F(g;r,2k) prod Gamma((g +- ip +- iq +- ik)/2)
///                         / (Gamma(g)^2 prod_+- Gamma(+-ik) Gamma(g +- ik)) dk.
/// Evaluated independently of the Jacobi-function route (2F1 at -sinh^2(r/2), own Gamma
/// products); returns the relative residual.
inline BigFloat conical_dual_product_residual(const BigFloat& t, const WilsonParams& p,
                                              const BigFloat& tolerance) {
  const BigFloat g(p.alpha + Rational(1, 2));
  const BigFloat two(2L), half(Rational(1, 2));
  const BigFloat pp = two * p.lambda, qq = two * p.mu;
  const BigFloat lhs = conical_f_hypergeometric({g, t, pp}).re * conical_f_hypergeometric({g, t, qq}).re;
  const BigFloat log_gamma_g = log_abs_gamma(BigComplex(g));
  auto integrand = [&](const BigFloat& k) {
    if (k.is_zero()) return BigFloat(0L);
    // The eight Gamma factors pair into four conjugate pairs (sign of k fixed to +).
    BigFloat lg(0L);
    for (int s1 : {1, -1})
      for (int s2 : {1, -1})
        lg += log_abs_gamma(BigComplex(g * half, (BigFloat(s1) * pp + BigFloat(s2) * qq + k) * half));
    lg = two * lg;
    lg -= two * log_gamma_g + two * log_abs_gamma(BigComplex(g, k));
    // 1/(Gamma(ik)Gamma(-ik)) = k sinh(pi k)/pi
    const BigFloat inv_gik = k * sinh(pi() * k) / pi();
    return conical_f_hypergeometric({g, t, k}).re * exp(lg) * inv_gik;
  };
  // (1/8pi) int_0^inf = (1/16pi) int_R for the even integrand
  const BigFloat rhs = self_refining_integral(integrand, tolerance) / (BigFloat(16L) * pi());
  return abs(rhs - lhs) / abs(lhs);
}

// --- Dual integral closed form ----------------------------------------------------------

/// Closed form of the dual integral: h_0-type Gamma factor at alpha+n (or the printed
/// Gamma(alpha+1/2)^2 variant) times sinh^{2n} t / (alpha+1)_n phi phi at alpha+n.
inline BigFloat dual_integral_closed_form(unsigned n, const BigFloat& t, const WilsonParams& p,
                                          NormVariant v = NormVariant::corrected) {
  const Rational an = p.alpha + n;
  const Rational base = an + Rational(1, 2);
  const BigFloat g = gamma(v == NormVariant::corrected ? base : p.alpha + Rational(1, 2));
  const BigFloat two(2L);
  const BigFloat pre = g * g * abs_gamma_sq(BigComplex(BigFloat(base), two * p.lambda)) *
                       abs_gamma_sq(BigComplex(BigFloat(base), two * p.mu)) /
                       gamma(2 * an + 1);
  const Rational mhalf(-1, 2);
  return pre * pow(sinh(t), 2 * static_cast<long>(n)) / BigFloat(pochhammer(p.alpha + 1, n)) *
         phi(BigComplex(two * p.lambda), an, mhalf, t).re * phi(BigComplex(two * p.mu), an, mhalf, t).re;
}

inline BigFloat dual_integral_closed_form_residual(unsigned n, const BigFloat& t, const WilsonParams& p,
                                                   const BigFloat& tolerance,
                                                   NormVariant v = NormVariant::corrected) {
  const BigFloat rhs = dual_integral_closed_form(n, t, p, v);
  return abs(dual_integral(n, t, p, tolerance) - rhs) / abs(rhs);
}

namespace detail {

// prod_q Gamma(q + i y) Gamma(q - i y) / (Gamma(2 i y) Gamma(-2 i y)) at complex y.
inline BigComplex wilson_gamma_ratio(const std::vector<BigComplex>& params, const BigComplex& y) {
  const BigComplex iy = BigComplex::i() * y;
  BigComplex lg(0L);
  for (const auto& q : params) lg += log_gamma(q + iy) + log_gamma(q - iy);
  const BigComplex two_iy = BigComplex(2L) * iy;
  lg -= log_gamma(two_iy) + log_gamma(-two_iy);
  return exp(lg);
}

}  // namespace detail

enum class ShiftVariant { corrected, printed };

/// Relative residual of the Wilson backward shift written with x +- i/2:
///   G(a..d; x) W_n(x^2; a..d) = G(a+1/2..; x+i/2)/(2i(x+i/2)) W_{n-1}((x+i/2)^2; a+1/2..)
///                              - G(a+1/2..; x-i/2)/(2i(x-i/2)) W_{n-1}((x-i/2)^2; a+1/2..).
/// The printed variant uses W_n on the right. Needs n >= 1 for the corrected form.
inline BigFloat wilson_shift_residual(unsigned n, const BigFloat& x, const WilsonParams& p,
                                      ShiftVariant v = ShiftVariant::corrected) {
  if (n < 1) throw DomainError("backward shift needs n >= 1");
  const std::vector<BigComplex> base = p.list();
  const BigComplex half_c(BigFloat(Rational(1, 2)));
  std::vector<BigComplex> up;
  for (const auto& q : base) up.push_back(q + half_c);
  const BigComplex X(x);
  const BigComplex lhs =
      detail::wilson_gamma_ratio(base, X) * wilson_poly_complex(n, X, p.a, p.b, p.c, p.d);
  const unsigned deg = v == ShiftVariant::corrected ? n - 1 : n;
  const BigComplex i = BigComplex::i();
  const BigComplex xp = X + i * half_c, xm = X - i * half_c;
  const BigComplex two_i = BigComplex(2L) * i;
  const BigComplex rhs =
      detail::wilson_gamma_ratio(up, xp) / (two_i * xp) * wilson_poly_complex(deg, xp, up[0], up[1], up[2], up[3]) -
      detail::wilson_gamma_ratio(up, xm) / (two_i * xm) * wilson_poly_complex(deg, xm, up[0], up[1], up[2], up[3]);
  return relative_residual(rhs, lhs);
}

// --- Dual addition formula for Gegenbauer functions ------------------------------------

struct SeriesCheck {
  BigFloat residual;                 // |phi_{4nu}^{(a,a)}(t) - partial sum|
  unsigned terms = 0;                // number of terms summed
  bool tail_decreasing = true;       // last five term magnitudes strictly decreasing
  bool reached_target = false;       // last term below the stopping threshold
  std::vector<BigFloat> magnitudes;  // |term_k|
};

/// Sums sinh(2t)^{2k} / ((alpha+1)_k (k+2alpha)_k k!) phi_{4lambda}^{(alpha+k,alpha+k)}(t)
/// phi_{4mu}^{(alpha+k,alpha+k)}(t) W_k(nu^2) until a term is below term_threshold or
/// `budget` terms are used, and compares with phi_{4nu}^{(alpha,alpha)}(t). Convergence is
/// observed, not assumed: tail behaviour is reported in the result.
inline SeriesCheck dual_addition_function_check(const BigFloat& t, const BigFloat& nu,
                                                const WilsonParams& p, const BigFloat& term_threshold,
                                                unsigned budget) {
  SeriesCheck out;
  const BigFloat four(4L);
  const BigComplex lhs = phi(BigComplex(four * nu), p.alpha, p.alpha, t);
  const BigFloat s2 = sinh(BigFloat(2L) * t);
  const BigFloat s2sq = s2 * s2;
  const BigFloat nu2 = nu * nu;
  BigFloat sum(0L);
  for (unsigned k = 0; k < budget; ++k) {
    const Rational ak = p.alpha + k;
    const Rational denom = pochhammer(p.alpha + 1, k) * pochhammer(Rational(k) + 2 * p.alpha, k) * factorial(k);
    BigFloat term = pow(s2sq, static_cast<long>(k)) / BigFloat(denom);
    term *= phi(BigComplex(four * p.lambda), ak, ak, t).re * phi(BigComplex(four * p.mu), ak, ak, t).re;
    if (k > 0) term *= wilson_poly(k, nu2, p);
    sum += term;
    out.magnitudes.push_back(abs(term));
    out.terms = k + 1;
    if (k >= 1 && abs(term) < term_threshold) {
      out.reached_target = true;
      break;
    }
    if (t.is_zero()) {  // every further term carries sinh(0)
      out.reached_target = true;
      break;
    }
  }
  const auto& m = out.magnitudes;
  if (m.size() >= 5) {
    for (std::size_t i = m.size() - 4; i < m.size(); ++i)
      if (!(m[i] < m[i - 1])) out.tail_decreasing = false;
  }
  out.residual = abs(lhs - BigComplex(sum));
  return out;
}

}  // namespace dualadd
