#pragma once

#include <vector>

#include "dualadd/classical.hpp"
#include "dualadd/rational.hpp"
#include "dualadd/surd_poly.hpp"
#include "dualadd/unipoly.hpp"

namespace dualadd {

/// Degree n and parameter alpha > -1/2 of the addition and product formulas.
class AdditionInstance {
 public:
  AdditionInstance(unsigned n, Rational alpha) : n_(n), alpha_(std::move(alpha)) {
    detail::require_above_minus_half(alpha_, "alpha");
  }
  unsigned n() const { return n_; }
  const Rational& alpha() const { return alpha_; }

 private:
  unsigned n_;
  Rational alpha_;
};

/// binom(n,k) (a+k)/(a+k/2) (n+2a+1)_k (2a+1)_k / (2^{2k} (a+1)_k^2); k = 0 gives 1.
inline Rational addition_coefficient(unsigned n, unsigned k, const Rational& alpha) {
  const Rational a1k = pochhammer(alpha + 1, k);
  const Rational ratio =
      k == 0 ? Rational(1) : (alpha + k) / (alpha + Rational(static_cast<long>(k), 2));
  return binomial(n, k) * ratio * pochhammer(Rational(n) + 2 * alpha + 1, k) *
         pochhammer(2 * alpha + 1, k) /
         (pow(Rational(2), 2 * static_cast<long>(k)) * a1k * a1k);
}

/// R_n(xy + uvt) reduced in the surd ring.
inline SurdPoly addition_lhs(const AdditionInstance& inst) {
  const SurdPoly arg = SurdPoly::var_x() * SurdPoly::var_y() +
                       SurdPoly::var_u() * SurdPoly::var_v() * SurdPoly::var_t();
  return compose(gegenbauer_r(inst.n(), inst.alpha()), arg);
}

/// The k-th summand a_k u^k R_{n-k}^{(a+k)}(x) v^k R_{n-k}^{(a+k)}(y), without the t factor.
inline SurdPoly addition_pair_term(const AdditionInstance& inst, unsigned k) {
  const UniPoly r = gegenbauer_r(inst.n() - k, inst.alpha() + k);
  return SurdPoly::var_u().pow(k) * SurdPoly::from_uni(r, SurdPoly::Var::x) *
         SurdPoly::var_v().pow(k) * SurdPoly::from_uni(r, SurdPoly::Var::y) *
         addition_coefficient(inst.n(), k, inst.alpha());
}

inline SurdPoly addition_rhs(const AdditionInstance& inst) {
  SurdPoly acc;
  const Rational t_param = inst.alpha() - Rational(1, 2);
  for (unsigned k = 0; k <= inst.n(); ++k)
    acc += addition_pair_term(inst, k) *
           SurdPoly::from_uni(gegenbauer_r(k, t_param), SurdPoly::Var::t);
  return acc;
}

/// Normalized moments of (1-t^2)^{alpha-1/2}: t^{2k} -> (1/2)_k/(alpha+1)_k, odd -> 0.
inline Rational product_weight_moment(unsigned k, const Rational& alpha) {
  if (k % 2) return Rational(0);
  return even_moment(k / 2, alpha - Rational(1, 2));
}

/// R_n(x) R_n(y) minus the t-average of R_n(xy + uvt).
inline SurdPoly product_formula_residual(const AdditionInstance& inst) {
  const UniPoly r = gegenbauer_r(inst.n(), inst.alpha());
  const SurdPoly lhs = SurdPoly::from_uni(r, SurdPoly::Var::x) * SurdPoly::from_uni(r, SurdPoly::Var::y);
  return lhs - addition_lhs(inst).integrate_t(
                   [&](unsigned k) { return product_weight_moment(k, inst.alpha()); });
}

inline std::vector<SurdPoly> t_one_terms(const AdditionInstance& inst) {
  std::vector<SurdPoly> terms;
  for (unsigned k = 0; k <= inst.n(); ++k) terms.push_back(addition_pair_term(inst, k));
  return terms;
}

/// R_n(xy + uv) minus the t = 1 expansion.
inline SurdPoly t_one_residual(const AdditionInstance& inst) {
  SurdPoly r = addition_lhs(inst).substitute_t(Rational(1));
  for (const auto& t : t_one_terms(inst)) r -= t;
  return r;
}

/// At x = cos th1, y = cos th2 (rational points on the circle) the t = 1 left side
/// must equal R_n(cos(th1 - th2)) = R_n(xy + uv) evaluated directly.
inline Rational t_one_angle_residual(const AdditionInstance& inst, const PythagoreanPoint& p1,
                                     const PythagoreanPoint& p2) {
  const Rational cos_diff = p1.x * p2.x + p1.u * p2.u;
  SurdBindings b;
  b.x = p1.x;
  b.u = p1.u;
  b.y = p2.x;
  b.v = p2.u;
  return addition_lhs(inst).substitute_t(Rational(1)).evaluate(b) -
         gegenbauer_r(inst.n(), inst.alpha())(cos_diff);
}

/// Terms a_k (1-x^2)^k R_{n-k}^{(a+k)}(x)^2 of the diagonal t = 1 formula, as polynomials in x.
inline std::vector<UniPoly> sum_of_squares_terms(unsigned n, const Rational& alpha) {
  const AdditionInstance inst(n, alpha);
  std::vector<UniPoly> out;
  for (const auto& t : t_one_terms(inst)) out.push_back(*t.diagonal().as_uni_x());
  return out;
}

/// 1 minus the diagonal t = 1 expansion, in the variables x, u.
inline SurdPoly sum_of_squares_residual(unsigned n, const Rational& alpha) {
  const AdditionInstance inst(n, alpha);
  SurdPoly r = SurdPoly::constant(1);
  for (const auto& t : t_one_terms(inst)) r -= t.diagonal();
  return r;
}

/// R_k^{(-1/2,-1/2)}(cos phi) - cos(k phi) at the rational point cos phi = x, sin phi = u;
/// cos(k phi) is Re((x + iu)^k), computed with exact complex rationals.
inline Rational chebyshev_residual(unsigned k, const PythagoreanPoint& p) {
  Rational re(1), im(0);
  for (unsigned i = 0; i < k; ++i) {
    Rational nre = re * p.x - im * p.u;
    im = re * p.u + im * p.x;
    re = std::move(nre);
  }
  return gegenbauer_r(k, Rational(-1, 2))(p.x) - re;
}

}  // namespace dualadd
