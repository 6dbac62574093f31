#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dualadd/classical.hpp"
#include "dualadd/dual_addition.hpp"
#include "dualadd/errors.hpp"
#include "dualadd/racah.hpp"
#include "dualadd/rational.hpp"
#include "dualadd/surd_poly.hpp"
#include "dualadd/unipoly.hpp"

namespace dualadd {

/// Indices (l, m) with l >= m.
class HermiteSetting {
 public:
  HermiteSetting(unsigned l, unsigned m) : l_(l), m_(m) {
    if (l < m)
      throw DomainError("Hermite setting needs l >= m, got l=" + std::to_string(l) +
                        ", m=" + std::to_string(m));
  }
  unsigned l() const { return l_; }
  unsigned m() const { return m_; }

 private:
  unsigned l_, m_;
};

/// H_n(xy + vt) - sum_k binom(n,k) H_{n-k}(x) H_k(t) v^k y^{n-k}, with v^2 = 1 - y^2.
inline SurdPoly hermite_addition_residual(unsigned n) {
  const SurdPoly arg = SurdPoly::var_x() * SurdPoly::var_y() + SurdPoly::var_v() * SurdPoly::var_t();
  SurdPoly r = compose(hermite(n), arg);
  for (unsigned k = 0; k <= n; ++k)
    r -= SurdPoly::from_uni(hermite(n - k), SurdPoly::Var::x) *
         SurdPoly::from_uni(hermite(k), SurdPoly::Var::t) * SurdPoly::var_v().pow(k) *
         SurdPoly::var_y().pow(n - k) * binomial(n, k);
  return r;
}

/// Normalized Gaussian moments: t^{2k} -> (1/2)_k, odd powers -> 0.
inline Rational gaussian_moment(unsigned k) {
  return k % 2 ? Rational(0) : pochhammer(Rational(1, 2), k / 2);
}

/// H_n(x) y^n minus the Gaussian t-average of H_n(xy + vt).
inline SurdPoly hermite_product_residual(unsigned n) {
  const SurdPoly arg = SurdPoly::var_x() * SurdPoly::var_y() + SurdPoly::var_v() * SurdPoly::var_t();
  const SurdPoly avg = compose(hermite(n), arg).integrate_t([](unsigned k) { return gaussian_moment(k); });
  return SurdPoly::from_uni(hermite(n), SurdPoly::Var::x) * SurdPoly::var_y().pow(n) - avg;
}

namespace detail {

inline Rational neg_poch(unsigned a, unsigned n) { return pochhammer(-Rational(a), n); }

// (-2)^n (-l)_n (-m)_n, the weight of H_{l-n} H_{m-n} in both Hermite expansions.
inline Rational hermite_pair_weight(unsigned n, const HermiteSetting& s) {
  return pow(Rational(-2), n) * neg_poch(s.l(), n) * neg_poch(s.m(), n);
}

inline UniPoly hermite_pair(unsigned n, const HermiteSetting& s) {
  return hermite(s.l() - n) * hermite(s.m() - n);
}

}  // namespace detail

/// 2^j (-l)_j (-m)_j H_{l+m-2j} - sum_{n=j}^m (-n)_j/n! (-2)^n (-l)_n (-m)_n H_{l-n} H_{m-n}.
inline UniPoly hermite_dual_addition_residual(unsigned j, const HermiteSetting& s) {
  if (j > s.m()) throw DomainError("j outside {0..m}");
  UniPoly r = hermite(s.l() + s.m() - 2 * j) *
              (pow(Rational(2), j) * detail::neg_poch(s.l(), j) * detail::neg_poch(s.m(), j));
  for (unsigned n = j; n <= s.m(); ++n)
    r -= detail::hermite_pair(n, s) *
         (detail::neg_poch(n, j) / factorial(n) * detail::hermite_pair_weight(n, s));
  return r;
}

/// sum_{j=n}^m (-j)_n/j! 2^j (-l)_j (-m)_j H_{l+m-2j} - (-2)^n (-l)_n (-m)_n H_{l-n} H_{m-n}.
inline UniPoly hermite_dual_inverse_residual(unsigned n, const HermiteSetting& s) {
  if (n > s.m()) throw DomainError("n outside {0..m}");
  UniPoly r;
  for (unsigned j = n; j <= s.m(); ++j)
    r += hermite(s.l() + s.m() - 2 * j) *
         (detail::neg_poch(j, n) / factorial(j) * pow(Rational(2), j) *
          detail::neg_poch(s.l(), j) * detail::neg_poch(s.m(), j));
  return r - detail::hermite_pair(n, s) * detail::hermite_pair_weight(n, s);
}

/// H_{l+m} = sum_n (-2)^n (-l)_n (-m)_n / n! H_{l-n} H_{m-n}, the j = 0 form.
inline UniPoly hermite_j0_residual(const HermiteSetting& s) {
  UniPoly r = hermite(s.l() + s.m());
  for (unsigned n = 0; n <= s.m(); ++n)
    r -= detail::hermite_pair(n, s) * (detail::hermite_pair_weight(n, s) / factorial(n));
  return r;
}

/// sum_j 2^j (-l)_j (-m)_j / j! H_{l+m-2j} = H_l H_m, the linearization formula.
inline UniPoly hermite_linearization_residual(const HermiteSetting& s) {
  UniPoly r;
  for (unsigned j = 0; j <= s.m(); ++j)
    r += hermite(s.l() + s.m() - 2 * j) * (pow(Rational(2), j) * detail::neg_poch(s.l(), j) *
                                           detail::neg_poch(s.m(), j) / factorial(j));
  return r - hermite(s.l()) * hermite(s.m());
}

enum class BiorthogonalityKernel {
  as_printed,   // (-n)_j/n! * (-j)_k/k!
  corrected,    // (-j)_n/j! * (-k)_j/k!, the kernel that turns one Hermite expansion into the other
  racah_limit,  // (-j)_n/n! * (-k)_j/j!, what the rescaled Racah orthogonality tends to
};

inline std::string_view kernel_name(BiorthogonalityKernel k) {
  switch (k) {
    case BiorthogonalityKernel::as_printed: return "as-printed";
    case BiorthogonalityKernel::corrected: return "corrected";
    case BiorthogonalityKernel::racah_limit: return "racah-limit";
  }
  return "?";
}

/// The finite kernel sum over j = 0..max(n, k); every other j contributes 0.
inline Rational biorthogonality_value(unsigned n, unsigned k, BiorthogonalityKernel kernel) {
  Rational acc;
  const unsigned top = n > k ? n : k;
  for (unsigned j = 0; j <= top; ++j) {
    switch (kernel) {
      case BiorthogonalityKernel::as_printed:
        acc += detail::neg_poch(n, j) / factorial(n) * detail::neg_poch(j, k) / factorial(k);
        break;
      case BiorthogonalityKernel::corrected:
        acc += detail::neg_poch(j, n) / factorial(j) * detail::neg_poch(k, j) / factorial(k);
        break;
      case BiorthogonalityKernel::racah_limit:
        acc += detail::neg_poch(j, n) / factorial(n) * detail::neg_poch(k, j) / factorial(j);
        break;
    }
  }
  return acc;
}

/// Substitutes the dual addition expansion of every 2^j (-l)_j (-m)_j H_{l+m-2j} into the
/// left side of the inverse expansion for index n, treating the products H_{l-k} H_{m-k}
/// as independent symbols. Returns, per symbol k, the composed coefficient minus the one
/// required by the inverse expansion; all zero iff the inversion works symbolically.
inline std::vector<Rational> hermite_inversion_residual(unsigned n, const HermiteSetting& s) {
  if (n > s.m()) throw DomainError("n outside {0..m}");
  std::vector<Rational> coeff(s.m() + 1);
  for (unsigned j = n; j <= s.m(); ++j) {
    const Rational outer = detail::neg_poch(j, n) / factorial(j);
    for (unsigned k = j; k <= s.m(); ++k)
      coeff[k] += outer * detail::neg_poch(k, j) / factorial(k) * detail::hermite_pair_weight(k, s);
  }
  coeff[n] -= detail::hermite_pair_weight(n, s);
  return coeff;
}

// ---------------------------------------------------------------------------------------
// Large-alpha limits in exact arithmetic.

enum class LimitTarget { eq52, eq53, eq54j, eq54n, eq55, eq56, eq40_term };

inline std::string_view limit_target_name(LimitTarget t) {
  switch (t) {
    case LimitTarget::eq52: return "eq52";
    case LimitTarget::eq53: return "eq53";
    case LimitTarget::eq54j: return "eq54j";
    case LimitTarget::eq54n: return "eq54n";
    case LimitTarget::eq55: return "eq55";
    case LimitTarget::eq56: return "eq56";
    case LimitTarget::eq40_term: return "eq40-term";
  }
  return "?";
}

/// Index bundle for limit checks; unused fields are ignored. With x set, polynomial
/// deviations are evaluated there, otherwise their largest coefficient is used.
struct LimitIndices {
  unsigned n = 0, j = 0, l = 0, m = 0;
  std::optional<Rational> x;
};

struct LimitReport {
  std::vector<Rational> alphas;
  std::vector<Rational> deviations;  // signed scalar deviation per alpha
  Rational worst_ratio;              // max |d_{i+1}| / |d_i| over steps with d_i != 0
  bool decays = true;                // |d_{i+1}| <= 3/5 |d_i| at every step
  std::string limit;                 // the limiting value or pairing, for reporting
};

/// 3/5: first-order decay halves the deviation per doubling of alpha, plus slack.
inline Rational decay_bound() { return {3, 5}; }

namespace detail {

// sum_k c_k alpha^{(e-k)/2} x^k for a polynomial whose nonzero c_k all have e - k even.
inline UniPoly rescale_even(const UniPoly& p, const Rational& alpha, long e) {
  std::vector<Rational> c(p.coefficients().size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    const Rational& ck = p.coefficients()[k];
    if (ck.is_zero()) continue;
    const long d = e - static_cast<long>(k);
    if (d % 2 != 0) throw DomainError("rescaling needs matching parity");
    c[k] = ck * pow(alpha, d / 2);
  }
  return UniPoly(std::move(c));
}

inline Rational poly_deviation(const UniPoly& p, const std::optional<Rational>& x) {
  if (x) return p(*x);
  Rational best;
  for (const auto& c : p.coefficients())
    if (c.abs() > best.abs()) best = c;
  return best;
}

inline void require_le(unsigned a, unsigned b, const char* what) {
  if (a > b) throw DomainError(what);
}

}  // namespace detail

/// Limit value for the target as a polynomial (constant for scalar targets).
inline UniPoly limit_value(LimitTarget target, const LimitIndices& idx) {
  using detail::neg_poch;
  switch (target) {
    case LimitTarget::eq52:
      return hermite(idx.n) * pow(Rational(2), -static_cast<long>(idx.n));
    case LimitTarget::eq53:
      return UniPoly::monomial(idx.n);
    case LimitTarget::eq54j:
      return UniPoly::constant(pow(Rational(2), idx.j) * neg_poch(idx.n, idx.j) /
                               (neg_poch(idx.l, idx.j) * neg_poch(idx.m, idx.j)));
    case LimitTarget::eq54n:
      return UniPoly::constant(pow(Rational(2), idx.n) * neg_poch(idx.j, idx.n) /
                               (neg_poch(idx.l, idx.n) * neg_poch(idx.m, idx.n)));
    case LimitTarget::eq55:
      return UniPoly::constant(neg_poch(idx.l, idx.j) * neg_poch(idx.m, idx.j) /
                               (pow(Rational(2), idx.j) * factorial(idx.j)));
    case LimitTarget::eq56:
      return UniPoly::constant(pow(Rational(2), idx.n) * factorial(idx.n) /
                               (neg_poch(idx.l, idx.n) * neg_poch(idx.m, idx.n)));
    case LimitTarget::eq40_term: {
      // n-th Hermite term of the j-th dual addition formula, divided by 2^{l+m-j} (-l)_j (-m)_j.
      const HermiteSetting hs(idx.l, idx.m);
      const Rational c = neg_poch(idx.n, idx.j) / factorial(idx.n) *
                         detail::hermite_pair_weight(idx.n, hs) /
                         (pow(Rational(2), static_cast<long>(idx.l + idx.m - idx.j)) *
                          neg_poch(idx.l, idx.j) * neg_poch(idx.m, idx.j));
      return detail::hermite_pair(idx.n, hs) * c;
    }
  }
  return {};
}

/// The rescaled pre-limit quantity at a given alpha.
inline UniPoly prelimit_value(LimitTarget target, const LimitIndices& idx, const Rational& alpha) {
  const auto racah = [&] {
    detail::require_le(idx.m, idx.l, "limit indices need m <= l");
    detail::require_le(idx.j, idx.m, "limit indices need j <= m");
    detail::require_le(idx.n, idx.m, "limit indices need n <= m");
    return specialized_racah(DualSetting(alpha, idx.l, idx.m));
  };
  switch (target) {
    case LimitTarget::eq52:
      return detail::rescale_even(gegenbauer_r(idx.n, alpha), alpha, idx.n);
    case LimitTarget::eq53:
      return gegenbauer_r(idx.n, alpha);
    case LimitTarget::eq54j:
      return UniPoly::constant(racah_eval(idx.n, idx.j, racah()) *
                               pow(alpha, -static_cast<long>(idx.j)));
    case LimitTarget::eq54n:
      return UniPoly::constant(racah_eval(idx.n, idx.j, racah()) *
                               pow(alpha, -static_cast<long>(idx.n)));
    case LimitTarget::eq55:
      return UniPoly::constant(racah_weight(idx.j, racah()) * pow(alpha, idx.j));
    case LimitTarget::eq56: {
      const RacahSystem sys = racah();
      return UniPoly::constant(racah_h0(sys) * racah_norm_ratio(idx.n, sys) *
                               pow(alpha, -static_cast<long>(idx.n)));
    }
    case LimitTarget::eq40_term: {
      const DualSetting ds(alpha, idx.l, idx.m);
      const UniPoly term = dual_basis(idx.n, ds) * (dual_addition_coefficient(idx.n, ds) *
                                                    racah_eval(idx.n, idx.j, racah()));
      return detail::rescale_even(term, alpha,
                                  static_cast<long>(idx.l + idx.m) - 2 * static_cast<long>(idx.j));
    }
  }
  return {};
}

namespace detail {

inline void finish_decay(LimitReport& rep) {
  for (std::size_t i = 0; i + 1 < rep.deviations.size(); ++i) {
    const Rational a = rep.deviations[i].abs(), b = rep.deviations[i + 1].abs();
    if (a.is_zero()) {
      if (!b.is_zero()) rep.decays = false;
      continue;
    }
    const Rational ratio = b / a;
    if (ratio > rep.worst_ratio) rep.worst_ratio = ratio;
    if (ratio > decay_bound()) rep.decays = false;
  }
}

inline void require_increasing(const std::vector<Rational>& alphas) {
  if (alphas.size() < 2) throw DomainError("limit check needs at least two alpha values");
  for (std::size_t i = 0; i + 1 < alphas.size(); ++i)
    if (!(alphas[i] < alphas[i + 1])) throw DomainError("alpha sequence must be strictly increasing");
}

}  // namespace detail

/// alpha = 2^s for each s.
inline std::vector<Rational> dyadic_alphas(const std::vector<int>& powers) {
  std::vector<Rational> out;
  out.reserve(powers.size());
  for (int s : powers) out.push_back(pow(Rational(2), s));
  return out;
}

inline LimitReport limit_rate_check(LimitTarget target, const LimitIndices& idx,
                                    const std::vector<Rational>& alphas) {
  detail::require_increasing(alphas);
  LimitReport rep;
  rep.alphas = alphas;
  const UniPoly lim = limit_value(target, idx);
  rep.limit = lim.str();
  for (const auto& a : alphas)
    rep.deviations.push_back(detail::poly_deviation(prelimit_value(target, idx, a) - lim, idx.x));
  detail::finish_decay(rep);
  return rep;
}

/// Throws LimitViolationError unless the report decays.
inline void require_decay(const LimitReport& rep, std::string_view what) {
  if (!rep.decays)
    throw LimitViolationError(std::string(what) + ": deviation ratio " + rep.worst_ratio.str() +
                              " exceeds " + decay_bound().str());
}

/// Rescaled Racah orthogonality sum
///   sum_j [alpha^{-n} R_n(j)] [alpha^{-j} R_k(j)] [alpha^j w(j)/h_0] (-l)_n (-m)_n / (2^n n!)
/// against its limit sum_j (-j)_n/n! (-k)_j/j! = delta_{n,k}.
inline LimitReport racah_to_biorthogonality_limit(unsigned n, unsigned k, unsigned l, unsigned m,
                                                  const std::vector<Rational>& alphas) {
  if (n > m || k > m || m > l) throw DomainError("need n, k <= m <= l");
  detail::require_increasing(alphas);
  LimitReport rep;
  rep.alphas = alphas;
  const Rational lim = biorthogonality_value(n, k, BiorthogonalityKernel::racah_limit);
  rep.limit = std::string(kernel_name(BiorthogonalityKernel::racah_limit)) + " = " + lim.str();
  const Rational norm = detail::neg_poch(l, n) * detail::neg_poch(m, n) /
                        (pow(Rational(2), n) * factorial(n));
  for (const auto& a : alphas) {
    const RacahSystem sys = specialized_racah(DualSetting(a, l, m));
    const Rational h0 = racah_h0(sys);
    Rational acc;
    for (unsigned j = 0; j <= m; ++j)
      acc += racah_eval(n, j, sys) * pow(a, -static_cast<long>(n)) * racah_eval(k, j, sys) *
             pow(a, -static_cast<long>(j)) * racah_weight(j, sys) * pow(a, j) / h0;
    rep.deviations.push_back(acc * norm - lim);
  }
  detail::finish_decay(rep);
  return rep;
}

}  // namespace dualadd
