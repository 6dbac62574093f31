#pragma once

#include <optional>
#include <vector>

#include "dualadd/classical.hpp"
#include "dualadd/errors.hpp"
#include "dualadd/racah.hpp"
#include "dualadd/rational.hpp"
#include "dualadd/unipoly.hpp"

namespace dualadd {

/// (alpha, l, m) with alpha > -1/2 and l >= m.
class DualSetting {
 public:
  DualSetting(Rational alpha, unsigned l, unsigned m) : alpha_(std::move(alpha)), l_(l), m_(m) {
    detail::require_above_minus_half(alpha_, "alpha");
    if (l < m)
      throw DomainError("dual setting needs l >= m, got l=" + std::to_string(l) +
                        ", m=" + std::to_string(m));
  }
  const Rational& alpha() const { return alpha_; }
  unsigned l() const { return l_; }
  unsigned m() const { return m_; }

 private:
  Rational alpha_;
  unsigned l_, m_;
};

/// Racah system (alpha-1/2, alpha-1/2, -m-1, -l-alpha-1/2) with N = m.
inline RacahSystem specialized_racah(const DualSetting& s) {
  const Rational half(1, 2);
  return {s.alpha() - half, s.alpha() - half, -Rational(s.l()) - s.alpha() - half, s.m()};
}

namespace detail {

inline void require_j(unsigned j, const DualSetting& s, const char* what = "j") {
  if (j > s.m())
    throw DomainError(std::string(what) + " = " + std::to_string(j) + " outside {0.." +
                      std::to_string(s.m()) + "}");
}

// (alpha+k)/(alpha+k/2), read as 1 at k = 0 (0/0 when alpha = 0).
inline Rational ratio_factor(const Rational& alpha, unsigned k) {
  if (k == 0) return Rational(1);
  return (alpha + k) / (alpha + Rational(static_cast<long>(k), 2));
}

inline UniPoly x2_minus_1() { return UniPoly(std::vector<Rational>{-1, 0, 1}); }
inline UniPoly one_minus_x2() { return UniPoly(std::vector<Rational>{1, 0, -1}); }

}  // namespace detail

/// Coefficient of R_{l+m-2j} in the expansion of R_l R_m.
inline Rational linearization_coeff(unsigned j, const DualSetting& s) {
  detail::require_j(j, s);
  const Rational& a = s.alpha();
  const unsigned l = s.l(), m = s.m();
  const Rational ah = a + Rational(1, 2);
  const Rational two_a1 = 2 * a + 1;
  Rational c = factorial(l) * factorial(m) / (pochhammer(two_a1, l) * pochhammer(two_a1, m));
  c *= (Rational(l + m) + ah - Rational(2 * j)) / ah;
  c *= pochhammer(ah, j) * pochhammer(ah, l - j) * pochhammer(ah, m - j) *
       pochhammer(two_a1, l + m - j);
  c /= factorial(j) * factorial(l - j) * factorial(m - j) *
       pochhammer(a + Rational(3, 2), l + m - j);
  return c;
}

/// linearization_coeff minus w(j)/h_0 of the specialized Racah system.
inline Rational coeff_as_racah_weight_residual(unsigned j, const DualSetting& s) {
  const RacahSystem sys = specialized_racah(s);
  return linearization_coeff(j, s) - racah_weight(j, sys) / racah_h0(sys);
}

/// (x^2-1)^n R_{l-n}^{(alpha+n)} R_{m-n}^{(alpha+n)}, the n-th building block.
inline UniPoly dual_basis(unsigned n, const DualSetting& s) {
  detail::require_j(n, s, "n");
  const Rational an = s.alpha() + n;
  return detail::x2_minus_1().pow(n) * gegenbauer_r(s.l() - n, an) * gegenbauer_r(s.m() - n, an);
}

/// sum_j w(j) R_{l+m-2j} R_n(j) with the specialized Racah system.
inline UniPoly s_direct(unsigned n, const DualSetting& s) {
  detail::require_j(n, s, "n");
  const RacahSystem sys = specialized_racah(s);
  UniPoly acc;
  for (unsigned j = 0; j <= s.m(); ++j)
    acc += gegenbauer_r(s.l() + s.m() - 2 * j, s.alpha()) *
           (racah_weight(j, sys) * racah_eval(n, j, sys));
  return acc;
}

/// Scalar in front of dual_basis(n) in the closed form of s_direct(n).
inline Rational s_closed_prefactor(unsigned n, const DualSetting& s) {
  detail::require_j(n, s, "n");
  const Rational& a = s.alpha();
  const unsigned l = s.l(), m = s.m();
  const Rational ah = a + Rational(1, 2);
  const Rational two_a1 = 2 * a + 1;
  const Rational a1n = pochhammer(a + 1, n);
  return pochhammer(two_a1, l + n) * pochhammer(two_a1, m + n) * pochhammer(ah, l + m) /
         (pow(Rational(2), 2 * static_cast<long>(n)) * pochhammer(ah, l) * pochhammer(ah, m) *
          pochhammer(two_a1, l + m) * a1n * a1n);
}

inline UniPoly s_closed(unsigned n, const DualSetting& s) {
  return dual_basis(n, s) * s_closed_prefactor(n, s);
}

/// Coefficient c_n of dual_basis(n) * R_n(j) in the dual addition expansion.
inline Rational dual_addition_coefficient(unsigned n, const DualSetting& s) {
  detail::require_j(n, s, "n");
  const Rational& a = s.alpha();
  const Rational a1n = pochhammer(a + 1, n);
  return detail::ratio_factor(a, n) * pochhammer(-Rational(s.l()), n) *
         pochhammer(-Rational(s.m()), n) * pochhammer(2 * a + 1, n) /
         (pow(Rational(2), 2 * static_cast<long>(n)) * a1n * a1n * factorial(n));
}

/// The m+1 terms c_n dual_basis(n) R_n(j) of the expansion of R_{l+m-2j}.
inline std::vector<UniPoly> dual_addition_terms(unsigned j, const DualSetting& s) {
  detail::require_j(j, s);
  const RacahSystem sys = specialized_racah(s);
  std::vector<UniPoly> terms;
  terms.reserve(s.m() + 1);
  for (unsigned n = 0; n <= s.m(); ++n)
    terms.push_back(dual_basis(n, s) * (dual_addition_coefficient(n, s) * racah_eval(n, j, sys)));
  return terms;
}

namespace detail {

inline UniPoly sum(const std::vector<UniPoly>& terms) {
  UniPoly acc;
  for (const auto& t : terms) acc += t;
  return acc;
}

}  // namespace detail

/// R_{l+m-2j} minus the dual addition expansion; the zero polynomial when the identity holds.
inline UniPoly dual_addition_residual(unsigned j, const DualSetting& s) {
  return gegenbauer_r(s.l() + s.m() - 2 * j, s.alpha()) - detail::sum(dual_addition_terms(j, s));
}

/// j = 0 case written without any Racah factor.
inline UniPoly dual_addition_j0_residual(const DualSetting& s) {
  UniPoly rhs;
  for (unsigned n = 0; n <= s.m(); ++n) rhs += dual_basis(n, s) * dual_addition_coefficient(n, s);
  return gegenbauer_r(s.l() + s.m(), s.alpha()) - rhs;
}

/// j = m terms in the binomial form (1-x^2)^n with (l+2alpha+1)_n, from the endpoint value.
inline std::vector<UniPoly> dual_addition_jm_terms(const DualSetting& s) {
  const Rational& a = s.alpha();
  std::vector<UniPoly> terms;
  for (unsigned n = 0; n <= s.m(); ++n) {
    const Rational a1n = pochhammer(a + 1, n);
    const Rational c = binomial(s.m(), n) * detail::ratio_factor(a, n) *
                       pochhammer(Rational(s.l()) + 2 * a + 1, n) * pochhammer(2 * a + 1, n) /
                       (pow(Rational(2), 2 * static_cast<long>(n)) * a1n * a1n);
    const Rational an = a + n;
    terms.push_back(detail::one_minus_x2().pow(n) * gegenbauer_r(s.l() - n, an) *
                    gegenbauer_r(s.m() - n, an) * c);
  }
  return terms;
}

inline UniPoly dual_addition_jm_residual(const DualSetting& s) {
  return gegenbauer_r(s.l() - s.m(), s.alpha()) - detail::sum(dual_addition_jm_terms(s));
}

/// Terms of the expansion of 1 = sum_n (...) (1-x^2)^n R_{m-n}^{(alpha+n)}(x)^2, obtained
/// as the l = m, j = m instance of the general expansion (Racah factor at the endpoint).
inline std::vector<UniPoly> self_dual_terms(unsigned m, const Rational& alpha) {
  return dual_addition_terms(m, DualSetting(alpha, m, m));
}

inline UniPoly self_dual_residual(unsigned m, const Rational& alpha) {
  return UniPoly::constant(1) - detail::sum(self_dual_terms(m, alpha));
}

/// <S_n, R_{l+m-2j}> (mass-normalized) minus w(j) (h_{l+m-2j}/h_0) R_n(j).
inline Rational integral_identity_residual(unsigned n, unsigned j, const DualSetting& s) {
  detail::require_j(n, s, "n");
  detail::require_j(j, s);
  const RacahSystem sys = specialized_racah(s);
  const unsigned deg = s.l() + s.m() - 2 * j;
  const Rational lhs = inner_product(s_direct(n, s), gegenbauer_r(deg, s.alpha()), s.alpha());
  return lhs - racah_weight(j, sys) * norm_ratio(deg, s.alpha()) * racah_eval(n, j, sys);
}

/// S_n / h_n, the n-th Fourier-Racah coefficient of R_{l+m-2j}, minus c_n dual_basis(n).
inline UniPoly fourier_racah_residual(unsigned n, const DualSetting& s) {
  const RacahSystem sys = specialized_racah(s);
  const Rational hn = racah_h0(sys) * racah_norm_ratio(n, sys);
  return s_direct(n, s) * (Rational(1) / hn) - dual_basis(n, s) * dual_addition_coefficient(n, s);
}

/// The second terminating 4F3(-m+n, -m-n-2a, j-m, l-j+a+1/2; -m, -m-a+1/2, l-m+1; 1).
inline Rational whipple_second_series(unsigned n, unsigned j, const DualSetting& s) {
  detail::require_j(n, s, "n");
  detail::require_j(j, s);
  const Rational& a = s.alpha();
  const Rational l(s.l()), m(s.m());
  const Rational half(1, 2);
  const Rational p1 = -m + n, p2 = -m - Rational(n) - 2 * a, p3 = Rational(j) - m,
                 p4 = l - Rational(j) + a + half;
  const Rational q1 = -m, q2 = -m - a + half, q3 = l - m + 1;
  Rational term(1), acc(1);
  for (unsigned k = 1; k <= s.m(); ++k) {
    const long km1 = k - 1;
    term *= (p1 + km1) * (p2 + km1) * (p3 + km1) * (p4 + km1);
    term /= (q1 + km1) * (q2 + km1) * (q3 + km1) * Rational(k);
    acc += term;
  }
  return acc;
}

/// Saalschutz closed form of whipple_second_series at n = 0.
inline Rational whipple_second_series_n0(unsigned j, const DualSetting& s) {
  detail::require_j(j, s);
  const Rational& a = s.alpha();
  const unsigned len = s.m() - j;
  const Rational half(1, 2);
  return pochhammer(Rational(s.l()) + 2 * a + 1, len) *
         pochhammer(half - a - Rational(s.m()) + j, len) /
         (pochhammer(Rational(s.l() - s.m() + 1), len) * pochhammer(a + half + j, len));
}

struct WhippleConstants {
  Rational first;   // ratio against the specialized Racah value
  Rational second;  // ratio against the second 4F3, rescaled by its n = 0 value
};

/// Checks that the weighted integral of R_{l-n}^{(a+n)} R_{m-n}^{(a+n)} R_{l+m-2j}^{(a)}
/// is, for every j, a j-independent multiple of w(j) (h_{l+m-2j}/h_0) times each 4F3.
/// Throws IdentityViolationError if the ratio varies with j.
inline WhippleConstants whipple_proportionality(unsigned n, const DualSetting& s) {
  detail::require_j(n, s, "n");
  const RacahSystem sys = specialized_racah(s);
  const Rational an = s.alpha() + n;
  const UniPoly pair = gegenbauer_r(s.l() - n, an) * gegenbauer_r(s.m() - n, an);
  std::optional<Rational> first, second;
  auto agree = [&](std::optional<Rational>& slot, const Rational& v, const char* which,
                   unsigned j) {
    if (!slot) {
      slot = v;
    } else if (*slot != v) {
      throw IdentityViolationError(std::string(which) + " proportionality ratio changes at j=" +
                                   std::to_string(j) + ": " + slot->str() + " vs " + v.str());
    }
  };
  for (unsigned j = 0; j <= s.m(); ++j) {
    const unsigned deg = s.l() + s.m() - 2 * j;
    const Rational integral = inner_product(pair, gegenbauer_r(deg, s.alpha()), an);
    const Rational scale = racah_weight(j, sys) * norm_ratio(deg, s.alpha());
    const Rational f1 = racah_eval(n, j, sys);
    if (!f1.is_zero()) {
      agree(first, integral / (scale * f1), "first", j);
    } else if (!integral.is_zero()) {
      throw IdentityViolationError("integral nonzero where the first 4F3 vanishes, j=" +
                                   std::to_string(j));
    }
    const Rational f2 = whipple_second_series(n, j, s);
    if (!f2.is_zero()) {
      agree(second, integral * whipple_second_series(0, j, s) / (scale * f2), "second", j);
    } else if (!integral.is_zero()) {
      throw IdentityViolationError("integral nonzero where the second 4F3 vanishes, j=" +
                                   std::to_string(j));
    }
  }
  return {first.value_or(Rational(0)), second.value_or(Rational(0))};
}

}  // namespace dualadd
