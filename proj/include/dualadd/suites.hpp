#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "dualadd/addition_classical.hpp"
#include "dualadd/classical.hpp"
#include "dualadd/config.hpp"
#include "dualadd/continuous.hpp"
#include "dualadd/dual_addition.hpp"
#include "dualadd/hermite_limit.hpp"
#include "dualadd/racah.hpp"
#include "dualadd/report.hpp"

namespace dualadd {

/// One unit of work. `id` and `params` label the error report if `run` throws.
struct Task {
  std::string id;
  Parameters params;
  Mode mode = Mode::exact;
  std::function<std::vector<VerificationReport>()> run;
};

using TaskList = std::vector<Task>;

struct IdentityInfo {
  std::string_view id;
  std::string_view suite;
  std::string_view description;
};

/// Every identity id the suites can emit, with a one-line description.
inline const std::vector<IdentityInfo>& identity_catalog() {
  static const std::vector<IdentityInfo> catalog{
      // dual-addition
      {"eq17", "dual-addition", "linearization coefficient equals w(j)/h0 of the specialized Racah system"},
      {"eq18", "dual-addition", "linearization formula R_l R_m = sum_j c_j R_{l+m-2j}"},
      {"eq18-positive", "dual-addition", "linearization coefficients are strictly positive"},
      {"eq40", "dual-addition", "dual addition formula: R_{l+m-2j} as a Racah-weighted sum"},
      {"eq40-j0", "dual-addition", "j = 0 corollary (Racah factor identically 1)"},
      {"eq40-jm", "dual-addition", "j = m corollary via the endpoint value"},
      {"eq43", "dual-addition", "self-dual case l = m = j: 1 as a sum of squares"},
      {"eq43-eq49-terms", "dual-addition", "term sequences of eq43 and eq49 (n = m) are identical"},
      {"eq45", "dual-addition", "closed form of the sum S_n equals its direct evaluation"},
      {"eq58", "dual-addition", "integral identity <S_n, R_{l+m-2j}> = w(j) h_{l+m-2j} R_n(j)"},
      {"eq59-valid", "dual-addition", "specialized Racah parameters pass validation"},
      {"fourier-racah", "dual-addition", "Racah-orthogonality inversion of S_n recovers the eq40 coefficients"},
      {"whipple", "dual-addition", "weighted integral is proportional to both 4F3 series, constant over j"},
      // classical-addition
      {"chebyshev", "classical-addition", "R_k^{(-1/2,-1/2)}(cos phi) = cos(k phi) at rational points"},
      {"eq23", "classical-addition", "difference formula for Gegenbauer polynomials"},
      {"eq27-eq50", "classical-addition", "Jacobi 2F1 construction equals Gegenbauer power series"},
      {"eq28", "classical-addition", "leading coefficient of R_n^{(a,b)}"},
      {"eq41", "classical-addition", "product formula (exact t-integration)"},
      {"eq42", "classical-addition", "addition formula in the surd ring"},
      {"eq44", "classical-addition", "addition formula at t = 1"},
      {"eq44-angles", "classical-addition", "t = 1 left side equals R_n(cos(th1 - th2)) at rational angles"},
      {"eq49", "classical-addition", "t = 1, x = y: 1 as a sum of squares"},
      {"eq49-bound", "classical-addition", "|R_n(x)| <= 1 at sampled rational points of [-1, 1]"},
      {"eq57", "classical-addition", "orthogonality with exact norms h_n/h_0"},
      // racah
      {"eq20", "racah", "backward shift equation, both boundary conventions"},
      {"eq21", "racah", "summation by parts for 100 random integer f"},
      {"eq24-origin", "racah", "R_n(0) = 1"},
      {"eq25", "racah", "endpoint value R_n(N) in closed form"},
      {"eq29", "racah", "closed form of h0 equals the direct weight sum"},
      {"eq30", "racah", "Gram matrix is diagonal with the closed-form norms"},
      // hermite
      {"eq46", "hermite", "dual addition formula for Hermite polynomials"},
      {"eq46-eq47-inversion", "hermite", "substituting eq46 into eq47 reproduces eq47 symbolically"},
      {"eq46-j0", "hermite", "j = 0 case of eq46"},
      {"eq47", "hermite", "inverse (Hermite) expansion"},
      {"eq47-n0", "hermite", "n = 0 case of eq47: Hermite linearization formula"},
      {"eq48-corrected", "hermite", "corrected biorthogonality kernel gives delta_{n,k}"},
      {"eq48-printed", "hermite", "kernel as printed gives -1 at (n,k) = (2,1): pinned erratum"},
      {"eq48-racah-limit", "hermite", "pairing obtained as the limit of Racah orthogonality"},
      {"eq40-term", "hermite", "large-alpha limit of an eq40 term reproduces the eq46 term"},
      {"eq52", "hermite", "large-alpha limit of rescaled Gegenbauer polynomials is H_n/2^n"},
      {"eq53", "hermite", "large-alpha limit of R_n(x) is x^n"},
      {"eq54j", "hermite", "large-alpha limit of alpha^-j R_n(j)"},
      {"eq54n", "hermite", "large-alpha limit of alpha^-n R_n(j)"},
      {"eq55", "hermite", "large-alpha limit of alpha^j w(j)"},
      {"eq56", "hermite", "large-alpha limit of alpha^-n h_n"},
      {"hermite-addition", "hermite", "Hermite addition formula in the surd ring"},
      {"hermite-product", "hermite", "Hermite product formula (Gaussian t-integration)"},
      {"racah-biorth", "hermite", "rescaled Racah orthogonality tends to the biorthogonality pairing"},
      // continuous
      {"eq4", "continuous", "conical function: Jacobi-function route equals the 2F1(-sinh^2(r/2)) route"},
      {"eq4-symmetry", "continuous", "conical function is even in k"},
      {"eq6", "continuous", "dual product formula in conical-function form"},
      {"eq7", "continuous", "dual product formula for Jacobi functions (quadrature)"},
      {"eq7-eq8-t0", "continuous", "t = 0 of eq7 coincides with m = n = 0 of eq8"},
      {"eq8", "continuous", "Wilson orthogonality with corrected norms (quadrature)"},
      {"eq8-printed", "continuous", "Wilson norm as printed is off for n >= 1: pinned erratum"},
      {"eq13", "continuous", "dual integral I_n equals its closed form"},
      {"eq13-printed", "continuous", "closed form with the printed Gamma factor fails for n >= 1: pinned erratum"},
      {"eq15", "continuous", "dual addition formula for Gegenbauer functions (truncated series)"},
      {"eq16", "continuous", "quadratic transformation of Jacobi functions"},
      {"eq32", "continuous", "|phi| <= 1 for alpha >= beta >= -1/2"},
      {"eq33", "continuous", "Wilson backward shift equation (corrected degree n-1)"},
      {"eq33-printed", "continuous", "backward shift with W_n on the right fails: pinned erratum"},
      {"eq34", "continuous", "contiguous relation for Jacobi functions"},
      {"gamma-duplication", "continuous", "Legendre duplication formula for complex Gamma"},
      {"gamma-factorial", "continuous", "log Gamma at integers"},
      {"gamma-reflection", "continuous", "|Gamma(1/2 + i nu)|^2 = pi / cosh(pi nu)"},
      {"oracle-2f1", "continuous", "terminating 2F1: big-float vs exact rational"},
      {"oracle-racah", "continuous", "Racah 4F3: big-float vs exact rational"},
      {"oracle-wilson", "continuous", "Wilson 4F3 at lambda = mu = 0: big-float vs exact rational"},
      {"quadrature-gaussian", "continuous", "quadrature self-test: integral of exp(-x^2)"},
      {"quadrature-stability", "continuous", "dual integral unchanged at doubled precision and finer step"},
  };
  return catalog;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"dual-addition", "classical-addition", "racah", "hermite",
                                              "continuous", "all"};
  return names;
}

namespace detail {

inline std::string num(unsigned v) { return std::to_string(v); }

inline Rational max_abs(const std::vector<Rational>& v) {
  Rational m;
  for (const auto& x : v) m = std::max(m, x.abs());
  return m;
}

using Reports = std::vector<VerificationReport>;

inline Task exact_task(std::string id, Parameters params, std::function<Reports()> run) {
  return Task{std::move(id), std::move(params), Mode::exact, std::move(run)};
}

inline Task numeric_task(std::string id, Parameters params, std::function<Reports()> run) {
  return Task{std::move(id), std::move(params), Mode::numeric, std::move(run)};
}

inline Parameters with(Parameters p, std::string key, std::string value) {
  p.emplace_back(std::move(key), std::move(value));
  return p;
}

// Deterministic rational points on the unit circle, s = k/(k+3) and -(k+1)/(2k+5).
inline std::vector<PythagoreanPoint> sample_points(unsigned count) {
  std::vector<PythagoreanPoint> out;
  for (unsigned k = 0; out.size() < count; ++k) {
    out.push_back(pythagorean_point(Rational(static_cast<long>(k), static_cast<long>(k) + 3)));
    if (out.size() < count)
      out.push_back(pythagorean_point(Rational(-static_cast<long>(k) - 1, 2 * static_cast<long>(k) + 5)));
  }
  return out;
}

}  // namespace detail

// --- dual-addition ---------------------------------------------------------------------

inline TaskList dual_addition_tasks(const Config& cfg) {
  using detail::num;
  TaskList tasks;
  for (const auto& alpha : cfg.alphas) {
    for (unsigned l = 0; l <= cfg.l_max; ++l) {
      for (unsigned m = 0; m <= std::min(l, cfg.m_max); ++m) {
        const Parameters base{{"alpha", alpha.str()}, {"l", num(l)}, {"m", num(m)}};
        const DualSetting s(alpha, l, m);
        auto per_j = [&](std::string id, std::string key, auto fn) {
          tasks.push_back(detail::exact_task(id, base, [=] {
            detail::Reports out;
            for (unsigned j = 0; j <= s.m(); ++j)
              out.push_back(exact_report(id, detail::with(base, key, num(j)), fn(j, s)));
            return out;
          }));
        };
        auto single = [&](std::string id, auto fn) {
          tasks.push_back(detail::exact_task(id, base, [=] {
            return detail::Reports{exact_report(id, base, fn(s))};
          }));
        };
        per_j("eq40", "j", [](unsigned j, const DualSetting& d) { return dual_addition_residual(j, d); });
        per_j("eq45", "n", [](unsigned n, const DualSetting& d) { return s_direct(n, d) - s_closed(n, d); });
        per_j("eq17", "j", [](unsigned j, const DualSetting& d) { return coeff_as_racah_weight_residual(j, d); });
        per_j("eq58", "n", [](unsigned n, const DualSetting& d) {
          std::vector<Rational> r;
          for (unsigned j = 0; j <= d.m(); ++j) r.push_back(integral_identity_residual(n, j, d));
          return detail::max_abs(r);
        });
        per_j("fourier-racah", "n", [](unsigned n, const DualSetting& d) { return fourier_racah_residual(n, d); });
        per_j("whipple", "n", [](unsigned n, const DualSetting& d) {
          whipple_proportionality(n, d);  // throws IdentityViolationError when the ratio varies
          return Rational(0);
        });
        single("eq18", [](const DualSetting& d) {
          UniPoly r = gegenbauer_r(d.l(), d.alpha()) * gegenbauer_r(d.m(), d.alpha());
          for (unsigned j = 0; j <= d.m(); ++j)
            r -= gegenbauer_r(d.l() + d.m() - 2 * j, d.alpha()) * linearization_coeff(j, d);
          return r;
        });
        // residual: the smallest coefficient if some coefficient is not positive, else 0
        single("eq18-positive", [](const DualSetting& d) {
          Rational worst;
          for (unsigned j = 0; j <= d.m(); ++j) {
            const Rational c = linearization_coeff(j, d);
            if (c.sign() <= 0 && (worst.is_zero() || c < worst)) worst = c.is_zero() ? Rational(-1) : c;
          }
          return worst;
        });
        single("eq40-j0", [](const DualSetting& d) { return dual_addition_j0_residual(d); });
        single("eq40-jm", [](const DualSetting& d) { return dual_addition_jm_residual(d); });
        // residual: number of zero denominator factors
        single("eq59-valid", [](const DualSetting& d) {
          return Rational(static_cast<long>(specialized_racah(d).defects().size()));
        });
      }
    }
    for (unsigned m = 0; m <= std::min(cfg.l_max, cfg.m_max); ++m) {
      const Parameters base{{"alpha", alpha.str()}, {"m", num(m)}};
      tasks.push_back(detail::exact_task("eq43", base, [=] {
        return detail::Reports{exact_report("eq43", base, self_dual_residual(m, alpha))};
      }));
      // residual: number of positions where the two term sequences differ
      tasks.push_back(detail::exact_task("eq43-eq49-terms", base, [=] {
        const auto a = self_dual_terms(m, alpha);
        const auto b = sum_of_squares_terms(m, alpha);
        long diff = static_cast<long>(std::max(a.size(), b.size()) - std::min(a.size(), b.size()));
        for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k)
          if (!(a[k] == b[k])) ++diff;
        return detail::Reports{exact_report("eq43-eq49-terms", base, Rational(diff))};
      }));
    }
  }
  return tasks;
}

// --- classical-addition ----------------------------------------------------------------

inline TaskList classical_addition_tasks(const Config& cfg) {
  using detail::num;
  TaskList tasks;
  const auto points = detail::sample_points(50);
  for (const auto& alpha : cfg.alphas) {
    for (unsigned n = 0; n <= cfg.l_max; ++n) {
      const Parameters base{{"alpha", alpha.str()}, {"n", num(n)}};
      auto single = [&](std::string id, auto fn) {
        tasks.push_back(detail::exact_task(id, base, [=] {
          return detail::Reports{exact_report(id, base, fn(AdditionInstance(n, alpha)))};
        }));
      };
      single("eq42", [](const AdditionInstance& i) { return addition_lhs(i) - addition_rhs(i); });
      single("eq41", [](const AdditionInstance& i) { return product_formula_residual(i); });
      single("eq44", [](const AdditionInstance& i) { return t_one_residual(i); });
      single("eq49", [](const AdditionInstance& i) { return sum_of_squares_residual(i.n(), i.alpha()); });
      single("eq44-angles", [points](const AdditionInstance& i) {
        std::vector<Rational> r;
        for (std::size_t k = 0; k + 1 < 20; k += 2) r.push_back(t_one_angle_residual(i, points[k], points[k + 1]));
        return detail::max_abs(r);
      });
    }
    for (unsigned n = 0; n <= cfg.classical_n_max; ++n) {
      const Parameters base{{"alpha", alpha.str()}, {"n", num(n)}};
      auto single = [&](std::string id, auto fn) {
        tasks.push_back(detail::exact_task(id, base, [=] {
          return detail::Reports{exact_report(id, base, fn(n, alpha))};
        }));
      };
      single("eq27-eq50", [](unsigned k, const Rational& a) { return jacobi_r(k, a, a) - gegenbauer_r(k, a); });
      single("eq28", [](unsigned k, const Rational& a) {
        const UniPoly p = jacobi_r(k, a, a);
        return p.coefficients().at(k) - jacobi_r_leading(k, a, a);
      });
      single("eq57", [](unsigned k, const Rational& a) {
        const UniPoly rn = gegenbauer_r(k, a);
        std::vector<Rational> r{inner_product(rn, rn, a) - norm_ratio(k, a)};
        for (unsigned j = 0; j < k; ++j) r.push_back(inner_product(gegenbauer_r(j, a), rn, a));
        return detail::max_abs(r);
      });
      if (n >= 2)
        single("eq23", [](unsigned k, const Rational& a) { return difference_residual(k, a); });
      // residual: largest excess of |R_n(x)| over 1
      single("eq49-bound", [points](unsigned k, const Rational& a) {
        const UniPoly rn = gegenbauer_r(k, a);
        Rational excess;
        for (const auto& p : points) {
          for (const Rational& x : {p.x, p.u, -p.u}) {
            const Rational over = rn(x).abs() - 1;
            if (over > excess) excess = over;
          }
        }
        return excess;
      });
    }
  }
  for (unsigned k = 0; k <= 6; ++k) {
    const Parameters base{{"k", num(k)}};
    tasks.push_back(detail::exact_task("chebyshev", base, [=] {
      std::vector<Rational> r;
      for (const auto& p : points) r.push_back(chebyshev_residual(k, p));
      return detail::Reports{exact_report("chebyshev", base, detail::max_abs(r))};
    }));
  }
  return tasks;
}

// --- racah -----------------------------------------------------------------------------

/// The validated sample: dual-addition specializations plus pseudo-random rational systems
/// with N <= 8, all free of zero denominators and usable with the backward shift.
inline std::vector<RacahSystem> racah_sample_systems(std::size_t count = 20) {
  std::vector<RacahSystem> out;
  std::vector<std::string> seen;
  auto add = [&](const RacahSystem& s) {
    if (out.size() >= count || !supports_backward_shift(s)) return;
    if (std::find(seen.begin(), seen.end(), s.str()) != seen.end()) return;
    seen.push_back(s.str());
    out.push_back(s);
  };
  const std::vector<std::tuple<Rational, unsigned, unsigned>> dual{
      {Rational(0), 3, 2}, {Rational(1, 2), 4, 3}, {Rational(1), 5, 5}, {Rational(7, 3), 8, 6},
      {Rational(3, 2), 4, 3}, {Rational(0), 8, 8}};
  for (const auto& [a, l, m] : dual) add(specialized_racah(DualSetting(a, l, m)));
  std::mt19937 gen(20240611u);
  auto pick = [&](long lo, long hi) { return lo + static_cast<long>(gen() % static_cast<unsigned long>(hi - lo + 1)); };
  for (int attempt = 0; out.size() < count && attempt < 100000; ++attempt) {
    auto frac = [&](long lo_units, long hi_units) {
      const long q = pick(1, 4);
      return Rational(pick(lo_units * q + 1, hi_units * q), q);
    };
    const Rational a = frac(-1, 4), b = frac(-1, 4), d = frac(-6, 6);
    const auto N = static_cast<unsigned>(pick(1, 8));
    try {
      add(RacahSystem(a, b, d, N));
    } catch (const DomainError&) {
    }
  }
  return out;
}

inline TaskList racah_tasks(const Config&) {
  using detail::num;
  TaskList tasks;
  const auto systems = racah_sample_systems();
  for (std::size_t idx = 0; idx < systems.size(); ++idx) {
    const RacahSystem sys = systems[idx];
    const Parameters base{{"system", sys.alpha().str() + "," + sys.beta().str() + "," + sys.gamma().str() +
                                         "," + sys.delta().str()},
                          {"N", num(sys.N())}};
    const unsigned N = sys.N();
    tasks.push_back(detail::exact_task("eq29", base, [=] {
      return detail::Reports{exact_report("eq29", base, racah_h0_direct(sys) - racah_h0(sys))};
    }));
    tasks.push_back(detail::exact_task("eq30", base, [=] {
      const auto g = racah_gram(sys);
      const Rational h0 = racah_h0(sys);
      std::vector<Rational> r;
      for (unsigned m = 0; m <= N; ++m)
        for (unsigned n = 0; n <= N; ++n)
          r.push_back(g[m][n] - (m == n ? h0 * racah_norm_ratio(n, sys) : Rational(0)));
      return detail::Reports{exact_report("eq30", base, detail::max_abs(r))};
    }));
    tasks.push_back(detail::exact_task("eq24-origin", base, [=] {
      std::vector<Rational> r;
      for (unsigned n = 0; n <= N; ++n) r.push_back(racah_eval(n, 0, sys) - 1);
      return detail::Reports{exact_report("eq24-origin", base, detail::max_abs(r))};
    }));
    tasks.push_back(detail::exact_task("eq25", base, [=] {
      detail::Reports out;
      for (unsigned n = 0; n <= N; ++n)
        out.push_back(exact_report("eq25", detail::with(base, "n", num(n)), endpoint_value_residual(n, sys)));
      return out;
    }));
    tasks.push_back(detail::exact_task("eq20", base, [=] {
      detail::Reports out;
      for (unsigned n = 1; n <= N; ++n)
        for (unsigned x = 0; x <= N; ++x)
          out.push_back(exact_report("eq20", detail::with(detail::with(base, "n", num(n)), "x", num(x)),
                                     backward_shift_residual(n, x, sys)));
      return out;
    }));
    tasks.push_back(detail::exact_task("eq21", base, [=] {
      std::mt19937 gen(static_cast<unsigned>(1000 + idx));
      detail::Reports out;
      for (unsigned n = 1; n <= N; ++n) {
        std::vector<Rational> r;
        for (int trial = 0; trial < 100; ++trial) {
          std::vector<Rational> f;
          for (unsigned x = 0; x <= N; ++x) f.emplace_back(static_cast<long>(gen() % 41) - 20);
          r.push_back(sum_by_parts_residual(n, f, sys));
        }
        out.push_back(exact_report("eq21", detail::with(base, "n", num(n)), detail::max_abs(r)));
      }
      return out;
    }));
  }
  return tasks;
}

// --- hermite ---------------------------------------------------------------------------

/// Limit checks report the worst successive deviation ratio against the 3/5 bound
/// ("inf" if a zero deviation is followed by a nonzero one).
inline VerificationReport limit_report(const std::string& id, Parameters params, const LimitReport& rep) {
  std::string residual;
  if (!rep.decays && rep.worst_ratio <= decay_bound())
    residual = "inf";
  else
    residual = format_residual(BigFloat(rep.worst_ratio));
  VerificationReport r = make_report(id, std::move(params), Mode::numeric, residual, rep.decays ? Status::pass : Status::fail);
  r.note = "limit " + rep.limit;
  return r;
}

inline LimitIndices limit_indices(unsigned n, unsigned j, unsigned l, unsigned m) {
  LimitIndices idx;
  idx.n = n;
  idx.j = j;
  idx.l = l;
  idx.m = m;
  return idx;
}

inline TaskList hermite_tasks(const Config& cfg) {
  using detail::num;
  TaskList tasks;
  for (unsigned n = 0; n <= cfg.hermite_l_max; ++n) {
    const Parameters base{{"n", num(n)}};
    tasks.push_back(detail::exact_task("hermite-addition", base, [=] {
      return detail::Reports{exact_report("hermite-addition", base, hermite_addition_residual(n))};
    }));
    tasks.push_back(detail::exact_task("hermite-product", base, [=] {
      return detail::Reports{exact_report("hermite-product", base, hermite_product_residual(n))};
    }));
  }
  for (unsigned l = 0; l <= cfg.hermite_l_max; ++l) {
    for (unsigned m = 0; m <= l; ++m) {
      const Parameters base{{"l", num(l)}, {"m", num(m)}};
      const HermiteSetting s(l, m);
      tasks.push_back(detail::exact_task("eq46", base, [=] {
        detail::Reports out;
        for (unsigned j = 0; j <= m; ++j)
          out.push_back(exact_report("eq46", detail::with(base, "j", num(j)), hermite_dual_addition_residual(j, s)));
        out.push_back(exact_report("eq46-j0", base, hermite_j0_residual(s)));
        return out;
      }));
      tasks.push_back(detail::exact_task("eq47", base, [=] {
        detail::Reports out;
        for (unsigned n = 0; n <= m; ++n) {
          const Parameters p = detail::with(base, "n", num(n));
          out.push_back(exact_report("eq47", p, hermite_dual_inverse_residual(n, s)));
          out.push_back(exact_report("eq46-eq47-inversion", p, detail::max_abs(hermite_inversion_residual(n, s))));
        }
        out.push_back(exact_report("eq47-n0", base, hermite_linearization_residual(s)));
        return out;
      }));
    }
  }
  for (unsigned n = 0; n <= cfg.biorthogonality_max; ++n) {
    const Parameters base{{"n", num(n)}};
    const unsigned kmax = cfg.biorthogonality_max;
    tasks.push_back(detail::exact_task("eq48-corrected", base, [=] {
      detail::Reports out;
      for (unsigned k = 0; k <= kmax; ++k) {
        const Rational delta(n == k ? 1 : 0);
        const Parameters p = detail::with(base, "k", num(k));
        out.push_back(exact_report("eq48-corrected", p,
                                   biorthogonality_value(n, k, BiorthogonalityKernel::corrected) - delta));
        out.push_back(exact_report("eq48-racah-limit", p,
                                   biorthogonality_value(n, k, BiorthogonalityKernel::racah_limit) - delta));
      }
      return out;
    }));
  }
  {
    const Parameters p{{"n", "2"}, {"k", "1"}};
    tasks.push_back(detail::exact_task("eq48-printed", p, [=] {
      const Rational v = biorthogonality_value(2, 1, BiorthogonalityKernel::as_printed);
      return detail::Reports{pinned_report("eq48-printed", p, Mode::exact, v.str(), v == Rational(-1))};
    }));
  }

  const auto alphas = dyadic_alphas(cfg.alpha_powers);
  const unsigned L = cfg.limit_l_max;
  for (const LimitTarget t : {LimitTarget::eq52, LimitTarget::eq53}) {
    for (unsigned n = 0; n <= L; ++n) {
      const std::string id(limit_target_name(t));
      const Parameters p{{"n", num(n)}};
      tasks.push_back(detail::numeric_task(id, p, [=] {
        return detail::Reports{limit_report(id, p, limit_rate_check(t, limit_indices(n, 0, 0, 0), alphas))};
      }));
    }
  }
  for (unsigned l = 0; l <= L; ++l) {
    for (unsigned m = 0; m <= l; ++m) {
      const Parameters base{{"l", num(l)}, {"m", num(m)}};
      tasks.push_back(detail::numeric_task("eq54", base, [=] {
        detail::Reports out;
        for (unsigned j = 0; j <= m; ++j) {
          const Parameters pj = detail::with(base, "j", num(j));
          out.push_back(limit_report("eq55", pj, limit_rate_check(LimitTarget::eq55, limit_indices(0, j, l, m), alphas)));
          for (unsigned n = 0; n <= m; ++n) {
            const Parameters p = detail::with(pj, "n", num(n));
            const LimitIndices idx = limit_indices(n, j, l, m);
            out.push_back(limit_report("eq54j", p, limit_rate_check(LimitTarget::eq54j, idx, alphas)));
            out.push_back(limit_report("eq54n", p, limit_rate_check(LimitTarget::eq54n, idx, alphas)));
          }
        }
        for (unsigned n = 0; n <= m; ++n)
          out.push_back(limit_report("eq56", detail::with(base, "n", num(n)),
                                     limit_rate_check(LimitTarget::eq56, limit_indices(n, 0, l, m), alphas)));
        return out;
      }));
      tasks.push_back(detail::numeric_task("eq40-term", base, [=] {
        detail::Reports out;
        for (unsigned j = 0; j <= m; ++j)
          for (unsigned n = 0; n <= m; ++n)
            out.push_back(limit_report(
                "eq40-term", detail::with(detail::with(base, "j", num(j)), "n", num(n)),
                limit_rate_check(LimitTarget::eq40_term, limit_indices(n, j, l, m), alphas)));
        return out;
      }));
      tasks.push_back(detail::numeric_task("racah-biorth", base, [=] {
        detail::Reports out;
        for (unsigned n = 0; n <= m; ++n)
          for (unsigned k = 0; k <= m; ++k)
            out.push_back(limit_report("racah-biorth", detail::with(detail::with(base, "n", num(n)), "k", num(k)),
                                       racah_to_biorthogonality_limit(n, k, l, m, alphas)));
        return out;
      }));
    }
  }
  return tasks;
}

// --- continuous ------------------------------------------------------------------------

namespace detail {

inline BigFloat dec(const std::string& s) { return BigFloat::parse(s); }

// Exact W_n(x^2) at lambda = mu = 0, where a = b = c = d = alpha/2 + 1/4 and
// (a+ix)_k (a-ix)_k = prod_{i<k} ((a+i)^2 + x^2) is rational.
inline Rational wilson_exact_real_params(unsigned n, const Rational& xsq, const Rational& alpha) {
  const Rational a = alpha / 2 + Rational(1, 4);
  Rational sum, term(1);
  for (unsigned k = 0; k <= n; ++k) {
    sum += term;
    if (k == n) break;
    const Rational kk(static_cast<long>(k));
    term *= (kk - n) * (kk + n + 4 * a - 1) * ((a + kk) * (a + kk) + xsq) /
            ((2 * a + kk) * (2 * a + kk) * (2 * a + kk) * (kk + 1));
  }
  const Rational p = pochhammer(2 * a, n);
  return sum * p * p * p;
}

// Terminating sum_k (-n)_k prod(upper)_k / (prod(lower)_k k!) z^k in exact arithmetic.
inline Rational terminating_exact(unsigned n, const std::vector<Rational>& upper,
                                  const std::vector<Rational>& lower, const Rational& z) {
  Rational sum, term(1);
  for (unsigned k = 0; k <= n; ++k) {
    sum += term;
    if (k == n) break;
    const Rational kk(static_cast<long>(k));
    Rational num = kk - n, den = kk + 1;
    for (const auto& u : upper) num *= u + kk;
    for (const auto& l : lower) den *= l + kk;
    term *= num * z / den;
  }
  return sum;
}

inline BigFloat rel(const BigFloat& a, const BigFloat& b) {
  return b.is_zero() ? abs(a - b) : abs(a - b) / abs(b);
}

struct WilsonPoint {
  std::string lambda, mu;
  Rational alpha;
  WilsonParams params() const { return {dec(lambda), dec(mu), alpha}; }
  Parameters labels() const { return {{"lambda", lambda}, {"mu", mu}, {"alpha", alpha.str()}}; }
};

}  // namespace detail

inline TaskList continuous_tasks(const Config& cfg) {
  using detail::dec;
  using detail::num;
  TaskList tasks;
  const Config c = cfg;
  auto push = [&](std::string id, Parameters p, std::function<detail::Reports()> fn) {
    tasks.push_back(detail::numeric_task(std::move(id), std::move(p), std::move(fn)));
  };

  // Gamma function self-checks.
  for (const std::string nu : {"0.7", "2.5"}) {
    const Parameters p{{"nu", nu}};
    push("gamma-reflection", p, [=] {
      const BigFloat v = dec(nu);
      const BigFloat lhs = abs_gamma_sq(BigComplex(BigFloat(Rational(1, 2)), v));
      return detail::Reports{numeric_report("gamma-reflection", p, detail::rel(lhs, pi() / cosh(pi() * v)), c.oracle_tol())};
    });
  }
  {
    const Parameters p{{"z", "0.8+0.3i"}};
    push("gamma-duplication", p, [=] {
      const BigComplex z(dec("0.8"), dec("0.3"));
      const BigComplex lhs = gamma(BigComplex(2L) * z);
      const BigComplex rhs = gamma(z) * gamma(z + BigComplex(BigFloat(Rational(1, 2)))) *
                             exp((BigComplex(2L) * z - BigComplex(1L)) * BigComplex(log(BigFloat(2L)))) /
                             BigComplex(sqrt(pi()));
      return detail::Reports{numeric_report("gamma-duplication", p, relative_residual(lhs, rhs), c.oracle_tol())};
    });
  }
  for (unsigned k : {1u, 5u, 20u}) {
    const Parameters p{{"z", num(k)}};
    push("gamma-factorial", p, [=] {
      const BigFloat lhs = log_gamma(BigComplex(BigFloat(static_cast<long>(k)))).re;
      const BigFloat rhs = log(BigFloat(factorial(k - 1)));
      const BigFloat r = rhs.is_zero() ? abs(lhs) : detail::rel(lhs, rhs);
      return detail::Reports{numeric_report("gamma-factorial", p, r, c.oracle_tol())};
    });
  }

  // Exact-vs-float oracles for terminating series.
  const std::vector<std::tuple<Rational, Rational, Rational>> f21{
      {Rational(1, 3), Rational(5, 2), Rational(-1, 3)},
      {Rational(-7, 4), Rational(2, 3), Rational(-2)},
      {Rational(9, 2), Rational(1, 5), Rational(-7, 2)},
      {Rational(3), Rational(3, 4), Rational(-9, 10)}};
  for (const auto& [b, cc, z] : f21) {
    const Parameters p{{"a", "-3"}, {"b", b.str()}, {"c", cc.str()}, {"z", z.str()}};
    push("oracle-2f1", p, [=] {
      const Rational exact = detail::terminating_exact(3, {b}, {cc}, z);
      const BigComplex fl = gauss_2f1(BigComplex(-3L), BigComplex(BigFloat(b)), BigComplex(BigFloat(cc)), BigFloat(z));
      return detail::Reports{numeric_report("oracle-2f1", p, relative_residual(fl, BigComplex(BigFloat(exact))), c.oracle_tol())};
    });
  }
  for (const auto& sys : racah_sample_systems(4)) {
    const Parameters p{{"system", sys.alpha().str() + "," + sys.beta().str() + "," + sys.gamma().str() + "," +
                                      sys.delta().str()},
                       {"N", num(sys.N())}};
    push("oracle-racah", p, [=] {
      BigFloat worst(0L);
      const Rational& a = sys.alpha();
      const Rational& b = sys.beta();
      const Rational& g = sys.gamma();
      const Rational& d = sys.delta();
      for (unsigned n = 0; n <= sys.N(); ++n)
        for (unsigned x = 0; x <= sys.N(); ++x) {
          const Rational exact = racah_eval(n, x, sys);
          const std::vector<BigComplex> up{BigComplex(BigFloat(Rational(n) + a + b + 1)),
                                           BigComplex(BigFloat(-Rational(x))),
                                           BigComplex(BigFloat(Rational(x) + g + d + 1))};
          const std::vector<BigComplex> lo{BigComplex(BigFloat(a + 1)), BigComplex(BigFloat(b + d + 1)),
                                           BigComplex(BigFloat(g + 1))};
          const BigComplex fl = terminating_pfq(n, up, lo, BigComplex(1L));
          worst = max(worst, relative_residual(fl, BigComplex(BigFloat(exact))));
        }
      return detail::Reports{numeric_report("oracle-racah", p, worst, c.oracle_tol())};
    });
  }
  for (const Rational& alpha : {Rational(1), Rational(1, 2), Rational(0)}) {
    const Parameters p{{"alpha", alpha.str()}, {"lambda", "0"}, {"mu", "0"}};
    push("oracle-wilson", p, [=] {
      const WilsonParams wp(BigFloat(0L), BigFloat(0L), alpha);
      BigFloat worst(0L);
      for (unsigned n = 0; n <= 3; ++n)
        for (const Rational& xsq : {Rational(1, 4), Rational(2), Rational(9, 4), Rational(0)}) {
          const Rational exact = detail::wilson_exact_real_params(n, xsq, alpha);
          worst = max(worst, detail::rel(wilson_poly(n, BigFloat(xsq), wp), BigFloat(exact)));
        }
      return detail::Reports{numeric_report("oracle-wilson", p, worst, c.oracle_tol())};
    });
  }

  // Jacobi-function identities.
  for (const auto& [a, b] : std::vector<std::pair<Rational, Rational>>{{Rational(1), Rational(-1, 2)},
                                                                       {Rational(1, 2), Rational(1, 2)},
                                                                       {Rational(2), Rational(1)},
                                                                       {Rational(0), Rational(-1, 2)},
                                                                       {Rational(-1, 2), Rational(-1, 2)}}) {
    const Parameters p{{"alpha", a.str()}, {"beta", b.str()}};
    push("eq32", p, [=] {
      // 50 points: lambda = 0.37 k mod 6, t = 0.13 (k+1) mod 3
      BigFloat worst(0L);
      for (int k = 0; k < 50; ++k) {
        const BigFloat lam = BigFloat(Rational((37 * k) % 600, 100));
        const BigFloat t = BigFloat(Rational((13 * (k + 1)) % 300, 100));
        const BigFloat v = abs(phi(BigComplex(lam), a, b, t));
        worst = max(worst, v - BigFloat(1L));
      }
      return detail::Reports{numeric_report("eq32", p, worst, pow10(-(c.precision_digits - 10)))};
    });
  }
  for (const Rational& alpha : {Rational(0), Rational(1), Rational(5, 2), Rational(7, 3)}) {
    for (const auto& [lam, t] : std::vector<std::pair<std::string, std::string>>{
             {"0.7", "0.3"}, {"0", "0.5"}, {"1.9", "0.05"}, {"0.25", "1.4"}, {"3.1", "0.8"}}) {
      const Parameters p{{"alpha", alpha.str()}, {"lambda", lam}, {"t", t}};
      push("eq16", p, [=] {
        const BigComplex r = quadratic_transform_residual(dec(lam), alpha, dec(t));
        return detail::Reports{numeric_report("eq16", p, abs(r), c.pointwise_tol())};
      });
    }
  }
  for (const auto& [a, b, lam, t] : std::vector<std::tuple<Rational, Rational, std::string, std::string>>{
           {Rational(1), Rational(-1, 2), "0.5", "0.4"},
           {Rational(2), Rational(1), "1.3", "0.8"},
           {Rational(0), Rational(0), "0", "0.5"},
           {Rational(1, 2), Rational(-1, 2), "2.0", "1.1"},
           {Rational(3, 2), Rational(1, 2), "0.9", "0"}}) {
    const Parameters p{{"alpha", a.str()}, {"beta", b.str()}, {"lambda", lam}, {"t", t}};
    push("eq34", p, [=] {
      return detail::Reports{numeric_report("eq34", p, abs(contiguous_residual(dec(lam), a, b, dec(t))), c.pointwise_tol())};
    });
  }
  for (const auto& [g, r, k] : std::vector<std::tuple<std::string, std::string, std::string>>{
           {"1", "0.5", "0.8"}, {"0.75", "1.2", "2.0"}, {"2.5", "0.3", "0"}, {"1.5", "0", "1.1"}}) {
    const Parameters p{{"g", g}, {"r", r}, {"k", k}};
    push("eq4", p, [=] {
      const ConicalArgs args{dec(g), dec(r), dec(k)};
      return detail::Reports{numeric_report("eq4", p, relative_residual(conical_f(args), conical_f_hypergeometric(args)),
                                            c.pointwise_tol())};
    });
    push("eq4-symmetry", p, [=] {
      const ConicalArgs args{dec(g), dec(r), dec(k)};
      const ConicalArgs flipped{dec(g), dec(r), -dec(k)};
      return detail::Reports{numeric_report("eq4-symmetry", p, relative_residual(conical_f(flipped), conical_f(args)),
                                            c.pointwise_tol())};
    });
  }

  // Wilson polynomials and the dual product formula.
  const std::vector<detail::WilsonPoint> wilson_points{
      {"0.2", "0.4", Rational(1)}, {"0.3", "0.5", Rational(1, 2)}, {"0.15", "0.35", Rational(0)}};
  for (std::size_t i = 0; i < wilson_points.size(); ++i) {
    const auto wp = wilson_points[i];
    const Parameters base = wp.labels();
    const bool pin = i == 0;
    push("eq8", base, [=] {
      const WilsonParams p = wp.params();
      const auto gram = wilson_gram(3, p, c.integral_tol() * pow10(-5));
      detail::Reports out;
      for (unsigned m = 0; m <= 3; ++m)
        for (unsigned n = 0; n <= 3; ++n)
          out.push_back(numeric_report("eq8", detail::with(detail::with(base, "m", num(m)), "n", num(n)),
                                       wilson_orthogonality_residual(gram, m, n, p), c.integral_tol()));
      if (pin) {
        const BigFloat printed = wilson_orthogonality_residual(gram, 1, 1, p, NormVariant::printed);
        out.push_back(pinned_report("eq8-printed", detail::with(detail::with(base, "m", "1"), "n", "1"),
                                    Mode::numeric, format_residual(printed), printed > pow10(-3)));
      }
      return out;
    });
  }
  const std::vector<std::pair<std::string, detail::WilsonPoint>> eq7_points{
      {"0.3", {"0.4", "0.7", Rational(1)}},      {"0.3", {"0.2", "0.4", Rational(1)}},
      {"0.3", {"0.2", "0.4", Rational(0)}},      {"0.5", {"0.1", "0.6", Rational(0)}},
      {"0.2", {"0.3", "0.5", Rational(1, 2)}},   {"0.7", {"0.25", "0.45", Rational(3, 2)}},
      {"0.1", {"0.6", "0.2", Rational(7, 3)}},   {"1", {"0.3", "0.3", Rational(1)}},
      {"0", {"0.2", "0.4", Rational(1)}},        {"0.4", {"0.5", "0.8", Rational(2)}}};
  for (const auto& [t, wp] : eq7_points) {
    const Parameters p = detail::with(wp.labels(), "t", t);
    push("eq7", p, [=] {
      return detail::Reports{numeric_report(
          "eq7", p, dual_product_residual(dec(t), wp.params(), c.integral_tol() * pow10(-5)), c.integral_tol())};
    });
  }
  {
    const detail::WilsonPoint wp{"0.2", "0.4", Rational(1)};
    const Parameters p = wp.labels();
    push("eq7-eq8-t0", p, [=] {
      const WilsonParams w = wp.params();
      const BigFloat qtol = c.integral_tol() * pow10(-5);
      const BigFloat eq7 = dual_integral(0, BigFloat(0L), w, qtol);
      const BigFloat eq8 = wilson_gram(0, w, qtol)[0][0];
      const BigFloat r = max(detail::rel(eq7, eq8), detail::rel(eq8, wilson_norm(0, w)));
      return detail::Reports{numeric_report("eq7-eq8-t0", p, r, c.integral_tol())};
    });
  }
  for (const auto& [t, wp] : std::vector<std::pair<std::string, detail::WilsonPoint>>{
           {"0.3", {"0.2", "0.4", Rational(1)}}, {"0.5", {"0.3", "0.6", Rational(1, 2)}}}) {
    const Parameters p = detail::with(wp.labels(), "t", t);
    push("eq6", p, [=] {
      return detail::Reports{numeric_report(
          "eq6", p, conical_dual_product_residual(dec(t), wp.params(), c.integral_tol() * pow10(-5)), c.integral_tol())};
    });
  }
  for (const auto& [t, wp] : std::vector<std::pair<std::string, detail::WilsonPoint>>{
           {"0.2", {"0.3", "0.5", Rational(1)}}, {"0.15", {"0.2", "0.4", Rational(1, 2)}}}) {
    const bool pin = wp.alpha == Rational(1);
    for (unsigned n = 0; n <= 3; ++n) {
      const Parameters p = detail::with(detail::with(wp.labels(), "t", t), "n", num(n));
      push("eq13", p, [=] {
        const WilsonParams w = wp.params();
        const BigFloat integral = dual_integral(n, dec(t), w, c.integral_tol() * pow10(-5));
        const BigFloat closed = dual_integral_closed_form(n, dec(t), w);
        detail::Reports out{numeric_report("eq13", p, detail::rel(integral, closed), c.series_tol())};
        if (pin && n == 1) {
          const BigFloat printed = detail::rel(integral, dual_integral_closed_form(n, dec(t), w, NormVariant::printed));
          out.push_back(pinned_report("eq13-printed", p, Mode::numeric, format_residual(printed), printed > pow10(-3)));
        }
        return out;
      });
    }
  }
  {
    const detail::WilsonPoint wp{"0.2", "0.4", Rational(1)};
    for (unsigned n = 1; n <= 3; ++n) {
      for (const std::string x : {"0.1", "0.7", "1.3", "2", "3.5"}) {
        const Parameters p = detail::with(detail::with(wp.labels(), "n", num(n)), "x", x);
        push("eq33", p, [=] {
          const WilsonParams w = wp.params();
          detail::Reports out{numeric_report("eq33", p, wilson_shift_residual(n, dec(x), w), c.pointwise_tol())};
          if (n == 2 && x == "0.7") {
            const BigFloat printed = wilson_shift_residual(n, dec(x), w, ShiftVariant::printed);
            out.push_back(pinned_report("eq33-printed", p, Mode::numeric, format_residual(printed), printed > pow10(-3)));
          }
          return out;
        });
      }
    }
  }

  // Dual addition formula for Gegenbauer functions: t in {t_max/4, t_max/2, t_max}.
  const std::vector<std::pair<std::string, detail::WilsonPoint>> eq15_points{
      {"0.3", {"0.2", "0.4", Rational(1)}}, {"0.3", {"0.2", "0.4", Rational(1, 2)}},
      {"0.8", {"0.5", "0.1", Rational(2)}}};
  for (const std::string tq : {"1/4", "1/2", "1"}) {
    for (const auto& [nu, wp] : eq15_points) {
      const std::string t_label = tq == "1" ? c.t_max : tq + "*" + c.t_max;
      const Parameters p = detail::with(detail::with(wp.labels(), "nu", nu), "t", t_label);
      push("eq15", p, [=] {
        const BigFloat t = c.t_max_value() * BigFloat(Rational::parse(tq));
        const BigFloat tol = c.series_tol();
        const SeriesCheck sc = dual_addition_function_check(t, dec(nu), wp.params(), tol * pow10(-3), c.truncation_budget);
        VerificationReport r = numeric_report("eq15", p, sc.residual, tol);
        r.note = std::to_string(sc.terms) + " terms";
        if (!sc.reached_target || !sc.tail_decreasing) {
          r.status = Status::fail;
          r.note += sc.tail_decreasing ? ", truncation budget exhausted" : ", tail not decreasing (formal divergence)";
        }
        return detail::Reports{r};
      });
    }
  }

  // Quadrature harness checks.
  push("quadrature-gaussian", {}, [=] {
    const BigFloat v = self_refining_integral([](const BigFloat& x) { return exp(-(x * x)); },
                                              c.integral_tol() * pow10(-5));
    return detail::Reports{numeric_report("quadrature-gaussian", {}, detail::rel(v, sqrt(pi())), c.integral_tol())};
  });
  {
    const detail::WilsonPoint wp{"0.3", "0.5", Rational(1)};
    const Parameters p = detail::with(detail::with(wp.labels(), "t", "0.2"), "n", "1");
    push("quadrature-stability", p, [=] {
      const BigFloat qtol = c.integral_tol() * pow10(-5);
      const BigFloat base = dual_integral(1, dec("0.2"), wp.params(), qtol);
      BigFloat refined;
      {
        PrecisionScope doubled(2 * c.precision_digits);
        refined = dual_integral(1, dec("0.2"), wp.params(), qtol * pow10(-2));
      }
      return detail::Reports{numeric_report("quadrature-stability", p, detail::rel(base, refined), c.integral_tol())};
    });
  }
  return tasks;
}

// --- running -----------------------------------------------------------------------------

/// Task list for a suite name; unknown names throw ConfigError.
inline TaskList suite_tasks(std::string_view name, const Config& cfg) {
  if (name == "dual-addition") return dual_addition_tasks(cfg);
  if (name == "classical-addition") return classical_addition_tasks(cfg);
  if (name == "racah") return racah_tasks(cfg);
  if (name == "hermite") return hermite_tasks(cfg);
  if (name == "continuous") return continuous_tasks(cfg);
  if (name == "all") {
    TaskList all;
    for (const auto& s : suite_names()) {
      if (s == "all") continue;
      auto t = suite_tasks(s, cfg);
      std::move(t.begin(), t.end(), std::back_inserter(all));
    }
    return all;
  }
  throw ConfigError("unknown suite '" + std::string(name) + "'");
}

namespace detail {

inline Reports run_one(const Task& task, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  Reports out;
  try {
    out = task.run();
  } catch (const IdentityViolationError& e) {
    VerificationReport r = make_report(task.id, task.params, task.mode, "nan", Status::fail);
    r.note = e.what();
    out = {r};
  } catch (const LimitViolationError& e) {
    VerificationReport r = make_report(task.id, task.params, task.mode, "nan", Status::fail);
    r.note = e.what();
    out = {r};
  } catch (const std::exception& e) {
    out = {error_report(task.id, task.params, task.mode, e.what())};
  }
  if (timing) {
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    for (auto& r : out) r.elapsed = ms;
  }
  return out;
}

}  // namespace detail

/// Runs tasks on `cfg.jobs` workers, each at `cfg.precision_digits`, and returns the
/// reports sorted by (identity_id, parameters).
inline std::vector<VerificationReport> run_tasks(const TaskList& tasks, const Config& cfg) {
  std::vector<detail::Reports> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    PrecisionScope scope(cfg.precision_digits);
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = detail::run_one(tasks[i], cfg.timing);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(tasks.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<VerificationReport> out;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(out));
  sort_reports(out);
  return out;
}

inline std::vector<VerificationReport> run_suite(std::string_view name, const Config& cfg) {
  return run_tasks(suite_tasks(name, cfg), cfg);
}

}  // namespace dualadd
