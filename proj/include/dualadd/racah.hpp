#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dualadd/errors.hpp"
#include "dualadd/rational.hpp"

namespace dualadd {

/// Racah parameters (alpha, beta, gamma, delta) with gamma = -N-1, lattice x in {0..N}.
///
/// Construction fails (DegenerateParameterError) when a denominator of the
/// 4F3 itself vanishes, since then no polynomial can be evaluated. Zero
/// denominators in the weight, h_0 and norm formulas are collected into
/// defects(); the operations that need those formulas throw with that list.
class RacahSystem {
 public:
  RacahSystem(Rational alpha, Rational beta, Rational delta, unsigned N)
      : alpha_(std::move(alpha)), beta_(std::move(beta)), delta_(std::move(delta)), n_(N) {
    gamma_ = -Rational(static_cast<long>(N)) - 1;
    validate();
  }

  /// Explicit gamma, which must equal -N-1.
  static RacahSystem with_gamma(Rational alpha, Rational beta, const Rational& gamma,
                                Rational delta, unsigned N) {
    if (gamma != -Rational(static_cast<long>(N)) - 1)
      throw DomainError("Racah gamma must equal -N-1: gamma=" + gamma.str() +
                        ", N=" + std::to_string(N));
    return {std::move(alpha), std::move(beta), std::move(delta), N};
  }

  /// Parses "alpha,beta,gamma,delta" (rational literals) with the given N >= 1.
  static RacahSystem parse(std::string_view params, unsigned N) {
    if (N < 1) throw DomainError("Racah N must be a positive integer");
    std::vector<Rational> v;
    std::size_t start = 0;
    while (true) {
      auto comma = params.find(',', start);
      v.push_back(Rational::parse(params.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (v.size() != 4) throw DomainError("Racah parameters need exactly 4 values");
    return with_gamma(v[0], v[1], v[2], v[3], N);
  }

  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  const Rational& gamma() const { return gamma_; }
  const Rational& delta() const { return delta_; }
  unsigned N() const { return n_; }

  /// Zero denominator factors of the weight, h_0 and norm formulas.
  const std::vector<std::string>& defects() const { return defects_; }
  bool fully_valid() const { return defects_.empty(); }
  void require_fully_valid() const {
    if (!defects_.empty()) throw DegenerateParameterError(defects_);
  }

  /// Parameters shifted by the backward shift: (alpha+1, beta+1, gamma+1, delta), N-1.
  RacahSystem raised() const {
    if (n_ == 0) throw DomainError("cannot raise a Racah system with N = 0");
    return {alpha_ + 1, beta_ + 1, delta_, n_ - 1};
  }

  std::string str() const {
    return "(" + alpha_.str() + "," + beta_.str() + "," + gamma_.str() + "," + delta_.str() +
           "), N=" + std::to_string(n_);
  }

 private:
  void validate() {
    std::vector<std::string> hard;
    auto poch_zero = [&](std::vector<std::string>& out, const Rational& a, unsigned len,
                         const char* where) {
      if (pochhammer(a, len).is_zero())
        out.push_back("(" + a.str() + ")_" + std::to_string(len) + " in " + where);
    };
    poch_zero(hard, alpha_ + 1, n_, "4F3");
    poch_zero(hard, beta_ + delta_ + 1, n_, "4F3");
    poch_zero(hard, gamma_ + 1, n_, "4F3");
    if (!hard.empty()) throw DegenerateParameterError(hard);

    poch_zero(defects_, -alpha_ + gamma_ + delta_ + 1, n_, "weight");
    poch_zero(defects_, -beta_ + gamma_ + 1, n_, "weight");
    poch_zero(defects_, delta_ + 1, n_, "weight");
    if ((gamma_ + delta_ + 1).is_zero()) defects_.push_back("gamma+delta+1 in weight");
    poch_zero(defects_, alpha_ - delta_ + 1, n_, "h0");
    poch_zero(defects_, beta_ + 1, n_, "h0");
    for (unsigned n = 1; n <= n_; ++n)
      if ((alpha_ + beta_ + Rational(2 * n) + 1).is_zero())
        defects_.push_back("alpha+beta+" + std::to_string(2 * n + 1) + " in norm");
    if (n_ >= 1) poch_zero(defects_, alpha_ + beta_ + 2, n_ - 1, "norm");
  }

  Rational alpha_, beta_, gamma_, delta_;
  unsigned n_;
  std::vector<std::string> defects_;
};

namespace detail {

inline void require_index(unsigned i, unsigned N, const char* what) {
  if (i > N)
    throw DomainError(std::string(what) + " = " + std::to_string(i) + " outside {0.." +
                      std::to_string(N) + "}");
}

}  // namespace detail

/// R_n(x(x+gamma+delta+1)) as the terminating 4F3, summed over k = 0..n.
inline Rational racah_eval(unsigned n, unsigned x, const RacahSystem& s) {
  detail::require_index(n, s.N(), "degree n");
  detail::require_index(x, s.N(), "lattice point x");
  const Rational& a = s.alpha();
  const Rational& b = s.beta();
  const Rational& g = s.gamma();
  const Rational& d = s.delta();
  Rational term(1), sum(1);
  for (unsigned k = 1; k <= n && k <= x; ++k) {
    const Rational km1(k - 1);
    term *= (km1 - n) * (Rational(n) + a + b + k) * (km1 - x) * (Rational(x) + g + d + k);
    term /= (a + k) * (b + d + k) * (g + k) * Rational(k);
    sum += term;
  }
  return sum;
}

/// Orthogonality weight w(x).
inline Rational racah_weight(unsigned x, const RacahSystem& s) {
  detail::require_index(x, s.N(), "lattice point x");
  s.require_fully_valid();
  const Rational& a = s.alpha();
  const Rational& b = s.beta();
  const Rational& g = s.gamma();
  const Rational& d = s.delta();
  Rational w(1);
  for (unsigned i = 0; i < x; ++i) {
    w *= (a + 1 + i) * (b + d + 1 + i) * (g + 1 + i) * (g + d + 1 + i);
    w /= (-a + g + d + 1 + i) * (-b + g + 1 + i) * (d + 1 + i) * Rational(i + 1);
  }
  return w * (g + d + 1 + 2 * static_cast<long>(x)) / (g + d + 1);
}

/// Sum of the weights over the lattice, computed directly.
inline Rational racah_h0_direct(const RacahSystem& s) {
  Rational sum;
  for (unsigned x = 0; x <= s.N(); ++x) sum += racah_weight(x, s);
  return sum;
}

/// Closed form (a+b+2)_N (-d)_N / ((a-d+1)_N (b+1)_N) of the total weight.
inline Rational racah_h0(const RacahSystem& s) {
  const unsigned N = s.N();
  const Rational den = pochhammer(s.alpha() - s.delta() + 1, N) * pochhammer(s.beta() + 1, N);
  if (den.is_zero()) {
    std::vector<std::string> f;
    if (pochhammer(s.alpha() - s.delta() + 1, N).is_zero())
      f.push_back("(" + (s.alpha() - s.delta() + 1).str() + ")_" + std::to_string(N));
    if (pochhammer(s.beta() + 1, N).is_zero())
      f.push_back("(" + (s.beta() + 1).str() + ")_" + std::to_string(N));
    throw DegenerateParameterError(f);
  }
  return pochhammer(s.alpha() + s.beta() + 2, N) * pochhammer(-s.delta(), N) / den;
}

/// h_n / h_0 in closed form. The factor (a+b+1)/(a+b+1)_n is written as
/// 1/(a+b+2)_{n-1}, which stays finite at a+b+1 = 0.
inline Rational racah_norm_ratio(unsigned n, const RacahSystem& s) {
  detail::require_index(n, s.N(), "degree n");
  s.require_fully_valid();
  if (n == 0) return Rational(1);
  const Rational& a = s.alpha();
  const Rational& b = s.beta();
  const Rational& g = s.gamma();
  const Rational& d = s.delta();
  Rational num = pochhammer(b + 1, n) * pochhammer(a + b - g + 1, n) *
                 pochhammer(a - d + 1, n) * factorial(n);
  Rational den = (a + b + Rational(2 * n) + 1) * pochhammer(a + b + 2, n - 1) *
                 pochhammer(a + 1, n) * pochhammer(b + d + 1, n) * pochhammer(g + 1, n);
  return num / den;
}

/// Full Gram matrix sum_x R_m(x) R_n(x) w(x).
inline std::vector<std::vector<Rational>> racah_gram(const RacahSystem& s) {
  const unsigned N = s.N();
  std::vector<Rational> w(N + 1);
  for (unsigned x = 0; x <= N; ++x) w[x] = racah_weight(x, s);
  std::vector<std::vector<Rational>> vals(N + 1, std::vector<Rational>(N + 1));
  for (unsigned n = 0; n <= N; ++n)
    for (unsigned x = 0; x <= N; ++x) vals[n][x] = racah_eval(n, x, s);
  std::vector<std::vector<Rational>> g(N + 1, std::vector<Rational>(N + 1));
  for (unsigned m = 0; m <= N; ++m)
    for (unsigned n = m; n <= N; ++n) {
      Rational acc;
      for (unsigned x = 0; x <= N; ++x) acc += vals[m][x] * vals[n][x] * w[x];
      g[m][n] = acc;
      g[n][m] = acc;
    }
  return g;
}

/// R_n at the last lattice point x = N minus its closed form.
inline Rational endpoint_value_residual(unsigned n, const RacahSystem& s) {
  detail::require_index(n, s.N(), "degree n");
  const Rational closed = pochhammer(s.beta() + 1, n) * pochhammer(s.alpha() - s.delta() + 1, n) /
                          (pochhammer(s.alpha() + 1, n) * pochhammer(s.beta() + s.delta() + 1, n));
  return racah_eval(n, s.N(), s) - closed;
}

namespace detail {

inline Rational shift_factor(const RacahSystem& s, const Rational& divisor) {
  if (divisor.is_zero())
    throw DegenerateParameterError({"backward-shift divisor " + divisor.str() + " (gamma+delta+" +
                                    "2+2x form) vanishes"});
  return (s.gamma() + s.delta() + 2) / divisor;
}

// (gamma+delta+2)/(gamma+delta+2+2x) w'(x) R'_{n-1}(x), the first shifted term.
inline Rational shifted_upper(unsigned n, unsigned x, const RacahSystem& s, const RacahSystem& up) {
  const Rational c = shift_factor(s, s.gamma() + s.delta() + 2 + 2 * static_cast<long>(x));
  return c * racah_weight(x, up) * racah_eval(n - 1, x, up);
}

}  // namespace detail

/// LHS - RHS of the backward shift relation at lattice point x, 1 <= n <= N.
/// The first right-hand term is dropped at x = N and the second at x = 0.
inline Rational backward_shift_residual(unsigned n, unsigned x, const RacahSystem& s) {
  if (n < 1) throw DomainError("backward shift needs n >= 1");
  detail::require_index(n, s.N(), "degree n");
  detail::require_index(x, s.N(), "lattice point x");
  const RacahSystem up = s.raised();
  up.require_fully_valid();
  Rational rhs;
  if (x < s.N()) rhs += detail::shifted_upper(n, x, s, up);
  if (x > 0) {
    const Rational c =
        detail::shift_factor(s, s.gamma() + s.delta() + 2 * static_cast<long>(x));
    rhs -= c * racah_weight(x - 1, up) * racah_eval(n - 1, x - 1, up);
  }
  return racah_weight(x, s) * racah_eval(n, x, s) - rhs;
}

/// LHS - RHS of the summation-by-parts identity for f on {0..N}, 1 <= n <= N.
inline Rational sum_by_parts_residual(unsigned n, std::span<const Rational> f,
                                      const RacahSystem& s) {
  if (n < 1) throw DomainError("summation by parts needs n >= 1");
  detail::require_index(n, s.N(), "degree n");
  if (f.size() != s.N() + 1)
    throw DomainError("f must have N+1 = " + std::to_string(s.N() + 1) + " values");
  const RacahSystem up = s.raised();
  up.require_fully_valid();
  Rational lhs, rhs;
  for (unsigned x = 0; x <= s.N(); ++x) lhs += racah_weight(x, s) * racah_eval(n, x, s) * f[x];
  for (unsigned x = 0; x < s.N(); ++x) rhs += detail::shifted_upper(n, x, s, up) * (f[x] - f[x + 1]);
  return lhs - rhs;
}

/// True when weights, norms and both backward-shift divisors are usable for every x.
inline bool supports_backward_shift(const RacahSystem& s) {
  if (!s.fully_valid() || s.N() == 0) return false;
  try {
    if (!s.raised().fully_valid()) return false;
  } catch (const DomainError&) {
    return false;
  }
  const Rational base = s.gamma() + s.delta();
  for (unsigned x = 0; x <= s.N(); ++x) {
    if (x < s.N() && (base + 2 + 2 * static_cast<long>(x)).is_zero()) return false;
    if (x > 0 && (base + 2 * static_cast<long>(x)).is_zero()) return false;
  }
  return true;
}

}  // namespace dualadd
