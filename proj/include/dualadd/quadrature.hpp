#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dualadd/bigfloat.hpp"
#include "dualadd/errors.hpp"

namespace dualadd {

struct QuadratureOptions {
  double initial_step = 0.5;
  int max_halvings = 14;
  double max_extent = 400.0;  // give up searching for the cutoff beyond this |nu|
};

struct QuadratureResult {
  std::vector<BigFloat> values;  // integrals over the whole real line
  BigFloat cutoff;               // L: nodes lie in [-L, L]
  BigFloat step;                 // final trapezoid step
  BigFloat last_change;          // relative change between the last two estimates
  long evaluations = 0;
};

namespace detail {

inline BigFloat max_abs(const std::vector<BigFloat>& v) {
  BigFloat m(0L);
  for (const auto& x : v) m = max(m, abs(x));
  return m;
}

inline void accumulate(std::vector<BigFloat>& acc, const std::vector<BigFloat>& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
}

}  // namespace detail

/// Integrates a vector-valued even integrand over the real line with the trapezoidal rule.
/// The cutoff L is the first multiple of the initial step where two consecutive samples are
/// below tolerance * 1e-5 times the largest sample seen. The step is then halved (reusing all
/// previous nodes) until two successive estimates differ by less than `tolerance` relative
/// to the largest component. Nodes are summed in ascending |nu| for reproducibility.
/// Throws PrecisionError with the last two estimates if the budget is exhausted.
inline QuadratureResult self_refining_integral(
    const std::function<std::vector<BigFloat>(const BigFloat&)>& f, std::size_t dim,
    const BigFloat& tolerance, const QuadratureOptions& opt = {}) {
  QuadratureResult res;
  const BigFloat h0(opt.initial_step);
  const BigFloat tail_tol = tolerance * pow10(-5);

  auto eval = [&](const BigFloat& x) {
    ++res.evaluations;
    auto v = f(x);
    if (v.size() != dim) throw DomainError("integrand returned the wrong dimension");
    return v;
  };

  // Level 0: sum over k h0, k >= 1, up to the cutoff; f(0) enters with weight 1/2.
  std::vector<BigFloat> sum = eval(BigFloat(0L));
  for (auto& x : sum) x = x / BigFloat(2L);
  BigFloat peak = detail::max_abs(sum);
  long k = 0;
  int quiet = 0;
  while (true) {
    ++k;
    const BigFloat x = h0 * BigFloat(k);
    if (x.to_double() > opt.max_extent)
      throw PrecisionError("integrand does not decay below tolerance before |nu| = " +
                           std::to_string(opt.max_extent));
    auto v = eval(x);
    detail::accumulate(sum, v);
    const BigFloat m = detail::max_abs(v);
    peak = max(peak, m);
    if (m <= tail_tol * peak && k >= 4) {
      if (++quiet == 2) break;
    } else {
      quiet = 0;
    }
  }
  const long nodes0 = k;
  res.cutoff = h0 * BigFloat(nodes0);

  auto estimate = [&](const BigFloat& h) {
    std::vector<BigFloat> e(dim);
    for (std::size_t i = 0; i < dim; ++i) e[i] = BigFloat(2L) * h * sum[i];
    return e;
  };

  BigFloat h = h0;
  std::vector<BigFloat> prev = estimate(h);
  for (int level = 1; level <= opt.max_halvings; ++level) {
    const BigFloat half = h / BigFloat(2L);
    const long count = nodes0 << (level - 1);  // new odd nodes in (0, L)
    for (long j = 0; j < count; ++j) detail::accumulate(sum, eval(half * BigFloat(2 * j + 1)));
    h = half;
    std::vector<BigFloat> cur = estimate(h);
    BigFloat diff(0L);
    for (std::size_t i = 0; i < dim; ++i) diff = max(diff, abs(cur[i] - prev[i]));
    const BigFloat scale = max(detail::max_abs(cur), pow10(-working_digits()));
    res.last_change = diff / scale;
    if (res.last_change < tolerance) {
      res.values = std::move(cur);
      res.step = h;
      return res;
    }
    prev = std::move(cur);
  }
  std::string last = prev.empty() ? "" : prev[0].str(20);
  throw PrecisionError("quadrature did not reach relative change " + tolerance.str() +
                       " (last change " + res.last_change.str() + ", estimate " + last + ")");
}

/// Scalar convenience wrapper.
inline BigFloat self_refining_integral(const std::function<BigFloat(const BigFloat&)>& f,
                                       const BigFloat& tolerance, const QuadratureOptions& opt = {}) {
  return self_refining_integral([&](const BigFloat& x) { return std::vector<BigFloat>{f(x)}; }, 1,
                                tolerance, opt)
      .values[0];
}

}  // namespace dualadd
