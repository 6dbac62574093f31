#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "dualadd/addition_classical.hpp"
#include "dualadd/dual_addition.hpp"

using namespace dualadd;

namespace {

const std::vector<Rational> kAlphas{Rational(0), Rational(1, 2), Rational(1), Rational(7, 3)};

Rational random_s(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
  return {num(rng), den(rng)};
}

// Oracle coefficient, written from the product form
// n!/(k!(n-k)!) * (a+k)/(a+k/2) * (n+2a+1)_k (2a+1)_k / (4^k (a+1)_k^2).
Rational coefficient_oracle(unsigned n, unsigned k, const Rational& a) {
  Rational c = factorial(n) / (factorial(k) * factorial(n - k));
  if (k > 0) c *= (a + k) / (a + Rational(k) / 2);
  for (unsigned i = 0; i < k; ++i)
    c *= (Rational(n) + 2 * a + 1 + i) * (2 * a + 1 + i) / (Rational(4) * (a + 1 + i) * (a + 1 + i));
  return c;
}

// Oracle for the product formula at fixed numbers x, y: R_n(xy + uv t) as a polynomial in t,
// averaged against (1-t^2)^{a-1/2} with moments (1/2)_k/(a+1)_k.
Rational t_average(unsigned n, const Rational& a, const Rational& x, const Rational& u, const Rational& y,
                   const Rational& v) {
  const UniPoly arg(std::vector<Rational>{x * y, u * v});
  const UniPoly rn = gegenbauer_r(n, a);
  UniPoly composed;
  for (int k = rn.degree(); k >= 0; --k) composed = composed * arg + UniPoly::constant(rn.coeff(k));
  Rational acc;
  for (std::size_t k = 0; k < composed.coefficients().size(); k += 2)
    acc += composed.coeff(k) * pochhammer(Rational(1, 2), k / 2) / pochhammer(a + 1, k / 2);
  return acc;
}

}  // namespace

TEST(AdditionInstance, Validation) {
  EXPECT_THROW(AdditionInstance(2, Rational(-1, 2)), DomainError);
  EXPECT_NO_THROW(AdditionInstance(2, Rational(-1, 3)));
}

TEST(AdditionLhs, Examples) {
  const SurdPoly x = SurdPoly::var_x(), y = SurdPoly::var_y(), t = SurdPoly::var_t(), u = SurdPoly::var_u(),
                 v = SurdPoly::var_v();
  EXPECT_TRUE((addition_lhs(AdditionInstance(0, Rational(3))) - SurdPoly::constant(1)).is_zero());
  EXPECT_TRUE((addition_lhs(AdditionInstance(1, Rational(2, 5))) - (x * y + u * v * t)).is_zero());
  const SurdPoly arg = x * y + u * v * t;
  const SurdPoly expected = SurdPoly::constant(Rational(-1, 2)) + arg * arg * Rational(3, 2);
  EXPECT_TRUE((addition_lhs(AdditionInstance(2, 0)) - expected).is_zero());
}

TEST(AdditionRhs, Examples) {
  EXPECT_EQ(addition_coefficient(1, 1, Rational(5, 3)), Rational(1));
  EXPECT_EQ(addition_coefficient(1, 1, Rational(0)), Rational(1));
  for (const auto& [n, a] : {std::pair<unsigned, Rational>{1, Rational(1, 2)}, {2, Rational(0)}, {4, Rational(3, 2)}}) {
    const AdditionInstance inst(n, a);
    EXPECT_TRUE((addition_rhs(inst) - addition_lhs(inst)).is_zero()) << "n=" << n;
  }
}

TEST(AdditionCoefficient, MatchesOracle) {
  for (const auto& a : kAlphas)
    for (unsigned n = 0; n <= 10; ++n)
      for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(addition_coefficient(n, k, a), coefficient_oracle(n, k, a));
}

TEST(ProductFormula, Examples) {
  EXPECT_TRUE(product_formula_residual(AdditionInstance(2, 0)).is_zero());
  EXPECT_TRUE(product_formula_residual(AdditionInstance(5, 1)).is_zero());
}

TEST(TOne, Examples) {
  EXPECT_TRUE(t_one_residual(AdditionInstance(0, 0)).is_zero());
  EXPECT_TRUE(t_one_residual(AdditionInstance(2, 0)).is_zero());
}

TEST(SumOfSquares, Examples) {
  EXPECT_TRUE(sum_of_squares_residual(0, 0).is_zero());
  EXPECT_TRUE(sum_of_squares_residual(1, 0).is_zero());
  EXPECT_TRUE(sum_of_squares_residual(4, Rational(7, 3)).is_zero());
}

TEST(Addition, CanonicalResidualsVanishOnGrid) {
  for (const auto& a : kAlphas)
    for (unsigned n = 0; n <= 8; ++n) {
      const AdditionInstance inst(n, a);
      EXPECT_TRUE((addition_lhs(inst) - addition_rhs(inst)).is_zero()) << "n=" << n << " alpha=" << a;
      EXPECT_TRUE(product_formula_residual(inst).is_zero()) << "n=" << n << " alpha=" << a;
      EXPECT_TRUE(t_one_residual(inst).is_zero());
      EXPECT_TRUE(sum_of_squares_residual(n, a).is_zero());
    }
}

// Independent of the surd-ring reduction: plug random Pythagorean triples and a random t
// into both sides as plain rationals.
TEST(Addition, PythagoreanSamplingOracle) {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    const Rational& a = kAlphas[trial % kAlphas.size()];
    const unsigned n = static_cast<unsigned>(trial % 7);
    const auto p = pythagorean_point(random_s(rng)), q = pythagorean_point(random_s(rng));
    const Rational t = random_s(rng);
    const Rational lhs = gegenbauer_r(n, a)(p.x * q.x + p.u * q.u * t);
    Rational rhs;
    for (unsigned k = 0; k <= n; ++k) {
      const UniPoly r = gegenbauer_r(n - k, a + k);
      rhs += coefficient_oracle(n, k, a) * pow(p.u * q.u, k) * r(p.x) * r(q.x) *
             gegenbauer_r(k, a - Rational(1, 2))(t);
    }
    ASSERT_EQ(lhs, rhs) << "n=" << n << " alpha=" << a;

    SurdBindings b;
    b.x = p.x;
    b.u = p.u;
    b.y = q.x;
    b.v = q.u;
    b.t = t;
    ASSERT_EQ(addition_rhs(AdditionInstance(n, a)).evaluate(b), lhs);
    const UniPoly rn = gegenbauer_r(n, a);
    ASSERT_EQ(rn(p.x) * rn(q.x), t_average(n, a, p.x, p.u, q.x, q.u));
    ASSERT_EQ(t_one_angle_residual(AdditionInstance(n, a), p, q), Rational(0));
  }
}

TEST(Chebyshev, MatchesCosineOfMultipleAngle) {
  for (unsigned k = 0; k <= 6; ++k)
    for (int i = -10; i <= 10; ++i) EXPECT_EQ(chebyshev_residual(k, pythagorean_point(Rational(i, 3))), Rational(0));
  // cos(2 phi) = 2x^2 - 1 at the 3-4-5 point.
  EXPECT_EQ(gegenbauer_r(2, Rational(-1, 2))(Rational(3, 5)), Rational(-7, 25));
}

TEST(Addition, DiagonalTermsEqualSelfDualTerms) {
  for (const auto& a : kAlphas)
    for (unsigned m = 0; m <= 8; ++m) {
      const auto sq = sum_of_squares_terms(m, a), sd = self_dual_terms(m, a);
      ASSERT_EQ(sq.size(), sd.size());
      for (std::size_t k = 0; k < sq.size(); ++k) EXPECT_EQ(sq[k], sd[k]) << "m=" << m << " k=" << k;
    }
}

TEST(Addition, BoundedAtSampledPoints) {
  std::mt19937 rng(7);
  for (const auto& a : {Rational(0), Rational(1, 2), Rational(1), Rational(7, 3)})
    for (unsigned n = 0; n <= 12; ++n) {
      const UniPoly rn = gegenbauer_r(n, a);
      for (int i = 0; i < 50; ++i) {
        const auto p = pythagorean_point(random_s(rng));
        EXPECT_LE(rn(p.x).abs(), Rational(1));
      }
    }
}
