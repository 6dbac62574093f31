#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "dualadd/racah.hpp"
#include "dualadd/suites.hpp"

using namespace dualadd;

namespace {

// Oracle: the terminating 4F3 written out with explicit Pochhammer symbols.
Rational racah_4f3(unsigned n, unsigned x, const RacahSystem& s) {
  const Rational &a = s.alpha(), &b = s.beta(), &g = s.gamma(), &d = s.delta();
  Rational sum;
  for (unsigned k = 0; k <= n; ++k)
    sum += pochhammer(-Rational(n), k) * pochhammer(Rational(n) + a + b + 1, k) * pochhammer(-Rational(x), k) *
           pochhammer(Rational(x) + g + d + 1, k) /
           (pochhammer(a + 1, k) * pochhammer(b + d + 1, k) * pochhammer(g + 1, k) * factorial(k));
  return sum;
}

// Oracle: weight from its Pochhammer form, with ((g+d+3)/2)_x / ((g+d+1)/2)_x for the
// (g+d+1+2x)/(g+d+1) factor.
Rational weight_oracle(unsigned x, const RacahSystem& s) {
  const Rational &a = s.alpha(), &b = s.beta(), &g = s.gamma(), &d = s.delta();
  const Rational e = g + d + 1;
  // (e+2x)/e rather than ((e+2)/2)_x / (e/2)_x, which is 0/0 when e is a negative even integer.
  return pochhammer(a + 1, x) * pochhammer(b + d + 1, x) * pochhammer(g + 1, x) * pochhammer(e, x) *
         (e + Rational(2 * x)) /
         (pochhammer(-a + g + d + 1, x) * pochhammer(-b + g + 1, x) * e * pochhammer(d + 1, x) * factorial(x));
}

const RacahSystem kDegenerate(0, 0, 1, 2);                            // (0,0,-3,1)
const RacahSystem kHalf(Rational(1, 2), Rational(1, 2), 2, 3);        // (1/2,1/2,-4,2)
const RacahSystem kSmall(0, 0, -2, 1);                                // (0,0,-2,-2)

}  // namespace

TEST(RacahSystem, GammaIsMinusNMinusOne) {
  EXPECT_EQ(kDegenerate.gamma(), Rational(-3));
  EXPECT_THROW(RacahSystem::with_gamma(0, 0, -3, 1, 3), DomainError);
  EXPECT_EQ(RacahSystem::parse("0,0,-3,1", 2).str(), kDegenerate.str());
  EXPECT_THROW(RacahSystem::parse("0,0,-3", 2), DomainError);
}

TEST(RacahSystem, DefectsAreCollected) {
  EXPECT_FALSE(kDegenerate.fully_valid());
  EXPECT_TRUE(kSmall.fully_valid());
  EXPECT_THROW(racah_weight(1, kDegenerate), DegenerateParameterError);
}

TEST(RacahEval, Examples) {
  for (unsigned x = 0; x <= 3; ++x) EXPECT_EQ(racah_eval(0, x, kHalf), Rational(1));
  for (unsigned n = 0; n <= 3; ++n) EXPECT_EQ(racah_eval(n, 0, kHalf), Rational(1));
  EXPECT_EQ(racah_eval(1, 2, kDegenerate), Rational(0));
  EXPECT_THROW(racah_eval(4, 0, kHalf), DomainError);
  EXPECT_THROW(racah_eval(0, 4, kHalf), DomainError);
}

TEST(RacahWeight, Examples) {
  EXPECT_EQ(racah_weight(0, kHalf), Rational(1));
  EXPECT_EQ(racah_weight(0, kSmall), Rational(1));
  EXPECT_EQ(racah_weight(1, kSmall), Rational(1, 3));
}

TEST(RacahH0, Examples) {
  EXPECT_THROW(racah_h0(RacahSystem(0, 0, 1, 1)), DegenerateParameterError);
  EXPECT_EQ(racah_h0(kSmall), Rational(4, 3));
  EXPECT_EQ(racah_h0(kSmall), racah_h0_direct(kSmall));
  EXPECT_EQ(racah_h0(kHalf), racah_h0_direct(kHalf));
}

TEST(RacahNormRatio, Examples) {
  EXPECT_EQ(racah_norm_ratio(0, kHalf), Rational(1));
  const Rational brute = (racah_eval(1, 0, kSmall) * racah_eval(1, 0, kSmall) * racah_weight(0, kSmall) +
                          racah_eval(1, 1, kSmall) * racah_eval(1, 1, kSmall) * racah_weight(1, kSmall)) /
                         racah_h0(kSmall);
  EXPECT_EQ(racah_norm_ratio(1, kSmall), brute);
  // h_0 = 0 here, so compare the unnormalized sums.
  Rational sum3;
  for (unsigned x = 0; x <= 3; ++x) sum3 += racah_eval(3, x, kHalf) * racah_eval(3, x, kHalf) * racah_weight(x, kHalf);
  EXPECT_EQ(sum3, racah_norm_ratio(3, kHalf) * racah_h0(kHalf));
}

TEST(EndpointValue, Examples) {
  EXPECT_EQ(endpoint_value_residual(0, kHalf), Rational(0));
  EXPECT_EQ(endpoint_value_residual(1, kDegenerate), Rational(0));
  EXPECT_EQ(endpoint_value_residual(2, kHalf), Rational(0));
}

// The backward shift needs the weights of both the system and its raised partner; the
// (0,0,-3,1) and (1/2,1/2,-4,2) systems have vanishing weight denominators there.
TEST(BackwardShift, DegenerateSystemsAreRejected) {
  for (unsigned x = 0; x <= 2; ++x) EXPECT_THROW(backward_shift_residual(1, x, kDegenerate), DegenerateParameterError);
  const std::vector<Rational> f{1, 0, 0}, g{0, 1, 4, 9};
  EXPECT_THROW(sum_by_parts_residual(1, f, kDegenerate), DegenerateParameterError);
  EXPECT_THROW(sum_by_parts_residual(2, g, kHalf), DegenerateParameterError);
  EXPECT_FALSE(supports_backward_shift(kDegenerate));
  EXPECT_FALSE(supports_backward_shift(kHalf));
}

TEST(BackwardShift, BothBoundaryConventions) {
  ASSERT_TRUE(supports_backward_shift(kSmall));
  EXPECT_EQ(backward_shift_residual(1, 0, kSmall), Rational(0));
  EXPECT_EQ(backward_shift_residual(1, 1, kSmall), Rational(0));
  EXPECT_THROW(backward_shift_residual(0, 0, kSmall), DomainError);
}

TEST(SumByParts, ConstantF) {
  for (const auto& s : racah_sample_systems(20))
    for (unsigned n = 1; n <= s.N(); ++n) {
      const std::vector<Rational> f(s.N() + 1, Rational(3, 7));
      EXPECT_EQ(sum_by_parts_residual(n, f, s), Rational(0));
    }
  const std::vector<Rational> wrong(5, Rational(1));
  EXPECT_THROW(sum_by_parts_residual(1, wrong, kSmall), DomainError);
}

class SampleSystems : public ::testing::TestWithParam<std::size_t> {
 protected:
  RacahSystem sys() const { return racah_sample_systems(20).at(GetParam()); }
};

TEST_P(SampleSystems, SupportsEverything) {
  const auto s = sys();
  EXPECT_TRUE(s.fully_valid());
  EXPECT_TRUE(supports_backward_shift(s));
  EXPECT_GE(s.N(), 1u);
  EXPECT_LE(s.N(), 8u);
}

TEST_P(SampleSystems, EvaluationMatchesOracle) {
  const auto s = sys();
  for (unsigned n = 0; n <= s.N(); ++n)
    for (unsigned x = 0; x <= s.N(); ++x) EXPECT_EQ(racah_eval(n, x, s), racah_4f3(n, x, s));
  for (unsigned x = 0; x <= s.N(); ++x) EXPECT_EQ(racah_weight(x, s), weight_oracle(x, s));
}

TEST_P(SampleSystems, GramMatrixIsDiagonalWithClosedFormNorms) {
  const auto s = sys();
  const Rational h0 = racah_h0(s);
  EXPECT_EQ(h0, racah_h0_direct(s));
  for (unsigned m = 0; m <= s.N(); ++m)
    for (unsigned n = 0; n <= s.N(); ++n) {
      Rational acc;
      for (unsigned x = 0; x <= s.N(); ++x) acc += racah_4f3(m, x, s) * racah_4f3(n, x, s) * weight_oracle(x, s);
      EXPECT_EQ(acc, m == n ? h0 * racah_norm_ratio(n, s) : Rational(0)) << "m=" << m << " n=" << n;
    }
  const auto gram = racah_gram(s);
  for (unsigned n = 0; n <= s.N(); ++n) EXPECT_EQ(gram[n][n], h0 * racah_norm_ratio(n, s));
}

TEST_P(SampleSystems, EndpointBackwardShiftAndSummationByParts) {
  const auto s = sys();
  std::mt19937 rng(1000 + static_cast<unsigned>(GetParam()));
  std::uniform_int_distribution<int> val(-20, 20), den(1, 6);
  for (unsigned n = 0; n <= s.N(); ++n) EXPECT_EQ(endpoint_value_residual(n, s), Rational(0));
  for (unsigned n = 1; n <= s.N(); ++n) {
    for (unsigned x = 0; x <= s.N(); ++x) EXPECT_EQ(backward_shift_residual(n, x, s), Rational(0));
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Rational> f;
      for (unsigned x = 0; x <= s.N(); ++x) f.emplace_back(val(rng), den(rng));
      ASSERT_EQ(sum_by_parts_residual(n, f, s), Rational(0));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Twenty, SampleSystems, ::testing::Range<std::size_t>(0, 20));
