#include <vector>

#include <gtest/gtest.h>

#include "dualadd/hermite_limit.hpp"

using namespace dualadd;

namespace {

// Oracle: physicists' Hermite polynomials from H_{n+1} = 2x H_n - 2n H_{n-1}.
std::vector<UniPoly> hermite_table(unsigned top) {
  std::vector<UniPoly> h{UniPoly::constant(1), UniPoly::monomial(1, 2)};
  for (unsigned n = 1; n < top; ++n) h.push_back(UniPoly::x() * h[n] * Rational(2) - h[n - 1] * Rational(2 * n));
  return h;
}

Rational np(unsigned a, unsigned n) { return pochhammer(-Rational(a), n); }

const std::vector<int> kPowers{4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16};

LimitIndices idx(unsigned n, unsigned j, unsigned l, unsigned m) {
  LimitIndices i;
  i.n = n;
  i.j = j;
  i.l = l;
  i.m = m;
  return i;
}

}  // namespace

TEST(HermiteSetting, Validation) { EXPECT_THROW(HermiteSetting(1, 2), DomainError); }

TEST(HermiteAddition, Examples) {
  EXPECT_TRUE(hermite_addition_residual(0).is_zero());
  EXPECT_TRUE(hermite_addition_residual(1).is_zero());
  EXPECT_TRUE(hermite_addition_residual(3).is_zero());
  EXPECT_TRUE(hermite_product_residual(1).is_zero());
  EXPECT_TRUE(hermite_product_residual(2).is_zero());
  EXPECT_TRUE(hermite_product_residual(5).is_zero());
  for (unsigned n = 0; n <= 12; ++n) {
    EXPECT_TRUE(hermite_addition_residual(n).is_zero()) << n;
    EXPECT_TRUE(hermite_product_residual(n).is_zero()) << n;
  }
}

TEST(HermiteDual, Examples) {
  EXPECT_TRUE(hermite_dual_addition_residual(0, HermiteSetting(1, 1)).is_zero());
  EXPECT_TRUE(hermite_dual_addition_residual(1, HermiteSetting(1, 1)).is_zero());
  EXPECT_TRUE(hermite_dual_addition_residual(1, HermiteSetting(3, 2)).is_zero());
  EXPECT_TRUE(hermite_dual_inverse_residual(0, HermiteSetting(1, 1)).is_zero());
  EXPECT_TRUE(hermite_dual_inverse_residual(1, HermiteSetting(1, 1)).is_zero());
  EXPECT_TRUE(hermite_dual_inverse_residual(2, HermiteSetting(4, 3)).is_zero());
}

// Both expansions recomputed from the recurrence table and compared with the library residuals.
TEST(HermiteDual, ExpansionsAgainstRecurrenceOracle) {
  const auto H = hermite_table(24);
  for (unsigned l = 0; l <= 12; ++l)
    for (unsigned m = 0; m <= l; ++m) {
      const HermiteSetting s(l, m);
      for (unsigned j = 0; j <= m; ++j) {
        UniPoly rhs;
        for (unsigned n = j; n <= m; ++n)
          rhs += H[l - n] * H[m - n] * (np(n, j) / factorial(n) * pow(Rational(-2), n) * np(l, n) * np(m, n));
        const UniPoly lhs = H[l + m - 2 * j] * (pow(Rational(2), j) * np(l, j) * np(m, j));
        ASSERT_EQ(lhs, rhs) << "l=" << l << " m=" << m << " j=" << j;
        ASSERT_TRUE(hermite_dual_addition_residual(j, s).is_zero());
        ASSERT_TRUE(hermite_dual_inverse_residual(j, s).is_zero());
      }
      ASSERT_TRUE(hermite_j0_residual(s).is_zero());
      // Classical linearization with binomials: H_l H_m = sum_j 2^j j! C(l,j) C(m,j) H_{l+m-2j}.
      UniPoly lin;
      for (unsigned j = 0; j <= m; ++j)
        lin += H[l + m - 2 * j] * (pow(Rational(2), j) * factorial(j) * binomial(l, j) * binomial(m, j));
      ASSERT_EQ(lin, H[l] * H[m]);
      ASSERT_TRUE(hermite_linearization_residual(s).is_zero());
      for (unsigned n = 0; n <= m; ++n)
        for (const auto& r : hermite_inversion_residual(n, s)) ASSERT_TRUE(r.is_zero());
    }
}

TEST(Biorthogonality, Examples) {
  EXPECT_EQ(biorthogonality_value(2, 1, BiorthogonalityKernel::as_printed), Rational(-1));
  EXPECT_EQ(biorthogonality_value(2, 1, BiorthogonalityKernel::corrected), Rational(0));
  for (unsigned n = 0; n <= 5; ++n) EXPECT_EQ(biorthogonality_value(n, n, BiorthogonalityKernel::corrected), Rational(1));
}

TEST(Biorthogonality, CorrectedAndLimitKernelsAreDelta) {
  for (unsigned n = 0; n <= 20; ++n)
    for (unsigned k = 0; k <= 20; ++k) {
      const Rational delta(n == k ? 1 : 0);
      EXPECT_EQ(biorthogonality_value(n, k, BiorthogonalityKernel::corrected), delta);
      EXPECT_EQ(biorthogonality_value(n, k, BiorthogonalityKernel::racah_limit), delta);
    }
}

// Oracle: the as-printed kernel summed by hand for (2, 1):
// j=0: 1 * 0; j=1: (-2)/2 * 1 = -1; j=2: 1/2 * (-2)_1 ... recomputed here from scratch.
TEST(Biorthogonality, PrintedKernelHandSum) {
  Rational acc;
  for (unsigned j = 0; j <= 2; ++j) acc += np(2, j) / factorial(2) * np(j, 1) / factorial(1);
  EXPECT_EQ(acc, Rational(-1));
}

TEST(LimitRate, Eq53Example) {
  LimitIndices i = idx(2, 0, 0, 0);
  i.x = Rational(1, 2);
  const auto rep = limit_rate_check(LimitTarget::eq53, i, dyadic_alphas(kPowers));
  EXPECT_TRUE(rep.decays);
  EXPECT_LE(rep.worst_ratio, decay_bound());
  // At alpha = 2^10 the deviation is about c/alpha.
  const Rational d10 = rep.deviations[6];
  EXPECT_GT(d10.abs() * Rational(1024), Rational(1, 100));
  EXPECT_LT(d10.abs() * Rational(1024), Rational(10));
}

TEST(LimitRate, Eq54nExample) {
  const auto i = idx(1, 1, 3, 2);
  EXPECT_EQ(limit_value(LimitTarget::eq54n, i), UniPoly::constant(Rational(-1, 3)));
  const auto rep = limit_rate_check(LimitTarget::eq54n, i, dyadic_alphas(kPowers));
  EXPECT_TRUE(rep.decays) << rep.worst_ratio;
  EXPECT_NO_THROW(require_decay(rep, "eq54n"));
}

TEST(LimitRate, Eq56NZero) {
  const auto i = idx(0, 0, 3, 2);
  EXPECT_EQ(limit_value(LimitTarget::eq56, i), UniPoly::constant(1));
  const auto rep = limit_rate_check(LimitTarget::eq56, i, dyadic_alphas(kPowers));
  EXPECT_TRUE(rep.decays);
}

TEST(LimitRate, RejectsNonIncreasingAlphas) {
  EXPECT_THROW(limit_rate_check(LimitTarget::eq53, idx(1, 0, 0, 0), {Rational(4), Rational(2)}), DomainError);
  EXPECT_THROW(limit_rate_check(LimitTarget::eq53, idx(1, 0, 0, 0), {Rational(4)}), DomainError);
}

TEST(LimitRate, ViolationIsReported) {
  LimitReport rep;
  rep.decays = false;
  rep.worst_ratio = Rational(9, 10);
  EXPECT_THROW(require_decay(rep, "synthetic"), LimitViolationError);
}

TEST(LimitRate, AllTargetsDecayOnSmallIndices) {
  const auto alphas = dyadic_alphas(kPowers);
  for (unsigned n = 0; n <= 6; ++n) {
    EXPECT_TRUE(limit_rate_check(LimitTarget::eq52, idx(n, 0, 0, 0), alphas).decays) << "eq52 n=" << n;
    EXPECT_TRUE(limit_rate_check(LimitTarget::eq53, idx(n, 0, 0, 0), alphas).decays) << "eq53 n=" << n;
  }
  for (unsigned l = 0; l <= 3; ++l)
    for (unsigned m = 0; m <= l; ++m)
      for (unsigned j = 0; j <= m; ++j)
        for (unsigned n = 0; n <= m; ++n) {
          const auto i = idx(n, j, l, m);
          for (auto t : {LimitTarget::eq54j, LimitTarget::eq54n})
            EXPECT_TRUE(limit_rate_check(t, i, alphas).decays)
                << limit_target_name(t) << " l=" << l << " m=" << m << " j=" << j << " n=" << n;
          if (n == 0) {
            EXPECT_TRUE(limit_rate_check(LimitTarget::eq55, i, alphas).decays);
          }
          if (j == 0) {
            EXPECT_TRUE(limit_rate_check(LimitTarget::eq56, i, alphas).decays);
          }
        }
}

TEST(RacahToBiorthogonality, Examples) {
  const auto alphas = dyadic_alphas(kPowers);
  auto rep = racah_to_biorthogonality_limit(1, 1, 3, 2, alphas);
  EXPECT_TRUE(rep.decays);
  EXPECT_LT(rep.deviations.back().abs(), Rational(1, 1000));
  rep = racah_to_biorthogonality_limit(2, 1, 3, 2, alphas);
  EXPECT_TRUE(rep.decays);
  rep = racah_to_biorthogonality_limit(0, 0, 3, 2, alphas);
  for (const auto& d : rep.deviations) EXPECT_TRUE(d.is_zero());
  EXPECT_THROW(racah_to_biorthogonality_limit(3, 0, 3, 2, alphas), DomainError);
}

// The Eq (40) term, rescaled, tends to the Hermite dual addition term.
TEST(LimitRate, DualAdditionTermLimitIsHermiteTerm) {
  const auto i = idx(1, 0, 2, 1);
  const UniPoly lim = limit_value(LimitTarget::eq40_term, i);
  EXPECT_FALSE(lim.is_zero());
  const auto rep = limit_rate_check(LimitTarget::eq40_term, i, dyadic_alphas(kPowers));
  EXPECT_LT(rep.deviations.back().abs(), Rational(1, 100));
}
