#include <vector>

#include <gtest/gtest.h>

#include "dualadd/dual_addition.hpp"

using namespace dualadd;

namespace {

const std::vector<Rational> kAlphas{Rational(0), Rational(1, 2), Rational(1), Rational(7, 3)};

// Oracle: coefficients of p in the basis R_0..R_deg, peeled off from the top degree.
std::vector<Rational> expand_in_gegenbauer(UniPoly p, const Rational& alpha) {
  const int deg = p.degree();
  std::vector<Rational> c(deg < 0 ? 0 : deg + 1);
  for (int k = deg; k >= 0; --k) {
    const UniPoly rk = gegenbauer_r(static_cast<unsigned>(k), alpha);
    c[k] = p.coeff(k) / rk.leading();
    p -= rk * c[k];
  }
  EXPECT_TRUE(p.is_zero());
  return c;
}

template <class Fn>
void for_small_grid(Fn&& fn, unsigned l_max = 5) {
  for (const auto& a : kAlphas)
    for (unsigned l = 0; l <= l_max; ++l)
      for (unsigned m = 0; m <= l; ++m) fn(DualSetting(a, l, m));
}

}  // namespace

TEST(DualSetting, Validation) {
  EXPECT_THROW(DualSetting(0, 1, 2), DomainError);
  EXPECT_THROW(DualSetting(Rational(-1, 2), 2, 1), DomainError);
  EXPECT_THROW(linearization_coeff(2, DualSetting(0, 1, 1)), DomainError);
}

TEST(Linearization, LegendreExample) {
  const DualSetting s(0, 1, 1);
  EXPECT_EQ(linearization_coeff(0, s), Rational(2, 3));
  EXPECT_EQ(linearization_coeff(1, s), Rational(1, 3));
  const auto oracle = expand_in_gegenbauer(gegenbauer_r(1, 0) * gegenbauer_r(1, 0), 0);
  EXPECT_EQ(oracle[2], Rational(2, 3));
  EXPECT_EQ(oracle[0], Rational(1, 3));
  EXPECT_EQ(coeff_as_racah_weight_residual(0, s), Rational(0));
}

TEST(Linearization, HalfIntegerExampleAgainstOracle) {
  const DualSetting s(Rational(1, 2), 2, 1);
  const auto oracle = expand_in_gegenbauer(gegenbauer_r(2, s.alpha()) * gegenbauer_r(1, s.alpha()), s.alpha());
  for (unsigned j = 0; j <= 1; ++j) EXPECT_EQ(linearization_coeff(j, s), oracle[3 - 2 * j]);
  // Also via inner products.
  for (unsigned j = 0; j <= 1; ++j) {
    const UniPoly rk = gegenbauer_r(3 - 2 * j, s.alpha());
    EXPECT_EQ(linearization_coeff(j, s),
              inner_product(gegenbauer_r(2, s.alpha()) * gegenbauer_r(1, s.alpha()), rk, s.alpha()) /
                  norm_ratio(3 - 2 * j, s.alpha()));
  }
}

TEST(Linearization, MatchesOracleAndRacahWeights) {
  for_small_grid([](const DualSetting& s) {
    const auto oracle =
        expand_in_gegenbauer(gegenbauer_r(s.l(), s.alpha()) * gegenbauer_r(s.m(), s.alpha()), s.alpha());
    Rational total;
    for (unsigned j = 0; j <= s.m(); ++j) {
      const Rational c = linearization_coeff(j, s);
      EXPECT_EQ(c, oracle[s.l() + s.m() - 2 * j]);
      EXPECT_EQ(coeff_as_racah_weight_residual(j, s), Rational(0));
      EXPECT_GT(c, Rational(0));
      total += c;
    }
    EXPECT_EQ(total, Rational(1));
  });
  const DualSetting s(Rational(3, 2), 4, 3);
  for (unsigned j = 0; j <= 3; ++j) EXPECT_EQ(coeff_as_racah_weight_residual(j, s), Rational(0));
}

// Degree parity: every missing index l+m-1, l+m-3, ... has zero coefficient in the oracle.
TEST(Linearization, OnlyMatchingParityAppears) {
  for_small_grid([](const DualSetting& s) {
    const auto oracle =
        expand_in_gegenbauer(gegenbauer_r(s.l(), s.alpha()) * gegenbauer_r(s.m(), s.alpha()), s.alpha());
    for (unsigned k = 0; k < oracle.size(); ++k) {
      const bool present = k >= s.l() - s.m() && (s.l() + s.m() - k) % 2 == 0;
      if (!present) {
        EXPECT_TRUE(oracle[k].is_zero()) << "k=" << k;
      }
    }
  });
}

TEST(SSums, Examples) {
  const DualSetting s(0, 1, 1);
  const RacahSystem sys = specialized_racah(s);
  EXPECT_EQ(s_direct(0, s), gegenbauer_r(1, 0) * gegenbauer_r(1, 0) * racah_h0(sys));
  EXPECT_EQ(s_closed_prefactor(0, s), racah_h0(sys));
  EXPECT_EQ(s_direct(1, s), s_closed(1, s));
  EXPECT_EQ(s_direct(2, DualSetting(Rational(1, 2), 3, 2)), s_closed(2, DualSetting(Rational(1, 2), 3, 2)));
}

TEST(SSums, DirectEqualsClosed) {
  for_small_grid([](const DualSetting& s) {
    for (unsigned n = 0; n <= s.m(); ++n) EXPECT_EQ(s_direct(n, s), s_closed(n, s));
    EXPECT_EQ(s_closed_prefactor(0, s), racah_h0(specialized_racah(s)));
  });
}

TEST(DualAddition, LegendreHandExpansion) {
  const DualSetting s(0, 1, 1);
  const auto terms = dual_addition_terms(0, s);
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0], UniPoly::monomial(2));
  EXPECT_EQ(terms[1], UniPoly(std::vector<Rational>{Rational(-1, 2), 0, Rational(1, 2)}));
  EXPECT_TRUE(dual_addition_residual(0, s).is_zero());
}

TEST(DualAddition, ResidualVanishesOnGrid) {
  for_small_grid([](const DualSetting& s) {
    for (unsigned j = 0; j <= s.m(); ++j) EXPECT_TRUE(dual_addition_residual(j, s).is_zero());
    EXPECT_TRUE(dual_addition_j0_residual(s).is_zero());
    EXPECT_TRUE(dual_addition_jm_residual(s).is_zero());
    EXPECT_EQ(dual_addition_j0_residual(s), dual_addition_residual(0, s));
  });
  EXPECT_TRUE(dual_addition_jm_residual(DualSetting(1, 3, 2)).is_zero());
}

// At x = 1 only the n = 0 term survives; R_n(j) at j = 0 is 1, so c_0 must be 1.
TEST(DualAddition, ValueAtOneAndLeadingTerm) {
  for_small_grid([](const DualSetting& s) {
    EXPECT_EQ(dual_addition_coefficient(0, s), Rational(1));
    for (unsigned j = 0; j <= s.m(); ++j) {
      const auto terms = dual_addition_terms(j, s);
      for (unsigned n = 1; n < terms.size(); ++n) EXPECT_TRUE(terms[n](Rational(1)).is_zero());
    }
  });
}

TEST(DualAddition, SelfDualExpansionOfOne) {
  EXPECT_TRUE(self_dual_residual(0, 0).is_zero());
  EXPECT_TRUE(self_dual_residual(3, Rational(1, 2)).is_zero());
  for (const auto& a : kAlphas)
    for (unsigned m = 0; m <= 6; ++m) EXPECT_TRUE(self_dual_residual(m, a).is_zero());
}

TEST(DualAddition, IntegralIdentity) {
  const DualSetting s(0, 1, 1);
  EXPECT_EQ(integral_identity_residual(0, 0, s), Rational(0));
  EXPECT_EQ(integral_identity_residual(1, 1, s), Rational(0));
  for_small_grid(
      [](const DualSetting& s) {
        for (unsigned n = 0; n <= s.m(); ++n)
          for (unsigned j = 0; j <= s.m(); ++j) EXPECT_EQ(integral_identity_residual(n, j, s), Rational(0));
      },
      4);
}

TEST(DualAddition, FourierRacahInversion) {
  for_small_grid([](const DualSetting& s) {
    for (unsigned n = 0; n <= s.m(); ++n) EXPECT_TRUE(fourier_racah_residual(n, s).is_zero());
  });
}

TEST(Whipple, RatiosAreConstantOverJ) {
  EXPECT_NO_THROW(whipple_proportionality(1, DualSetting(Rational(1, 2), 3, 2)));
  for_small_grid([](const DualSetting& s) {
    for (unsigned n = 0; n <= s.m(); ++n) EXPECT_NO_THROW(whipple_proportionality(n, s));
    for (unsigned j = 0; j <= s.m(); ++j) EXPECT_EQ(whipple_second_series(0, j, s), whipple_second_series_n0(j, s));
  });
}

TEST(Whipple, NZeroRatioFollowsFromTheLinearization) {
  for_small_grid([](const DualSetting& s) {
    const auto k = whipple_proportionality(0, s);
    // n = 0: the integral is c_j h_{l+m-2j}/h_0 and the Racah value is 1.
    EXPECT_EQ(k.first, Rational(1) / racah_h0(specialized_racah(s)));
  });
}
