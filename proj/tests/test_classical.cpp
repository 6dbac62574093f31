#include <vector>

#include <gtest/gtest.h>

#include "dualadd/classical.hpp"
#include "dualadd/surd_poly.hpp"

using namespace dualadd;

namespace {

const std::vector<Rational> kAlphas{Rational(0), Rational(1, 2), Rational(1), Rational(7, 3)};

// Oracle: classical C_n^{lambda} by its three-term recurrence, lambda = alpha + 1/2,
// divided by C_n^{lambda}(1) = (2 lambda)_n / n!.
UniPoly gegenbauer_by_recurrence(unsigned n, const Rational& alpha) {
  const Rational lam = alpha + Rational(1, 2);
  UniPoly prev = UniPoly::constant(1), cur = UniPoly::x() * (2 * lam);
  if (n == 0) return prev;
  for (unsigned k = 2; k <= n; ++k) {
    UniPoly next = (UniPoly::x() * cur * (2 * (Rational(k) + lam - 1)) - prev * (Rational(k) + 2 * lam - 2)) *
                   (Rational(1) / Rational(k));
    prev = cur;
    cur = next;
  }
  return cur * (factorial(n) / pochhammer(2 * lam, n));
}

// Oracle: int_{-1}^{1} p(x) (1-x)^a (1+x)^b dx for integer a, b >= 0, by expanding the
// weight and integrating monomials.
Rational integrate_jacobi_weight(const UniPoly& p, unsigned a, unsigned b) {
  const UniPoly w = UniPoly(std::vector<Rational>{1, -1}).pow(a) * UniPoly(std::vector<Rational>{1, 1}).pow(b);
  const UniPoly f = p * w;
  Rational acc;
  for (std::size_t k = 0; k < f.coefficients().size(); k += 2)
    acc += f.coefficients()[k] * Rational(2) / Rational(static_cast<long>(k) + 1);
  return acc;
}

}  // namespace

TEST(JacobiR, Examples) {
  EXPECT_EQ(jacobi_r(0, Rational(3, 2), Rational(-1, 3)), UniPoly::constant(1));
  EXPECT_EQ(jacobi_r(2, 0, 0), UniPoly(std::vector<Rational>{Rational(-1, 2), 0, Rational(3, 2)}));
  EXPECT_EQ(jacobi_r(3, 0, 0)(Rational(1)), Rational(1));
  EXPECT_THROW(jacobi_r(2, Rational(-1), 0), DomainError);
}

TEST(GegenbauerR, Examples) {
  EXPECT_EQ(gegenbauer_r(1, Rational(1, 2)), UniPoly::x());
  EXPECT_EQ(gegenbauer_r(2, 0), jacobi_r(2, 0, 0));
}

TEST(Hermite, Examples) {
  EXPECT_EQ(hermite(0), UniPoly::constant(1));
  EXPECT_EQ(hermite(1), UniPoly::monomial(1, 2));
  EXPECT_EQ(hermite(2), UniPoly(std::vector<Rational>{-2, 0, 4}));
}

TEST(Hermite, MatchesRecurrence) {
  UniPoly prev = UniPoly::constant(1), cur = UniPoly::monomial(1, 2);
  for (unsigned n = 2; n <= 15; ++n) {
    UniPoly next = UniPoly::x() * cur * Rational(2) - prev * Rational(2 * (n - 1));
    prev = cur;
    cur = next;
    EXPECT_EQ(hermite(n), cur) << "n=" << n;
  }
}

TEST(EvenMoment, Examples) {
  EXPECT_EQ(even_moment(0, Rational(5, 7)), Rational(1));
  EXPECT_EQ(even_moment(1, 0), Rational(1, 3));
  EXPECT_EQ(even_moment(2, Rational(1, 2)), Rational(1, 8));
}

TEST(InnerProduct, Examples) {
  EXPECT_EQ(inner_product(UniPoly::constant(1), UniPoly::constant(1), Rational(2, 3)), Rational(1));
  EXPECT_EQ(inner_product(gegenbauer_r(1, 0), gegenbauer_r(1, 0), 0), Rational(1, 3));
  EXPECT_EQ(inner_product(gegenbauer_r(1, Rational(3, 4)), gegenbauer_r(2, Rational(3, 4)), Rational(3, 4)),
            Rational(0));
}

TEST(NormRatio, Examples) {
  EXPECT_EQ(norm_ratio(0, Rational(7, 3)), Rational(1));
  EXPECT_EQ(norm_ratio(1, 0), Rational(1, 3));
  EXPECT_EQ(norm_ratio(2, 0), Rational(1, 5));
}

TEST(DifferenceResidual, Examples) {
  EXPECT_TRUE(difference_residual(2, 0).is_zero());
  EXPECT_TRUE(difference_residual(3, Rational(1, 2)).is_zero());
  EXPECT_TRUE(difference_residual(5, Rational(7, 3)).is_zero());
  EXPECT_THROW(difference_residual(1, 0), DomainError);
}

TEST(GegenbauerR, AgreesWithJacobiAndRecurrence) {
  for (const auto& a : kAlphas)
    for (unsigned n = 0; n <= 12; ++n) {
      EXPECT_EQ(gegenbauer_r(n, a), jacobi_r(n, a, a)) << "n=" << n << " alpha=" << a;
      EXPECT_EQ(gegenbauer_r(n, a), gegenbauer_by_recurrence(n, a)) << "n=" << n << " alpha=" << a;
    }
}

TEST(GegenbauerR, Orthogonality) {
  for (const auto& a : kAlphas)
    for (unsigned n = 0; n <= 10; ++n) {
      const UniPoly rn = gegenbauer_r(n, a);
      EXPECT_EQ(inner_product(rn, rn, a), norm_ratio(n, a));
      for (unsigned m = 0; m < n; ++m) EXPECT_TRUE(inner_product(gegenbauer_r(m, a), rn, a).is_zero());
    }
}

// For integer alpha the weight is a polynomial, so the inner product can be recomputed
// by plain monomial integration.
TEST(InnerProduct, MatchesDirectIntegrationForIntegerAlpha) {
  for (unsigned a = 0; a <= 3; ++a) {
    const Rational mass = integrate_jacobi_weight(UniPoly::constant(1), a, a);
    for (unsigned m = 0; m <= 6; ++m)
      for (unsigned n = 0; n <= 6; ++n) {
        const UniPoly p = gegenbauer_r(m, a), q = gegenbauer_r(n, a);
        EXPECT_EQ(inner_product(p, q, a), integrate_jacobi_weight(p * q, a, a) / mass);
      }
  }
}

TEST(JacobiR, OrthogonalForIntegerParameters) {
  for (unsigned a = 0; a <= 2; ++a)
    for (unsigned b = 0; b <= 2; ++b)
      for (unsigned n = 1; n <= 7; ++n) {
        const UniPoly pn = jacobi_r(n, a, b);
        EXPECT_EQ(pn(Rational(1)), Rational(1));
        EXPECT_EQ(pn.leading(), jacobi_r_leading(n, a, b));
        for (unsigned m = 0; m < n; ++m) EXPECT_TRUE(integrate_jacobi_weight(jacobi_r(m, a, b) * pn, a, b).is_zero());
      }
}

TEST(GegenbauerR, LeadingCoefficient) {
  for (const auto& a : kAlphas)
    for (unsigned n = 0; n <= 12; ++n) EXPECT_EQ(gegenbauer_r(n, a).leading(), jacobi_r_leading(n, a, a));
}

TEST(GegenbauerR, BoundedOnTheInterval) {
  for (const auto& a : {Rational(0), Rational(1, 2), Rational(1)})
    for (unsigned n = 0; n <= 10; ++n) {
      const UniPoly rn = gegenbauer_r(n, a);
      for (int k = 0; k < 50; ++k) {
        const auto p = pythagorean_point(Rational(k, 7));
        EXPECT_LE(rn(p.x).abs(), Rational(1));
        EXPECT_LE(rn(-p.x).abs(), Rational(1));
      }
    }
}

TEST(DifferenceResidual, VanishesOnGrid) {
  for (const auto& a : kAlphas)
    for (unsigned n = 2; n <= 12; ++n) EXPECT_TRUE(difference_residual(n, a).is_zero());
}

TEST(GegenbauerR, ParityAndValueAtOne) {
  for (const auto& a : kAlphas)
    for (unsigned n = 0; n <= 12; ++n) {
      const UniPoly rn = gegenbauer_r(n, a);
      EXPECT_EQ(rn(Rational(1)), Rational(1));
      EXPECT_EQ(rn(Rational(-1)), n % 2 == 0 ? Rational(1) : Rational(-1));
      for (std::size_t k = (n + 1) % 2; k < rn.coefficients().size(); k += 2) EXPECT_TRUE(rn.coeff(k).is_zero());
    }
}
