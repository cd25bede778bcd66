#include "diffideal/derivation.hpp"
#include "diffideal/error.hpp"
#include "diffideal/text.hpp"
#include "support/fixtures.hpp"
#include "support/random_poly.hpp"

#include <gtest/gtest.h>

namespace diffideal {
namespace {

using testing::make_ring;


TEST(DerivationTest, DPolyExamples) {
  DifferentialRing circle = make_ring({"X", "Y"}, {}, {"X", "Y"});
  const RingPtr& r = circle.ring();
  EXPECT_EQ(d_poly(circle, parse_polynomial(r, "X^2 + Y^2")), parse_polynomial(r, "2*X^2 + 2*Y^2"));
  EXPECT_TRUE(d_poly(circle, parse_polynomial(r, "7/3")).is_zero());

  DifferentialRing s2 = make_ring({"X"}, {"alpha"}, {"X^3 - 2*X^2 + 2*X", "alpha^3 - 2*alpha^2 + 2*alpha"});
  EXPECT_EQ(d_poly(s2, parse_polynomial(s2.ring(), "X - alpha")),
            parse_polynomial(s2.ring(), "X^3 - 2*X^2 + 2*X - alpha^3 + 2*alpha^2 - 2*alpha"));
}

TEST(DerivationTest, DRatfuncExamples) {
  DifferentialRing circle = make_ring({"X", "Y"}, {}, {"X", "Y"});
  const RingPtr& r = circle.ring();
  EXPECT_TRUE(d_ratfunc(circle, parse_rational_function(r, "X/Y")).is_zero());
  EXPECT_EQ(d_ratfunc(circle, parse_rational_function(r, "1/Y")), parse_rational_function(r, "-1/Y"));
  MultiPoly p = parse_polynomial(r, "X^3*Y - 5*Y + 1");
  EXPECT_EQ(d_ratfunc(circle, RationalFunction(p)), RationalFunction(d_poly(circle, p)));
}

TEST(DerivationTest, IsConstantExamples) {
  DifferentialRing circle = make_ring({"X", "Y"}, {}, {"X", "Y"});
  const RingPtr& r = circle.ring();
  EXPECT_TRUE(is_constant(circle, parse_rational_function(r, "X/Y")));
  EXPECT_FALSE(is_constant(circle, parse_rational_function(r, "X")));
  EXPECT_TRUE(is_constant(circle, parse_rational_function(r, "(X^2 + Y^2)/(X*Y)")));
}

TEST(DerivationTest, ParametersAreNotAutomaticallyConstant) {
  DifferentialRing d = make_ring({"X"}, {"a"}, {"X", "a"});
  EXPECT_FALSE(is_constant(d, parse_rational_function(d.ring(), "a")));
  EXPECT_TRUE(is_constant(d, parse_rational_function(d.ring(), "X/a")));
}

TEST(DerivationTest, ConstructionChecks) {
  RingPtr r = Ring::make({"X", "Y"});
  EXPECT_THROW(DifferentialRing::from_polynomials(r, {parse_polynomial(r, "X")}), RingMismatch);
  RingPtr other = Ring::make({"X", "Y"}, {"a"});
  EXPECT_THROW(DifferentialRing::from_polynomials(r, {parse_polynomial(r, "X"), parse_polynomial(other, "Y")}),
               RingMismatch);
}

TEST(DerivationTest, RescaleExamples) {
  DifferentialRing d = make_ring({"X"}, {"alpha"}, {"X", "alpha"});
  const RingPtr& r = d.ring();
  DifferentialRing twice = rescale_derivation(d, parse_rational_function(r, "2"));
  EXPECT_EQ(twice.polynomial_image(0), parse_polynomial(r, "2*X"));
  DifferentialRing by_alpha = rescale_derivation(d, parse_rational_function(r, "alpha"));
  EXPECT_EQ(by_alpha.polynomial_image(0), parse_polynomial(r, "alpha*X"));

  DifferentialRing inv = rescale_derivation(d, parse_rational_function(r, "1/alpha"));
  EXPECT_FALSE(inv.has_polynomial_images());
  EXPECT_EQ(inv.image(0), parse_rational_function(r, "X/alpha"));
  EXPECT_THROW((void)inv.polynomial_image(0), DomainError);
  EXPECT_THROW((void)d_poly(inv, parse_polynomial(r, "X")), DomainError);
  ClearedDerivation cleared = clear_denominators(inv);
  EXPECT_EQ(cleared.factor, parse_rational_function(r, "alpha"));
  EXPECT_TRUE(cleared.ring.has_polynomial_images());
  EXPECT_EQ(cleared.ring.polynomial_image(0), parse_polynomial(r, "X"));
  EXPECT_EQ(cleared.ring.polynomial_image(1), parse_polynomial(r, "alpha"));

  EXPECT_THROW(rescale_derivation(d, RationalFunction(r)), DomainError);
  EXPECT_THROW(rescale_derivation(d, parse_rational_function(r, "X")), DomainError);
  EXPECT_THROW(rescale_derivation(d, parse_rational_function(r, "alpha/X")), DomainError);
}

TEST(DerivationTest, ClearDenominatorsRejectsVariableDenominators) {
  RingPtr r = Ring::make({"X", "Y"});
  DifferentialRing d(r, DerivationSpec{{parse_rational_function(r, "1/Y"), parse_rational_function(r, "1")}});
  EXPECT_THROW(clear_denominators(d), DomainError);
  DifferentialRing p = make_ring({"X"}, {}, {"X"});
  EXPECT_EQ(clear_denominators(p).factor, RationalFunction(parse_polynomial(p.ring(), "1")));
}

TEST(DerivationTest, GeneralImagesAgreeWithPolynomialPath) {
  DifferentialRing d = make_ring({"X", "Y"}, {"a"}, {"a*X + Y^2", "X*Y - 1", "a^2"});
  DifferentialRing scaled = rescale_derivation(d, parse_rational_function(d.ring(), "1/(a + 1)"));
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    MultiPoly p = testing::random_poly(d.ring(), rng, {3, 4, 6, true});
    ASSERT_EQ(d_poly_general(d, p), RationalFunction(d_poly(d, p)));
    ASSERT_EQ(d_poly_general(scaled, p), parse_rational_function(d.ring(), "1/(a + 1)") * d_poly(d, p));
  }
}

class DerivationProperties : public ::testing::Test {
protected:
  DifferentialRing d = make_ring({"X", "Y"}, {"a"}, {"X^2 - a*Y + 1/2", "3*X*Y - Y^3", "a^2 - a"});
  testing::RandomPolySpec spec{4, 5, 10, true};
};

TEST_F(DerivationProperties, Leibniz) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 500; ++i) {
    MultiPoly p = testing::random_poly(d.ring(), rng, spec), q = testing::random_poly(d.ring(), rng, spec);
    ASSERT_EQ(d_poly(d, p * q), p * d_poly(d, q) + q * d_poly(d, p));
  }
}

TEST_F(DerivationProperties, Additivity) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 300; ++i) {
    MultiPoly p = testing::random_poly(d.ring(), rng, spec), q = testing::random_poly(d.ring(), rng, spec);
    ASSERT_EQ(d_poly(d, p + q), d_poly(d, p) + d_poly(d, q));
  }
}

TEST_F(DerivationProperties, PowerRule) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 100; ++i) {
    MultiPoly p = testing::random_poly(d.ring(), rng, {2, 3, 5, true});
    for (unsigned n = 1; n <= 5; ++n)
      ASSERT_EQ(d_poly(d, p.pow(n)), BigRational(n) * p.pow(n - 1) * d_poly(d, p));
  }
}

TEST_F(DerivationProperties, QuotientRuleIgnoresRepresentative) {
  std::mt19937_64 rng(35);
  testing::RandomPolySpec small{2, 3, 5, true};
  for (int i = 0; i < 100; ++i) {
    MultiPoly n = testing::random_poly(d.ring(), rng, small);
    MultiPoly den = testing::random_nonzero_poly(d.ring(), rng, small);
    MultiPoly k = testing::random_nonzero_poly(d.ring(), rng, small);
    RationalFunction canonical(n, den);
    RationalFunction raw = RationalFunction::unreduced(n * k, den * k);
    ASSERT_EQ(d_ratfunc(d, raw), d_ratfunc(d, canonical));
    ASSERT_EQ(d_ratfunc(d, RationalFunction(n)), RationalFunction(d_poly(d, n)));
  }
}

} // namespace
} // namespace diffideal
