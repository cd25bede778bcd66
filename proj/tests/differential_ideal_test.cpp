#include "diffideal/differential_ideal.hpp"
#include "diffideal/error.hpp"
#include "diffideal/text.hpp"
#include "support/fixtures.hpp"
#include "support/random_poly.hpp"

#include <gtest/gtest.h>

namespace diffideal {
namespace {

using testing::make_ring;


Ideal ideal(const DifferentialRing& d, std::initializer_list<std::string_view> gens) {
  std::vector<MultiPoly> out;
  for (auto g : gens) out.push_back(parse_polynomial(d.ring(), g));
  return Ideal(d.ring(), out);
}

TEST(DifferentialIdealTest, Examples) {
  DifferentialRing circle = make_ring({"X", "Y"}, {}, {"X", "Y"});
  EXPECT_TRUE(is_differential_ideal(circle, ideal(circle, {"X^2 + Y^2"})));
  EXPECT_FALSE(is_differential_ideal(circle, ideal(circle, {"X + Y^2"})));
  EXPECT_TRUE(is_differential_ideal(circle, ideal(circle, {"X", "Y"})));
}

TEST(DifferentialIdealTest, NonMemberRemainderDependsOnOrder) {
  // D(X + Y^2) = X + 2Y^2 reduces to Y^2 under lex and to -X under grevlex.
  for (auto kind : {MonomialOrder::Kind::lex, MonomialOrder::Kind::grevlex}) {
    RingPtr r = Ring::make({"X", "Y"}, {}, kind);
    MultiPoly g = parse_polynomial(r, "X + Y^2");
    MultiPoly dg = parse_polynomial(r, "X + 2*Y^2");
    MultiPoly nf = normal_form(dg, Ideal(r, {g}).groebner());
    EXPECT_EQ(nf, parse_polynomial(r, kind == MonomialOrder::Kind::lex ? "Y^2" : "-X"));
  }
}

TEST(DifferentialIdealTest, ClosureExamples) {
  DifferentialRing circle = make_ring({"X", "Y"}, {}, {"X", "Y"});
  Ideal c = differential_closure(circle, ideal(circle, {"X^2 + Y^2"}));
  EXPECT_EQ(c.groebner().polys, ideal(circle, {"X^2 + Y^2"}).groebner().polys);

  DifferentialRing shear = make_ring({"X", "Y"}, {}, {"X", "X"});
  Ideal s = differential_closure(shear, ideal(shear, {"Y"}));
  EXPECT_EQ(s.groebner().polys, ideal(shear, {"Y", "X"}).groebner().polys);

  Ideal unit = differential_closure(circle, ideal(circle, {"1"}));
  EXPECT_TRUE(unit.groebner().is_unit());
}

TEST(DifferentialIdealTest, ClosureIterationCap) {
  // Each round adds a new power of the chain X1 -> X2 -> X3 -> X4.
  DifferentialRing chain = make_ring({"X1", "X2", "X3", "X4"}, {}, {"X2", "X3", "X4", "1"});
  EXPECT_THROW(differential_closure(chain, ideal(chain, {"X1"}), 2), IterationLimit);
  EXPECT_TRUE(differential_closure(chain, ideal(chain, {"X1"})).groebner().is_unit());
}

TEST(DifferentialIdealTest, ClosureIdempotentAndDifferential) {
  DifferentialRing d = make_ring({"X", "Y", "Z"}, {}, {"Y", "X*Z", "X - Z"});
  std::mt19937_64 rng(51);
  for (int i = 0; i < 20; ++i) {
    MultiPoly g = testing::random_nonzero_poly(d.ring(), rng, {2, 3, 4, false});
    Ideal base(d.ring(), {g});
    Ideal c = differential_closure(d, base);
    ASSERT_TRUE(is_differential_ideal(d, c));
    ASSERT_TRUE(ideal_membership(g, c));
    Ideal again = differential_closure(d, c);
    ASSERT_EQ(again.groebner().polys, c.groebner().polys);
  }
}

// D and f*D share constants and differential ideals for f in the parameter field.
TEST(DifferentialIdealTest, RescalingInvariance) {
  DifferentialRing d = make_ring({"X", "Y"}, {"a"}, {"X", "Y", "a^2"});
  const RingPtr& r = d.ring();
  std::mt19937_64 rng(52);
  std::vector<std::string> known_differential{"X^2 + Y^2", "X - 3*Y", "X*Y", "X^3 + X*Y^2", "X", "X^2 - 5*Y^2"};
  std::vector<std::string> known_constant{"X/Y", "(X^2 + Y^2)/(X*Y)", "(X*Y - Y^2)/X^2", "Y^3/(X^2*Y + X^3)"};
  for (int i = 0; i < 40; ++i) {
    MultiPoly fn = testing::random_parameter_poly(r, rng, 2);
    MultiPoly fd = testing::random_parameter_poly(r, rng, 2);
    DifferentialRing scaled = rescale_derivation(d, RationalFunction(fn, fd));
    std::vector<MultiPoly> gens;
    if (i % 2 == 0) {
      gens.push_back(parse_polynomial(r, known_differential[i % known_differential.size()]));
    } else {
      gens.push_back(testing::random_nonzero_poly(r, rng, {2, 3, 4, false}));
    }
    Ideal I(r, gens);
    bool before = is_differential_ideal(d, I);
    ASSERT_EQ(before, is_differential_ideal(scaled, I));
    if (i % 2 == 0) ASSERT_TRUE(before);

    RationalFunction q = i % 2 == 0 ? parse_rational_function(r, known_constant[i % known_constant.size()])
                                    : RationalFunction(testing::random_poly(r, rng, {2, 3, 4, false}),
                                                       testing::random_nonzero_poly(r, rng, {2, 3, 4, false}));
    bool c = is_constant(d, q);
    ASSERT_EQ(c, is_constant(scaled, q));
    if (i % 2 == 0) ASSERT_TRUE(c);
  }
}

} // namespace
} // namespace diffideal
