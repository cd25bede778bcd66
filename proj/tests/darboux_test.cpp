#include "diffideal/darboux.hpp"
#include "diffideal/error.hpp"
#include "oracles/darboux_bruteforce.hpp"
#include "support/fixtures.hpp"

#include <gtest/gtest.h>

namespace diffideal {
namespace {

using testing::make_ring;

std::vector<std::pair<std::string, std::string>> printed(const DarbouxSearchResult& r) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& p : r.pairs) out.emplace_back(to_string(p.w), to_string(p.z));
  return out;
}

using Printed = std::vector<std::pair<std::string, std::string>>;

TEST(DarbouxTest, CofactorDegreeBound) {
  EXPECT_EQ(cofactor_degree_bound(make_ring({"X", "Y"}, {}, {"X", "Y"})), 1u);
  EXPECT_EQ(cofactor_space(make_ring({"X", "Y"}, {}, {"X", "Y"})).size(), 1u);
  DifferentialRing cubic = make_ring({"X"}, {}, {"X^3 - 2*X^2 + 2*X"});
  EXPECT_EQ(cofactor_degree_bound(cubic), 3u);
  EXPECT_EQ(cofactor_space(cubic).size(), 3u);
  DifferentialRing zero = make_ring({"X", "Y"}, {}, {"0", "0"});
  EXPECT_EQ(cofactor_degree_bound(zero), 0u);
  EXPECT_EQ(cofactor_space(zero).size(), 1u);
}

TEST(DarbouxTest, VerifyExamples) {
  DifferentialRing circle = make_ring({"X", "Y"}, {}, {"X", "Y"});
  const RingPtr& r = circle.ring();
  EXPECT_EQ(verify_darboux(circle, parse_polynomial(r, "X")), parse_polynomial(r, "1"));
  EXPECT_FALSE(verify_darboux(circle, parse_polynomial(r, "X + Y^2")).has_value());
  EXPECT_EQ(verify_darboux(circle, parse_polynomial(r, "7")), MultiPoly(r));
  EXPECT_THROW((void)verify_darboux(circle, MultiPoly(r)), DomainError);

  DifferentialRing s2 = testing::cubic_family(1);
  EXPECT_EQ(verify_darboux(s2, parse_polynomial(s2.ring(), "X - a1")),
            parse_polynomial(s2.ring(), "X^2 + (a1 - 2)*X + a1^2 - 2*a1 + 2"));
}

TEST(DarbouxTest, EulerFieldIsAFamily) {
  DifferentialRing circle = make_ring({"X", "Y"}, {}, {"X", "Y"});
  DarbouxSearchResult r = darboux_search(circle, {1, false});
  EXPECT_EQ(printed(r), (Printed{{"X", "1"}, {"Y", "1"}}));
  EXPECT_EQ(r.completeness, Completeness::representatives_only);
  EXPECT_GT(r.positive_dimensional_slices, 0u);
  EXPECT_EQ(printed(height_one_differential_primes(circle, {1, false})), printed(r));
}

TEST(DarbouxTest, CubicFamilyFindsShiftedFactor) {
  DifferentialRing s2 = testing::cubic_family(1);
  DarbouxSearchResult r = darboux_search(s2, {1, false});
  bool found = false;
  for (const auto& p : r.pairs)
    if (p.w == parse_polynomial(s2.ring(), "X - a1")) {
      found = true;
      EXPECT_EQ(p.z, parse_polynomial(s2.ring(), "X^2 + a1*X - 2*X + a1^2 - 2*a1 + 2"));
    }
  EXPECT_TRUE(found);
  for (const auto& p : r.pairs) EXPECT_TRUE(p.w.involves_variables());
}

TEST(DarbouxTest, TrivialDerivation) {
  DifferentialRing zero = make_ring({"X", "Y"}, {}, {"0", "0"});
  EXPECT_TRUE(darboux_search(zero, {1, false}).pairs.empty());
  EXPECT_TRUE(height_one_differential_primes(zero, {1, false}).pairs.empty());
  // Everything is constant; the corner representatives of the pencil show up.
  DarbouxSearchResult with_zero = darboux_search(zero, {1, true});
  EXPECT_EQ(printed(with_zero), (Printed{{"X", "0"}, {"X + 1", "0"}, {"Y", "0"}}));
  EXPECT_EQ(with_zero.completeness, Completeness::representatives_only);
}

TEST(DarbouxTest, RotationWithRationalCofactors) {
  DifferentialRing d = make_ring({"X", "Y"}, {}, {"X", "1 + Y^2"});
  DarbouxSearchResult r = height_one_differential_primes(d, {2, false});
  EXPECT_EQ(printed(r), (Printed{{"X", "1"}, {"Y^2 + 1", "2*Y"}}));
  EXPECT_EQ(r.completeness, Completeness::complete_for_rational_coefficients);
  EXPECT_EQ(r.positive_dimensional_slices, 0u);
}

TEST(DarbouxTest, IrrationalFactorsAreCounted) {
  // X^2 - 2 is Darboux, its factors X -+ sqrt(2) are not rational.
  DifferentialRing d = make_ring({"X", "Y"}, {}, {"X^2 - 2", "Y"});
  DarbouxSearchResult r = darboux_search(d, {1, false});
  EXPECT_EQ(printed(r), (Printed{{"Y", "1"}}));
  EXPECT_GT(r.non_rational_solutions, 0u);
  DarbouxSearchResult two = darboux_search(d, {2, false});
  EXPECT_EQ(printed(two), (Printed{{"Y", "1"}, {"X^2 - 2", "2*X"}}));
}

TEST(DarbouxTest, MaxDegValidation) { EXPECT_THROW(darboux_search(make_ring({"X"}, {}, {"X"}), {0, false}), DomainError); }

class DarbouxProperties : public ::testing::TestWithParam<std::vector<std::string>> {};

TEST_P(DarbouxProperties, SoundnessAdditivityBound) {
  DifferentialRing d = make_ring({"X", "Y"}, {}, GetParam());
  DarbouxSearchResult r = darboux_search(d, {2, false});
  std::size_t M = cofactor_degree_bound(d);
  for (const auto& p : r.pairs) {
    ASSERT_EQ(verify_darboux(d, p.w), p.z);
    ASSERT_LE(p.z.degree(), static_cast<std::int64_t>(M) - 1);
    ASSERT_EQ(p.w.content(), 1);
    ASSERT_GT(p.w.leading_coefficient(), 0);
  }
  for (const auto& a : r.pairs)
    for (const auto& b : r.pairs) ASSERT_EQ(verify_darboux(d, a.w * b.w), a.z + b.z);
}

TEST_P(DarbouxProperties, RescalingCovariance) {
  DifferentialRing d = make_ring({"X", "Y"}, {}, GetParam());
  BigRational f = make_rational(-3, 2);
  DifferentialRing scaled = rescale_derivation(d, RationalFunction(MultiPoly::constant(d.ring(), f)));
  DarbouxSearchResult a = darboux_search(d, {2, false});
  DarbouxSearchResult b = darboux_search(scaled, {2, false});
  ASSERT_EQ(a.pairs.size(), b.pairs.size());
  for (std::size_t i = 0; i < a.pairs.size(); ++i) {
    EXPECT_EQ(a.pairs[i].w, b.pairs[i].w);
    EXPECT_EQ(f * a.pairs[i].z, b.pairs[i].z);
  }
  EXPECT_EQ(a.completeness, b.completeness);
}

TEST_P(DarbouxProperties, AgreesWithBruteForceWhenComplete) {
  DifferentialRing d = make_ring({"X", "Y"}, {}, GetParam());
  DarbouxSearchResult r = darboux_search(d, {2, false});
  oracle::BruteResult brute = oracle::brute_force_darboux(d, 2);
  // A pencil with nonzero cofactor always shows up as a positive-dimensional slice.
  if (brute.family) EXPECT_EQ(r.completeness, Completeness::representatives_only);
  if (r.completeness != Completeness::complete_for_rational_coefficients) return;
  std::vector<oracle::BrutePair> mine;
  for (const auto& p : r.pairs) mine.push_back({oracle::to_bivariate(p.w), oracle::to_bivariate(p.z)});
  std::sort(mine.begin(), mine.end());
  EXPECT_EQ(mine, brute.pairs);
}

INSTANTIATE_TEST_SUITE_P(Samples, DarbouxProperties,
                         ::testing::Values(std::vector<std::string>{"X", "Y"},
                                           std::vector<std::string>{"X", "1 + Y^2"},
                                           std::vector<std::string>{"X^2", "Y^2"},
                                           std::vector<std::string>{"Y", "-X"},
                                           std::vector<std::string>{"X*Y", "Y^2 - X"},
                                           std::vector<std::string>{"2*X - Y", "X + Y^2"}));

} // namespace
} // namespace diffideal
