#include "commands.hpp"
#include "problem.hpp"
#include "scenarios.hpp"

#include "diffideal/error.hpp"
#include "diffideal/text.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

namespace diffideal::cli {
namespace {

const std::filesystem::path kData = DIFFIDEAL_TEST_DATA_DIR;

Environment test_env() { return {std::nullopt, DIFFIDEAL_GOLDEN_DIR_FOR_TESTS}; }

Outcome run_cmd(std::string command, std::vector<std::string> args, std::string problem = "circle.dd") {
  Invocation inv;
  inv.command = std::move(command);
  inv.args = std::move(args);
  if (!problem.empty()) inv.problem = (kData / problem).string();
  return run(inv, test_env());
}

TEST(ProblemFileTest, ParsesEulerRing) {
  Problem p = load_problem(kData / "circle.dd");
  const RingPtr& r = p.ring.ring();
  EXPECT_EQ(r->variable_names(), (std::vector<std::string>{"X", "Y"}));
  EXPECT_EQ(r->nparameters(), 0u);
  EXPECT_EQ(p.ring.polynomial_image(0), parse_polynomial(r, "X"));
  EXPECT_EQ(p.ring.polynomial_image(1), parse_polynomial(r, "Y"));
  EXPECT_FALSE(p.cleared_factor.has_value());
}

TEST(ProblemFileTest, RationalImagesNeedClearing) {
  EXPECT_THROW(load_problem(kData / "rational_image.dd"), PreconditionError);
  try {
    load_problem(kData / "rational_image.dd");
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("--clear-denominators"), std::string::npos);
  }
  Problem p = load_problem(kData / "rational_image.dd", true);
  ASSERT_TRUE(p.cleared_factor.has_value());
  EXPECT_EQ(to_string(*p.cleared_factor), "alpha");
  EXPECT_EQ(p.ring.polynomial_image(0), parse_polynomial(p.ring.ring(), "X"));
  EXPECT_EQ(p.ring.polynomial_image(1), parse_polynomial(p.ring.ring(), "alpha"));
}

TEST(ProblemFileTest, MissingImage) {
  try {
    load_problem(kData / "missing_image.dd");
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_STREQ(e.what(), "no derivation image for Y");
  }
}

TEST(ProblemFileTest, ErrorsCarryPositions) {
  auto position = [](std::string_view text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_problem(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  EXPECT_EQ(position("vars: X, Y\nderivation:\n  D X = 2X\n  D Y = Y\n"), (std::pair<std::size_t, std::size_t>{3, 10}));
  EXPECT_EQ(position("vars: X, 9Y\n"), (std::pair<std::size_t, std::size_t>{1, 10}));
  EXPECT_EQ(position("vars: X\nderivation:\n  D X = Z\n"), (std::pair<std::size_t, std::size_t>{3, 9}));
  EXPECT_EQ(position("X = 1\n"), (std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_EQ(position("vars: X\nderivation:\n  D Q = 1\n  D X = 1\n").first, 3u);
  EXPECT_EQ(position("vars: X\noptions:\n  colour = red\n").first, 3u);
  EXPECT_THROW(parse_problem("vars: X, X\nderivation:\n D X = 1\n"), DomainError);
}

TEST(ProblemFileTest, PrintParseRoundTrip) {
  for (const std::string& text :
       {std::string("vars: X, Y\nparams: a, b\nderivation:\n  D X = 1/2*X^2 - a*Y\n  D Y = b\n  D a = a^3\n  D b = 0\n"
                    "options:\n  order = lex\n  max_deg = 3\n  c = 1/2, -3\n"),
        scenario_problem_text("paper-s1-circle"), scenario_problem_text("paper-s2-family-k3")}) {
    Problem p = parse_problem(text);
    std::string printed = print_problem(p);
    Problem q = parse_problem(printed);
    EXPECT_EQ(*q.ring.ring(), *p.ring.ring());
    EXPECT_EQ(q.ring.derivation().images, p.ring.derivation().images);
    EXPECT_EQ(q.options, p.options);
    EXPECT_EQ(print_problem(q), printed);
  }
}

TEST(CliTest, IsConstant) {
  Outcome o = run_cmd("is-constant", {"X/Y"});
  EXPECT_EQ(o.exit_code, 0);
  EXPECT_EQ(o.envelope["results"]["is_constant"], true);
  EXPECT_EQ(o.envelope["schema_version"], kSchemaVersion);
  EXPECT_NE(o.text.find("true"), std::string::npos);
  EXPECT_EQ(run_cmd("is-constant", {"X + Y"}).envelope["results"]["is_constant"], false);
}

TEST(CliTest, ApplyAndIdeals) {
  Outcome a = run_cmd("apply", {"X^2 + Y^2"});
  EXPECT_EQ(a.envelope["results"]["derivative"], "2*X^2 + 2*Y^2");
  Outcome d = run_cmd("is-diff-ideal", {"X^2 + Y^2"});
  EXPECT_EQ(d.envelope["results"]["is_differential"], true);
  EXPECT_EQ(run_cmd("is-diff-ideal", {"X + Y^2"}).envelope["results"]["is_differential"], false);
  Outcome c = run_cmd("diff-closure", {"X + Y^2"});
  EXPECT_EQ(c.exit_code, 0);
  EXPECT_EQ(c.envelope["results"]["closure"], (Json{"X", "Y^2"}));
}

TEST(CliTest, FamilyCommand) {
  Invocation inv;
  inv.command = "family";
  inv.args = {"X", "Y"};
  inv.problem = (kData / "circle.dd").string();
  inv.c = std::vector<BigRational>{1, 2, 3};
  Outcome o = run(inv, test_env());
  ASSERT_EQ(o.exit_code, 0) << o.text;
  EXPECT_EQ(o.envelope["results"]["members"].size(), 3u);
  for (const auto& m : o.envelope["results"]["members"]) {
    EXPECT_EQ(m["proper"], true);
    EXPECT_EQ(m["differential"], true);
    EXPECT_EQ(m["distinct"], true);
  }
  EXPECT_EQ(o.envelope["inputs"]["c"], (Json{"1", "2", "3"}));
  inv.args = {"X", "X + 1"};
  EXPECT_EQ(run(inv, test_env()).exit_code, 2);
}

TEST(CliTest, DarbouxWithMaxDeg) {
  Invocation inv;
  inv.command = "darboux";
  inv.problem = (kData / "rotation.dd").string();
  Outcome o = run(inv, test_env());
  ASSERT_EQ(o.exit_code, 0) << o.text;
  EXPECT_EQ(o.envelope["results"]["pairs"],
            (Json{{{"w", "X"}, {"z", "1"}}, {{"w", "Y^2 + 1"}, {"z", "2*Y"}}}));
  EXPECT_EQ(o.envelope["completeness"]["darboux"], "complete-for-rational-coefficients");
  EXPECT_EQ(o.envelope["inputs"]["max_deg"], 2);
}

TEST(CliTest, MaxDegPrecedence) {
  Invocation inv;
  inv.command = "darboux";
  inv.problem = (kData / "circle.dd").string();
  Environment env = test_env();
  EXPECT_EQ(run(inv, env).envelope["inputs"]["max_deg"], 2);
  env.max_deg = "1";
  EXPECT_EQ(run(inv, env).envelope["inputs"]["max_deg"], 1);
  inv.max_deg = 3;
  EXPECT_EQ(run(inv, env).envelope["inputs"]["max_deg"], 3);
  inv.max_deg.reset();
  env.max_deg = "zero";
  EXPECT_EQ(run(inv, env).exit_code, 2);
}

TEST(CliTest, ReportAndWitness) {
  Outcome r = run_cmd("report", {}, "rotation.dd");
  EXPECT_EQ(r.envelope["results"]["constants_summary"], "none found up to degree 2");
  EXPECT_EQ(r.envelope["results"]["verdict"], "finitely-many-up-to-degree-2");
  Outcome w = run_cmd("witness", {}, "rotation.dd");
  EXPECT_EQ(w.envelope["results"]["witness"], "X^2*Y^2 + X^2");
  EXPECT_EQ(w.envelope["results"]["coverage"], (Json{true, true}));
  Outcome f = run_cmd("first-integrals", {}, "circle.dd");
  EXPECT_EQ(f.envelope["results"]["constants"][0]["value"], "X/Y");
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run_cmd("no-such-command", {}).exit_code, 2);
  EXPECT_EQ(run_cmd("is-constant", {"2X"}).exit_code, 2);
  EXPECT_EQ(run_cmd("is-constant", {}).exit_code, 2);
  EXPECT_EQ(run_cmd("darboux", {}, "missing_image.dd").exit_code, 2);
  EXPECT_EQ(run_cmd("darboux", {}, "does-not-exist.dd").exit_code, 2);
  Outcome e = run_cmd("is-constant", {"X +"});
  EXPECT_EQ(e.envelope["error"]["kind"], "input");
  EXPECT_TRUE(e.envelope.contains("inputs"));
}

TEST(CliTest, ClearDenominatorsReportsFactor) {
  Invocation inv;
  inv.command = "apply";
  inv.args = {"X"};
  inv.problem = (kData / "rational_image.dd").string();
  EXPECT_EQ(run(inv, test_env()).exit_code, 2);
  inv.clear_denominators = true;
  Outcome o = run(inv, test_env());
  ASSERT_EQ(o.exit_code, 0);
  EXPECT_EQ(o.envelope["inputs"]["problem"]["cleared_factor"], "alpha");
  EXPECT_EQ(o.envelope["results"]["derivative"], "X");
  EXPECT_NE(o.text.find("multiplied by alpha"), std::string::npos);
}

TEST(CliTest, ResultsAreByteStable) {
  Outcome a = run_cmd("report", {}, "circle.dd");
  Outcome b = run_cmd("report", {}, "circle.dd");
  EXPECT_EQ(stable_dump(a.envelope), stable_dump(b.envelope));
  EXPECT_EQ(stable_dump(a.envelope).find("elapsed"), std::string::npos);
  EXPECT_TRUE(a.envelope.contains("timing"));
}

TEST(ScenarioTest, BundledScenariosMatchGolden) {
  for (const std::string name : {"paper-s1-circle", "paper-s2-family-k5"}) {
    Outcome o = run_scenario(name, test_env(), false);
    EXPECT_EQ(o.exit_code, 0) << o.text;
    EXPECT_EQ(o.envelope["results"]["all_passed"], true);
    EXPECT_EQ(o.envelope["golden"], "match");
  }
}

TEST(ScenarioTest, UnknownNameListsScenarios) {
  Invocation inv;
  inv.command = "scenario";
  inv.args = {"paper-s9"};
  Outcome o = run(inv, test_env());
  EXPECT_EQ(o.exit_code, 2);
  EXPECT_NE(o.text.find("paper-s1-circle"), std::string::npos);
  EXPECT_NE(o.text.find("paper-s2-family-k8"), std::string::npos);
  inv.args = {"paper-s2-family-k9"};
  EXPECT_EQ(run(inv, test_env()).exit_code, 2);
}

TEST(ScenarioTest, GoldenMismatchAndBless) {
  auto dir = std::filesystem::temp_directory_path() / "diffideal-golden-test";
  std::filesystem::remove_all(dir);
  Environment env{std::nullopt, dir};
  EXPECT_EQ(run_scenario("paper-s2-family-k2", env, false).exit_code, 1);
  EXPECT_EQ(run_scenario("paper-s2-family-k2", env, true).exit_code, 0);
  EXPECT_EQ(run_scenario("paper-s2-family-k2", env, false).exit_code, 0);
  std::ofstream(dir / "paper-s2-family-k2.json") << "{}\n";
  Outcome bad = run_scenario("paper-s2-family-k2", env, false);
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_EQ(bad.envelope["golden"], "mismatch");
  EXPECT_NE(bad.text.find("line 1"), std::string::npos);
  std::filesystem::remove_all(dir);
}

} // namespace
} // namespace diffideal::cli
