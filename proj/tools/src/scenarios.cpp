#include "scenarios.hpp"

#include "problem.hpp"

#include "diffideal/constants.hpp"
#include "diffideal/differential_ideal.hpp"
#include "diffideal/error.hpp"
#include "diffideal/text.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

namespace diffideal::cli {

namespace {

constexpr int kMaxFamilySize = 8;
const std::string kCircle = "paper-s1-circle";
const std::string kFamilyPrefix = "paper-s2-family-k";

struct Checks {
  Json list = Json::array();
  bool all = true;

  void add(const std::string& name, bool passed, const std::string& detail) {
    list.push_back({{"name", name}, {"passed", passed}, {"detail", detail}});
    all = all && passed;
  }
};

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return out;
}

std::optional<int> family_size(const std::string& name) {
  if (name.rfind(kFamilyPrefix, 0) != 0) return std::nullopt;
  std::string digits = name.substr(kFamilyPrefix.size());
  if (digits.empty() || digits.size() > 2 || digits.find_first_not_of("0123456789") != std::string::npos)
    return std::nullopt;
  int k = std::stoi(digits);
  if (k < 1 || k > kMaxFamilySize) return std::nullopt;
  return k;
}

// X' = X, Y' = Y with the circle ideal; X/Y is a constant, so the ideals
// (X - cY) form an infinite family of differential ideals.
Json circle_checks(const Problem& p, Checks& checks) {
  const DifferentialRing& d = p.ring;
  const RingPtr& r = d.ring();
  MultiPoly gen = parse_polynomial(r, "X^2 + Y^2");
  MultiPoly dgen = d_poly(d, gen);
  checks.add("(X^2 + Y^2) is a differential ideal", is_differential_ideal(d, Ideal(r, {gen})) && dgen == BigRational(2) * gen,
             "D(X^2 + Y^2) = " + to_string(dgen));

  RationalFunction ratio = parse_rational_function(r, "X/Y");
  checks.add("X/Y is a constant", is_constant(d, ratio), "D(X/Y) = " + to_string(d_ratfunc(d, ratio)));

  DarbouxSearchResult s = darboux_search(d, {1, false});
  std::vector<std::string> ws;
  for (const auto& pr : s.pairs) ws.push_back("(" + to_string(pr.w) + ", " + to_string(pr.z) + ")");
  checks.add("degree-1 Darboux search detects a positive-dimensional family",
             s.completeness == Completeness::representatives_only && s.positive_dimensional_slices > 0,
             "pairs " + join(ws) + "; " + to_string(s.completeness));

  LatticeResult lat = first_integral_lattice(d, {1, false});
  bool found_ratio = false;
  for (const auto& c : lat.constants) {
    RationalFunction v = c.value;
    found_ratio = found_ratio || v == ratio || v == RationalFunction(MultiPoly::constant(r, 1)) / ratio;
  }
  std::vector<std::string> cs;
  for (const auto& c : lat.constants) cs.push_back(to_string(c.value));
  checks.add("cofactor lattice recovers X/Y", found_ratio, "constants " + join(cs));

  std::vector<BigRational> samples;
  for (int i = 1; i <= 10; ++i) samples.push_back(i);
  if (p.options.c) samples = *p.options.c;
  ConstantFamilyReport fam = constant_family(d, parse_polynomial(r, "X"), parse_polynomial(r, "Y"), samples);
  std::vector<std::string> gens;
  for (const auto& m : fam.members) gens.push_back("(" + to_string(m.generator) + ")");
  checks.add(std::to_string(samples.size()) + " sample values give proper, differential, distinct ideals",
             fam.all_verified() && fam.members.size() == samples.size(), join(gens));

  NewConstantReport rep = new_constant_report(d, {1, false});
  checks.add("report flags an infinite family", rep.verdict == FinitenessVerdict::infinite_family_detected,
             rep.verdict_text() + "; constants: " + rep.constants_text());

  Json pairs = Json::array();
  for (const auto& pr : s.pairs) pairs.push_back({{"w", to_string(pr.w)}, {"z", to_string(pr.z)}});
  return {{"darboux_pairs", pairs},
          {"constants", cs},
          {"family", gens},
          {"verdict", rep.verdict_text()}};
}

// X' = X^3 - 2X^2 + 2X and a_i' = a_i^3 - 2a_i^2 + 2a_i for i <= k, a finite
// truncation of an infinite parameter list: each X - a_i is Darboux and the
// cofactors are independent, so no constant arises from them.
Json family_checks(const Problem& p, int k, Checks& checks) {
  const DifferentialRing& d = p.ring;
  const RingPtr& r = d.ring();
  std::vector<DarbouxPair> pairs;
  bool all_verify = true;
  std::vector<std::string> details;
  for (int i = 1; i <= k; ++i) {
    std::string a = "a" + std::to_string(i);
    MultiPoly w = parse_polynomial(r, "X - " + a);
    MultiPoly expected = parse_polynomial(r, "X^2 + (" + a + " - 2)*X + " + a + "^2 - 2*" + a + " + 2");
    auto z = verify_darboux(d, w);
    bool ok = z && *z == expected;
    all_verify = all_verify && ok;
    details.push_back("z(" + to_string(w) + ") = " + (z ? to_string(*z) : "none"));
    if (z) pairs.push_back({w, *z});
  }
  checks.add("each X - a_i is Darboux with the expected cofactor", all_verify, join(details));

  bool distinct = true;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) distinct = distinct && !associated(pairs[i].w, pairs[j].w);
  checks.add("the " + std::to_string(k) + " generators are pairwise non-associate", distinct && pairs.size() == std::size_t(k),
             std::to_string(pairs.size()) + " distinct height-one differential primes");

  auto constants = lattice_constants(d, pairs);
  checks.add("cofactor lattice over these primes yields no constant", constants.empty(),
             std::to_string(constants.size()) + " constants");

  LocalizationWitness w = localization_witness(d, pairs, false);
  bool covered = std::all_of(w.coverage.begin(), w.coverage.end(), [](bool b) { return b; });
  checks.add("witness t*D(X) lies in every (X - a_i)", covered && w.coverage.size() == std::size_t(k),
             "witness has " + std::to_string(w.witness.size()) + " terms");

  Json pj = Json::array();
  for (const auto& pr : pairs) pj.push_back({{"w", to_string(pr.w)}, {"z", to_string(pr.z)}});
  return {{"truncation", "k = " + std::to_string(k) + " parameters of an unbounded family"},
          {"pairs", pj},
          {"lattice_constants", constants.size()},
          {"witness", to_string(w.witness)}};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string line_diff(const std::string& expected, const std::string& actual) {
  std::istringstream a(expected), b(actual);
  std::string la, lb, out;
  int n = 0, shown = 0;
  while (shown < 20) {
    bool ha = static_cast<bool>(std::getline(a, la)), hb = static_cast<bool>(std::getline(b, lb));
    if (!ha && !hb) break;
    ++n;
    if (ha && hb && la == lb) continue;
    out += "  line " + std::to_string(n) + ":\n";
    if (ha) out += "    - " + la + "\n";
    if (hb) out += "    + " + lb + "\n";
    ++shown;
  }
  return out;
}

} // namespace

std::vector<std::string> scenario_names() {
  std::vector<std::string> out{kCircle};
  for (int k = 1; k <= kMaxFamilySize; ++k) out.push_back(kFamilyPrefix + std::to_string(k));
  return out;
}

std::string scenario_problem_text(const std::string& name) {
  if (name == kCircle)
    return "# circle ideal under the Euler derivation\n"
           "vars: X, Y\n"
           "derivation:\n"
           "  D X = X\n"
           "  D Y = Y\n"
           "options:\n"
           "  max_deg = 1\n"
           "  c = 1, 2, 3, 4, 5, 6, 7, 8, 9, 10\n";
  if (auto k = family_size(name)) {
    std::string params, images;
    for (int i = 1; i <= *k; ++i) {
      std::string a = "a" + std::to_string(i);
      params += (i == 1 ? "" : ", ") + a;
      images += "  D " + a + " = " + a + "^3 - 2*" + a + "^2 + 2*" + a + "\n";
    }
    return "# cubic law shared by X and " + std::to_string(*k) + " parameters\n"
           "vars: X\n"
           "params: " + params + "\n"
           "derivation:\n"
           "  D X = X^3 - 2*X^2 + 2*X\n" + images +
           "options:\n"
           "  max_deg = 1\n";
  }
  throw PreconditionError("unknown scenario '" + name + "' (available: " + join(scenario_names()) + ")");
}

Outcome run_scenario(const std::string& name, const Environment& env, bool bless) {
  const auto start = std::chrono::steady_clock::now();
  Problem problem = parse_problem(scenario_problem_text(name));
  Checks checks;
  Json data = name == kCircle ? circle_checks(problem, checks) : family_checks(problem, *family_size(name), checks);

  Json derivation = Json::object();
  const Ring& r = *problem.ring.ring();
  for (std::size_t s = 0; s < r.nsymbols(); ++s) derivation[r.name(s)] = to_string(problem.ring.image(s));
  Json envelope{{"schema_version", kSchemaVersion},
                {"command", "scenario"},
                {"inputs",
                 {{"scenario", name},
                  {"problem",
                   {{"vars", r.variable_names()}, {"params", r.parameter_names()}, {"derivation", derivation},
                    {"order", to_string(r.order().kind())}}}}},
                {"results", {{"checks", checks.list}, {"all_passed", checks.all}, {"data", data}}},
                {"completeness", nullptr}};

  std::string text = "scenario " + name + "\n";
  for (const auto& c : checks.list)
    text += std::string(c["passed"].get<bool>() ? "  [ok]   " : "  [FAIL] ") + c["name"].get<std::string>() + "\n         " +
            c["detail"].get<std::string>() + "\n";

  int code = checks.all ? 0 : 1;
  const std::string actual = stable_dump(envelope);
  const auto golden = env.golden_dir / (name + ".json");
  std::string status;
  if (bless) {
    std::filesystem::create_directories(env.golden_dir);
    std::ofstream(golden) << actual;
    status = "blessed";
    text += "golden: rewrote " + golden.string() + "\n";
  } else if (!std::filesystem::exists(golden)) {
    status = "missing";
    code = 1;
    text += "golden: no file " + golden.string() + " (run with --bless to create it)\n";
  } else if (std::string expected = read_file(golden); expected != actual) {
    status = "mismatch";
    code = 1;
    text += "golden: mismatch against " + golden.string() + "\n" + line_diff(expected, actual);
  } else {
    status = "match";
    text += "golden: match\n";
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  envelope["golden"] = status;
  envelope["timing"] = {{"elapsed_ms", ms}};
  return {code, std::move(envelope), std::move(text)};
}

} // namespace diffideal::cli
