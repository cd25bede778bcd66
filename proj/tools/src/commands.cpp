#include "commands.hpp"

#include "problem.hpp"
#include "scenarios.hpp"

#include "diffideal/constants.hpp"
#include "diffideal/differential_ideal.hpp"
#include "diffideal/error.hpp"
#include "diffideal/text.hpp"

#include <chrono>
#include <functional>
#include <map>

namespace diffideal::cli {

namespace {

class UsageError : public Error {
public:
  using Error::Error;
};

struct Result {
  Json results = Json::object();
  Json completeness = nullptr;
  std::string text;
};

struct Context {
  const Invocation& inv;
  const Environment& env;
  Problem problem;
  Json inputs;
};

Json problem_json(const Problem& p) {
  const Ring& r = *p.ring.ring();
  Json derivation = Json::object();
  for (std::size_t s = 0; s < r.nsymbols(); ++s) derivation[r.name(s)] = to_string(p.ring.image(s));
  Json j{{"vars", r.variable_names()}, {"params", r.parameter_names()}, {"derivation", derivation},
         {"order", to_string(r.order().kind())}};
  if (p.cleared_factor) j["cleared_factor"] = to_string(*p.cleared_factor);
  return j;
}

Json pair_json(const DarbouxPair& p) { return {{"w", to_string(p.w)}, {"z", to_string(p.z)}}; }

Json pairs_json(const std::vector<DarbouxPair>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(pair_json(p));
  return out;
}

Json dependence_json(const IntegerDependence& d) {
  Json out = Json::array();
  for (const auto& n : d.coefficients) out.push_back(to_string(n));
  return out;
}

Json search_json(const DarbouxSearchResult& r) {
  return {{"pairs", pairs_json(r.pairs)},
          {"slices", r.slices},
          {"positive_dimensional_slices", r.positive_dimensional_slices},
          {"non_rational_solutions", r.non_rational_solutions}};
}

std::string pairs_text(const std::vector<DarbouxPair>& ps) {
  std::string out;
  for (const auto& p : ps) out += "  w = " + to_string(p.w) + "    z = " + to_string(p.z) + "\n";
  if (ps.empty()) out += "  (none)\n";
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::size_t resolve_max_deg(const Context& ctx) {
  if (ctx.inv.max_deg) return *ctx.inv.max_deg;
  if (ctx.problem.options.max_deg) return *ctx.problem.options.max_deg;
  if (ctx.env.max_deg) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(*ctx.env.max_deg, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != ctx.env.max_deg->size() || v < 1)
      throw UsageError("DIFFIDEAL_MAX_DEG must be a positive integer, got '" + *ctx.env.max_deg + "'");
    return static_cast<std::size_t>(v);
  }
  return 2;
}

SearchConfig search_config(Context& ctx) {
  SearchConfig cfg;
  cfg.max_deg = resolve_max_deg(ctx);
  ctx.inputs["max_deg"] = cfg.max_deg;
  return cfg;
}

void require_args(const Context& ctx, std::size_t min, std::size_t max, const std::string& usage) {
  const auto n = ctx.inv.args.size();
  if (n < min || n > max) throw UsageError("usage: diffideal " + ctx.inv.command + " " + usage);
}

const RingPtr& R(const Context& ctx) { return ctx.problem.ring.ring(); }

Result cmd_print(Context& ctx) {
  require_args(ctx, 0, 0, "--problem FILE");
  Result r;
  r.text = print_problem(ctx.problem);
  r.results["problem_text"] = r.text;
  return r;
}

Result cmd_apply(Context& ctx) {
  require_args(ctx, 1, 1, "EXPR --problem FILE");
  RationalFunction e = parse_rational_function(R(ctx), ctx.inv.args[0]);
  RationalFunction d = d_ratfunc(ctx.problem.ring, e);
  Result r;
  r.results = {{"expression", to_string(e)}, {"derivative", to_string(d)}};
  r.text = "D(" + to_string(e) + ") = " + to_string(d) + "\n";
  return r;
}

Result cmd_is_constant(Context& ctx) {
  require_args(ctx, 1, 1, "EXPR --problem FILE");
  RationalFunction e = parse_rational_function(R(ctx), ctx.inv.args[0]);
  RationalFunction d = d_ratfunc(ctx.problem.ring, e);
  Result r;
  r.results = {{"expression", to_string(e)}, {"derivative", to_string(d)}, {"is_constant", d.is_zero()}};
  r.text = "is_constant(" + to_string(e) + ") = " + yes_no(d.is_zero()) + "\nD(" + to_string(e) + ") = " + to_string(d) + "\n";
  return r;
}

Ideal ideal_from_args(const Context& ctx) {
  std::vector<MultiPoly> gens;
  for (const auto& a : ctx.inv.args) gens.push_back(parse_polynomial(R(ctx), a));
  return Ideal(R(ctx), gens);
}

void require_polynomial_images(const Context& ctx) {
  if (!ctx.problem.ring.has_polynomial_images())
    throw PreconditionError("this command needs polynomial derivation images");
}

Result cmd_is_diff_ideal(Context& ctx) {
  require_args(ctx, 1, 64, "GEN... --problem FILE");
  require_polynomial_images(ctx);
  Ideal ideal = ideal_from_args(ctx);
  Json details = Json::array();
  std::string text;
  for (const auto& g : ideal.generators()) {
    MultiPoly dg = d_poly(ctx.problem.ring, g);
    bool member = member_over_parameter_field(dg, ideal);
    details.push_back({{"generator", to_string(g)}, {"derivative", to_string(dg)}, {"in_ideal", member}});
    text += "  D(" + to_string(g) + ") = " + to_string(dg) + "    in ideal: " + yes_no(member) + "\n";
  }
  bool diff = is_differential_ideal(ctx.problem.ring, ideal);
  Result r;
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_string(g));
  r.results = {{"generators", gens}, {"is_differential", diff}, {"derivatives", details}};
  r.text = "is_differential_ideal = " + yes_no(diff) + "\n" + text;
  return r;
}

Result cmd_diff_closure(Context& ctx) {
  require_args(ctx, 1, 64, "GEN... --problem FILE");
  require_polynomial_images(ctx);
  Ideal ideal = ideal_from_args(ctx);
  Ideal closure = differential_closure(ctx.problem.ring, ideal);
  Json gens = Json::array(), basis = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_string(g));
  std::string text = "differential closure (reduced Groebner basis):\n";
  for (const auto& g : closure.groebner().polys) {
    basis.push_back(to_string(g));
    text += "  " + to_string(g) + "\n";
  }
  Result r;
  r.results = {{"generators", gens}, {"closure", basis}};
  r.text = text;
  return r;
}

Result search_command(Context& ctx, bool primes_only) {
  require_args(ctx, 0, 0, "--problem FILE [--max-deg N]");
  require_polynomial_images(ctx);
  SearchConfig cfg = search_config(ctx);
  DarbouxSearchResult s = primes_only ? height_one_differential_primes(ctx.problem.ring, cfg)
                                      : darboux_search(ctx.problem.ring, cfg);
  Result r;
  r.results = search_json(s);
  r.completeness = {{"darboux", to_string(s.completeness)}};
  r.text = std::string(primes_only ? "height-one differential primes" : "Darboux pairs") + " up to degree " +
           std::to_string(cfg.max_deg) + " (" + to_string(s.completeness) + "):\n" + pairs_text(s.pairs);
  return r;
}

Result cmd_darboux(Context& ctx) { return search_command(ctx, false); }
Result cmd_primes(Context& ctx) { return search_command(ctx, true); }

Json constants_json(const std::vector<CandidateConstant>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back({{"value", to_string(c.value)}, {"dependence", dependence_json(c.dependence)}});
  return out;
}

Result cmd_first_integrals(Context& ctx) {
  require_args(ctx, 0, 0, "--problem FILE [--max-deg N]");
  require_polynomial_images(ctx);
  SearchConfig cfg = search_config(ctx);
  LatticeResult l = first_integral_lattice(ctx.problem.ring, cfg);
  Json deps = Json::array();
  for (const auto& d : l.dependencies) deps.push_back(dependence_json(d));
  Result r;
  r.results = {{"primes", pairs_json(l.primes.pairs)}, {"dependencies", deps}, {"constants", constants_json(l.constants)}};
  r.completeness = {{"darboux", to_string(l.primes.completeness)}};
  r.text = "primes (" + to_string(l.primes.completeness) + "):\n" + pairs_text(l.primes.pairs) + "constants:\n";
  for (const auto& c : l.constants) r.text += "  " + to_string(c.value) + "\n";
  if (l.constants.empty()) r.text += "  none found up to degree " + std::to_string(cfg.max_deg) + "\n";
  return r;
}

Result cmd_report(Context& ctx) {
  require_args(ctx, 0, 0, "--problem FILE [--max-deg N]");
  require_polynomial_images(ctx);
  SearchConfig cfg = search_config(ctx);
  NewConstantReport rep = new_constant_report(ctx.problem.ring, cfg);
  Result r;
  r.results = {{"verdict", rep.verdict_text()},
               {"constants_summary", rep.constants_text()},
               {"constants", constants_json(rep.constants)},
               {"primes", pairs_json(rep.primes)}};
  r.completeness = {{"darboux", to_string(rep.completeness)}, {"verdict", rep.verdict_text()}};
  r.text = "verdict: " + rep.verdict_text() + "\nconstants: " + rep.constants_text() + "\n";
  for (const auto& c : rep.constants) r.text += "  " + to_string(c.value) + "\n";
  r.text += "primes (" + to_string(rep.completeness) + "):\n" + pairs_text(rep.primes);
  return r;
}

Result cmd_family(Context& ctx) {
  require_args(ctx, 2, 2, "F G --c LIST --problem FILE");
  require_polynomial_images(ctx);
  MultiPoly f = parse_polynomial(R(ctx), ctx.inv.args[0]);
  MultiPoly g = parse_polynomial(R(ctx), ctx.inv.args[1]);
  std::vector<BigRational> cs;
  if (ctx.inv.c) cs = *ctx.inv.c;
  else if (ctx.problem.options.c) cs = *ctx.problem.options.c;
  else throw UsageError("family needs sample values: pass --c LIST or set 'c' in the options section");
  Json cj = Json::array();
  for (const auto& c : cs) cj.push_back(to_string(c));
  ctx.inputs["c"] = cj;
  ConstantFamilyReport rep = constant_family(ctx.problem.ring, f, g, cs);
  Json members = Json::array();
  std::string text = "constant " + to_string(rep.constant) + "\n";
  for (const auto& m : rep.members) {
    members.push_back({{"c", to_string(m.c)},
                       {"generator", to_string(m.generator)},
                       {"proper", m.proper},
                       {"differential", m.differential},
                       {"distinct", m.distinct}});
    text += "  c = " + to_string(m.c) + ": (" + to_string(m.generator) + ")  proper=" + yes_no(m.proper) +
            " differential=" + yes_no(m.differential) + " distinct=" + yes_no(m.distinct) + "\n";
  }
  Result r;
  r.results = {{"constant", to_string(rep.constant)}, {"members", members}, {"all_verified", rep.all_verified()}};
  r.text = text + "all verified: " + yes_no(rep.all_verified()) + "\n";
  return r;
}

Result cmd_witness(Context& ctx) {
  require_args(ctx, 0, 0, "--problem FILE [--max-deg N]");
  require_polynomial_images(ctx);
  SearchConfig cfg = search_config(ctx);
  LocalizationWitness w = localization_witness(ctx.problem.ring, cfg);
  Json coverage = Json::array();
  for (bool b : w.coverage) coverage.push_back(b);
  Result r;
  r.results = {{"t", to_string(w.t)},
               {"witness", to_string(w.witness)},
               {"primes", pairs_json(w.primes)},
               {"coverage", coverage},
               {"heuristic", w.heuristic}};
  r.completeness = {{"darboux", w.heuristic ? "representatives-only" : "complete-for-rational-coefficients"}};
  r.text = "witness = " + to_string(w.witness) + (w.heuristic ? "  (heuristic: prime list may be incomplete)" : "") + "\n";
  for (std::size_t i = 0; i < w.primes.size(); ++i)
    r.text += "  in (" + to_string(w.primes[i].w) + "): " + yes_no(w.coverage[i]) + "\n";
  return r;
}

using Handler = std::function<Result(Context&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"apply", cmd_apply},           {"is-constant", cmd_is_constant},
      {"is-diff-ideal", cmd_is_diff_ideal}, {"diff-closure", cmd_diff_closure},
      {"darboux", cmd_darboux},       {"primes", cmd_primes},
      {"first-integrals", cmd_first_integrals}, {"report", cmd_report},
      {"family", cmd_family},         {"witness", cmd_witness},
      {"print", cmd_print},
  };
  return table;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const PreconditionError*>(&e) ||
      dynamic_cast<const DomainError*>(&e) || dynamic_cast<const DimensionError*>(&e) ||
      dynamic_cast<const RingMismatch*>(&e) || dynamic_cast<const DivisionByZero*>(&e) ||
      dynamic_cast<const UsageError*>(&e))
    return 2;
  return 1;
}

std::string error_kind(int code) { return code == 2 ? "input" : "internal"; }

} // namespace

std::vector<std::string> command_names() {
  std::vector<std::string> out;
  for (const auto& [name, h] : handlers()) out.push_back(name);
  out.push_back("scenario");
  return out;
}

std::string stable_dump(const Json& envelope) {
  Json copy = envelope;
  copy.erase("timing");
  return copy.dump(2) + "\n";
}

Outcome run(const Invocation& inv, const Environment& env) {
  const auto start = std::chrono::steady_clock::now();
  Json inputs = Json::object();
  if (!inv.args.empty()) inputs["arguments"] = inv.args;
  try {
    if (inv.command == "scenario") {
      if (inv.args.size() != 1) throw UsageError("usage: diffideal scenario NAME [--bless]");
      return run_scenario(inv.args[0], env, inv.bless);
    }
    auto it = handlers().find(inv.command);
    if (it == handlers().end()) {
      std::string names;
      for (const auto& n : command_names()) names += (names.empty() ? "" : ", ") + n;
      throw UsageError("unknown command '" + inv.command + "' (available: " + names + ")");
    }
    if (!inv.problem) throw UsageError("command '" + inv.command + "' needs --problem FILE");
    Context ctx{inv, env, load_problem(*inv.problem, inv.clear_denominators, inv.order), Json::object()};
    ctx.inputs["problem"] = problem_json(ctx.problem);
    if (!inv.args.empty()) ctx.inputs["arguments"] = inv.args;
    Result r = it->second(ctx);
    std::string text = r.text;
    if (ctx.problem.cleared_factor)
      text = "note: derivation multiplied by " + to_string(*ctx.problem.cleared_factor) + "\n" + text;
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    Json envelope{{"schema_version", kSchemaVersion},
                  {"command", inv.command},
                  {"inputs", ctx.inputs},
                  {"results", r.results},
                  {"completeness", r.completeness},
                  {"timing", {{"elapsed_ms", ms}}}};
    return {0, std::move(envelope), std::move(text)};
  } catch (const std::exception& e) {
    int code = exit_code_for(e);
    Json envelope{{"schema_version", kSchemaVersion},
                  {"command", inv.command},
                  {"inputs", inputs},
                  {"error", {{"kind", error_kind(code)}, {"message", e.what()}}}};
    return {code, std::move(envelope), std::string("error: ") + e.what() + "\n"};
  }
}

} // namespace diffideal::cli
