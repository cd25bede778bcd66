#include "commands.hpp"
#include "problem.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#ifndef DIFFIDEAL_GOLDEN_DIR
#define DIFFIDEAL_GOLDEN_DIR "scenarios/golden"
#endif

int main(int argc, char** argv) {
  using namespace diffideal;
  cli::Invocation inv;
  std::string order, c_list;
  std::size_t max_deg = 0;

  CLI::App app{"Exact derivations, Darboux polynomials, rational first integrals and differential ideals."};
  app.add_option("command", inv.command, "apply, is-constant, is-diff-ideal, diff-closure, darboux, primes, "
                                         "first-integrals, report, family, witness, print or scenario")
      ->required();
  app.add_option("args", inv.args, "Command arguments (expressions, generators or a scenario name)");
  app.add_option("--problem", inv.problem, "Problem file");
  app.add_option("--max-deg", max_deg, "Degree bound for Darboux searches (default: file, $DIFFIDEAL_MAX_DEG, 2)")
      ->check(CLI::PositiveNumber);
  app.add_option("--order", order, "Monomial order")->check(CLI::IsMember({"lex", "grevlex"}));
  app.add_option("--c", c_list, "Comma-separated rational sample values for 'family'");
  app.add_flag("--clear-denominators", inv.clear_denominators, "Multiply D by the denominators of rational images");
  app.add_flag("--json", inv.json, "Print the JSON report envelope");
  app.add_flag("--bless", inv.bless, "Rewrite the scenario golden file instead of comparing");

  try {
    app.parse(argc, argv);
    if (max_deg > 0) inv.max_deg = max_deg;
    if (!order.empty()) inv.order = parse_order_kind(order);
    if (!c_list.empty()) inv.c = cli::parse_rational_list(c_list);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  cli::Environment env;
  if (const char* v = std::getenv("DIFFIDEAL_MAX_DEG")) env.max_deg = v;
  const char* golden = std::getenv("DIFFIDEAL_GOLDEN_DIR");
  env.golden_dir = golden ? golden : DIFFIDEAL_GOLDEN_DIR;

  cli::Outcome out = cli::run(inv, env);
  if (inv.json) {
    std::cout << out.envelope.dump(2) << "\n";
  } else if (out.envelope.contains("error")) {
    std::cerr << out.text;
  } else {
    std::cout << out.text;
  }
  return out.exit_code;
}
