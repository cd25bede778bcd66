#pragma once

#include "commands.hpp"

namespace diffideal::cli {

/// "paper-s1-circle" and "paper-s2-family-k1" .. "paper-s2-family-k8".
std::vector<std::string> scenario_names();

/// Runs every check of the scenario and compares the envelope (minus timing)
/// against `<golden_dir>/<name>.json`, or rewrites that file when `bless`.
Outcome run_scenario(const std::string& name, const Environment& env, bool bless);

/// Problem text of a bundled scenario.
std::string scenario_problem_text(const std::string& name);

} // namespace diffideal::cli
