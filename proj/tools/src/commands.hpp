#pragma once

#include "diffideal/order.hpp"
#include "diffideal/rational.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace diffideal::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct Invocation {
  std::string command;
  std::vector<std::string> args;
  std::optional<std::string> problem;
  std::optional<std::size_t> max_deg;
  std::optional<MonomialOrder::Kind> order;
  std::optional<std::vector<BigRational>> c;
  bool clear_denominators = false;
  bool json = false;
  bool bless = false;
};

/// Process-level inputs, passed explicitly so that runs are reproducible.
struct Environment {
  /// Raw value of DIFFIDEAL_MAX_DEG, if set.
  std::optional<std::string> max_deg;
  std::filesystem::path golden_dir;
};

struct Outcome {
  int exit_code = 0;
  /// {schema_version, command, inputs, results | error, completeness, timing}.
  Json envelope;
  /// Human-readable rendering (stdout on success, stderr on failure).
  std::string text;
};

/// Exit codes: 0 success, 2 bad input or unmet precondition, 1 internal error
/// or failed scenario check.
Outcome run(const Invocation& inv, const Environment& env);

std::vector<std::string> command_names();

/// The envelope without its timing member, serialized deterministically.
std::string stable_dump(const Json& envelope);

} // namespace diffideal::cli
