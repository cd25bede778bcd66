#pragma once

#include "diffideal/derivation.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace diffideal::cli {

struct ProblemOptions {
  std::optional<MonomialOrder::Kind> order;
  std::optional<std::size_t> max_deg;
  std::optional<std::vector<BigRational>> c;

  friend bool operator==(const ProblemOptions&, const ProblemOptions&) = default;
};

struct Problem {
  DifferentialRing ring;
  ProblemOptions options;
  /// Set when rational images were cleared: the new derivation is factor * D.
  std::optional<RationalFunction> cleared_factor;
};

/// Line-oriented problem text:
///
///   # comment
///   vars: X, Y
///   params: alpha
///   derivation:
///     D X = X
///     D Y = 1 + Y^2
///     D alpha = 0
///   options:
///     order = grevlex
///     max_deg = 2
///     c = 1, 2, 3
///
/// Errors are ParseError with the line and column of the offending token.
/// Rational images are rejected unless `clear_denominators` is set, in which
/// case D is multiplied by the lcm of the denominators and the factor kept.
/// `order_override` replaces the order given in the file.
Problem parse_problem(std::string_view text, bool clear_denominators = false,
                      std::optional<MonomialOrder::Kind> order_override = std::nullopt);
Problem load_problem(const std::filesystem::path& path, bool clear_denominators = false,
                     std::optional<MonomialOrder::Kind> order_override = std::nullopt);

/// Canonical problem text; parse_problem(print_problem(p)) rebuilds p.
std::string print_problem(const Problem& p);

std::vector<BigRational> parse_rational_list(std::string_view text);

} // namespace diffideal::cli
