#include "problem.hpp"

#include "diffideal/error.hpp"
#include "diffideal/text.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace diffideal::cli {

namespace {

enum class Section { none, vars, params, derivation, options };

std::size_t first_non_space(std::string_view s, std::size_t from = 0) {
  while (from < s.size() && (s[from] == ' ' || s[from] == '\t')) ++from;
  return from;
}

std::string_view trim(std::string_view s) {
  std::size_t b = first_non_space(s);
  std::size_t e = s.size();
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

struct Name {
  std::string text;
  std::size_t column;
};

// Comma- or space-separated names starting at `offset` (0-based) of the line.
std::vector<Name> split_names(std::string_view line, std::size_t offset, std::size_t lineno) {
  std::vector<Name> out;
  std::size_t i = offset;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == ',' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != ',' && line[i] != '\r') ++i;
    std::string name(line.substr(start, i - start));
    if (!valid_symbol_name(name))
      throw ParseError("invalid symbol name '" + name + "' (expected [A-Za-z][A-Za-z0-9_]*)", lineno, start + 1);
    out.push_back({std::move(name), start + 1});
  }
  return out;
}

struct ImageLine {
  std::string text;
  std::size_t line;
  std::size_t column; // 1-based column where the expression starts
};

} // namespace

std::vector<BigRational> parse_rational_list(std::string_view text) {
  std::vector<BigRational> out;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t comma = text.find(',', i);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = trim(text.substr(i, comma - i));
    if (item.empty()) throw DomainError("empty entry in rational list '" + std::string(text) + "'");
    out.push_back(parse_rational(item));
    i = comma + 1;
  }
  return out;
}

Problem parse_problem(std::string_view text, bool clear, std::optional<MonomialOrder::Kind> order_override) {
  std::vector<Name> vars, params;
  std::map<std::string, ImageLine> images;
  ProblemOptions options;
  Section section = Section::none;
  bool seen_vars = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::string_view body = trim(line);
    if (body.empty()) continue;
    const std::size_t indent = first_non_space(line);

    auto header = [&](std::string_view key) {
      return body.substr(0, key.size()) == key && body.size() > key.size() && body[key.size()] == ':';
    };
    if (header("vars")) {
      if (seen_vars) throw ParseError("duplicate 'vars:' section", lineno, indent + 1);
      seen_vars = true;
      section = Section::vars;
      for (auto& n : split_names(line, indent + 5, lineno)) vars.push_back(std::move(n));
      continue;
    }
    if (header("params")) {
      section = Section::params;
      for (auto& n : split_names(line, indent + 7, lineno)) params.push_back(std::move(n));
      continue;
    }
    if (header("derivation") || header("options")) {
      section = header("derivation") ? Section::derivation : Section::options;
      std::size_t colon = line.find(':');
      if (!trim(line.substr(colon + 1)).empty())
        throw ParseError("unexpected text after section header", lineno, first_non_space(line, colon + 1) + 1);
      continue;
    }

    switch (section) {
    case Section::none:
      throw ParseError("expected a section header (vars:, params:, derivation:, options:)", lineno, indent + 1);
    case Section::vars:
      for (auto& n : split_names(line, 0, lineno)) vars.push_back(std::move(n));
      break;
    case Section::params:
      for (auto& n : split_names(line, 0, lineno)) params.push_back(std::move(n));
      break;
    case Section::derivation: {
      if (line[indent] != 'D' || indent + 1 >= line.size() || (line[indent + 1] != ' ' && line[indent + 1] != '\t'))
        throw ParseError("expected 'D <name> = <expression>'", lineno, indent + 1);
      std::size_t name_start = first_non_space(line, indent + 1);
      std::size_t eq = line.find('=', name_start);
      if (eq == std::string_view::npos) throw ParseError("expected '=' after the symbol name", lineno, line.size() + 1);
      std::string name(trim(line.substr(name_start, eq - name_start)));
      if (name.empty()) throw ParseError("missing symbol name", lineno, name_start + 1);
      if (images.count(name)) throw ParseError("duplicate derivation image for " + name, lineno, name_start + 1);
      std::size_t expr_start = first_non_space(line, eq + 1);
      images[name] = {std::string(line.substr(expr_start)), lineno, expr_start + 1};
      break;
    }
    case Section::options: {
      std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", lineno, indent + 1);
      std::string key(trim(line.substr(indent, eq - indent)));
      std::string_view value = trim(line.substr(eq + 1));
      std::size_t vcol = first_non_space(line, eq + 1) + 1;
      try {
        if (key == "order") {
          options.order = parse_order_kind(value);
        } else if (key == "max_deg") {
          std::size_t used = 0;
          long v = std::stol(std::string(value), &used);
          if (used != value.size() || v < 1) throw DomainError("max_deg must be a positive integer");
          options.max_deg = static_cast<std::size_t>(v);
        } else if (key == "c") {
          options.c = parse_rational_list(value);
        } else {
          throw ParseError("unknown option '" + key + "' (expected order, max_deg or c)", lineno, indent + 1);
        }
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        throw ParseError(std::string("bad value for ") + key + ": " + e.what(), lineno, vcol);
      }
      break;
    }
    }
  }

  if (!seen_vars) throw ParseError("missing 'vars:' section", lineno == 0 ? 1 : lineno, 1);
  if (vars.empty()) throw ParseError("no variables declared", 1, 1);

  std::vector<std::string> var_names, param_names;
  for (const auto& v : vars) var_names.push_back(v.text);
  for (const auto& p : params) param_names.push_back(p.text);
  MonomialOrder::Kind kind = order_override.value_or(options.order.value_or(MonomialOrder::Kind::grevlex));
  RingPtr ring = Ring::make(var_names, param_names, kind);
  options.order = kind;

  for (const auto& [name, img] : images)
    if (!ring->index_of(name)) throw ParseError("derivation image for undeclared symbol " + name, img.line, 1);

  DerivationSpec spec;
  bool rational = false;
  for (std::size_t s = 0; s < ring->nsymbols(); ++s) {
    auto it = images.find(ring->name(s));
    if (it == images.end()) throw PreconditionError("no derivation image for " + ring->name(s));
    try {
      spec.images.push_back(parse_rational_function(ring, it->second.text, it->second.line));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), e.line(), e.column() + it->second.column - 1);
    }
    rational = rational || !spec.images.back().is_polynomial();
  }
  DifferentialRing dring(ring, std::move(spec));

  Problem problem{dring, options, std::nullopt};
  if (rational) {
    if (!clear) {
      for (std::size_t s = 0; s < ring->nsymbols(); ++s)
        if (!dring.image(s).is_polynomial())
          throw PreconditionError("derivation image of " + ring->name(s) + " is not a polynomial (" +
                                  to_string(dring.image(s)) +
                                  "); pass --clear-denominators to multiply D by the common denominator");
    }
    ClearedDerivation cleared = clear_denominators(dring);
    problem.ring = cleared.ring;
    problem.cleared_factor = cleared.factor;
  }
  return problem;
}

Problem load_problem(const std::filesystem::path& path, bool clear, std::optional<MonomialOrder::Kind> order_override) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read problem file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str(), clear, order_override);
}

std::string print_problem(const Problem& p) {
  const Ring& r = *p.ring.ring();
  auto join = [](const std::vector<std::string>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
    return out;
  };
  std::string out;
  if (p.cleared_factor) out += "# derivation multiplied by " + to_string(*p.cleared_factor) + "\n";
  out += "vars: " + join(r.variable_names()) + "\n";
  if (r.nparameters() > 0) out += "params: " + join(r.parameter_names()) + "\n";
  out += "derivation:\n";
  for (std::size_t s = 0; s < r.nsymbols(); ++s) out += "  D " + r.name(s) + " = " + to_string(p.ring.image(s)) + "\n";
  out += "options:\n";
  out += "  order = " + to_string(r.order().kind()) + "\n";
  if (p.options.max_deg) out += "  max_deg = " + std::to_string(*p.options.max_deg) + "\n";
  if (p.options.c) {
    std::vector<std::string> cs;
    for (const auto& c : *p.options.c) cs.push_back(to_string(c));
    out += "  c = " + join(cs) + "\n";
  }
  return out;
}

} // namespace diffideal::cli
