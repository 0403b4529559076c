#include "frontalkit_cli/germ_file.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "frontalkit/parse.hpp"

namespace frontalkit::cli {

GermFileError::GermFileError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Definition {
  std::size_t line;
  std::string expr;
};

enum class Block { None, Map, Mu };

// Reads "f3 = expr" into defs[3]; `prefix` is 'f' or 'm'.
void read_definition(std::string_view body, char prefix, std::size_t line,
                     std::map<std::size_t, Definition>& defs) {
  const auto eq = body.find('=');
  if (eq == std::string_view::npos) throw GermFileError(line, "expected '<name> = <expr>'");
  const std::string_view lhs = trim(body.substr(0, eq));
  if (lhs.size() < 2 || lhs[0] != prefix) {
    throw GermFileError(line, std::string("expected a name of the form ") + prefix + "<index>");
  }
  std::size_t index = 0;
  const auto [ptr, ec] = std::from_chars(lhs.data() + 1, lhs.data() + lhs.size(), index);
  if (ec != std::errc() || ptr != lhs.data() + lhs.size() || index == 0) {
    throw GermFileError(line, "bad component name '" + std::string(lhs) + "'");
  }
  if (!defs.emplace(index, Definition{line, std::string(trim(body.substr(eq + 1)))}).second) {
    throw GermFileError(line, "duplicate component '" + std::string(lhs) + "'");
  }
}

std::vector<Poly> parse_definitions(const std::map<std::size_t, Definition>& defs, char prefix,
                                    const VarList& vars, unsigned ext) {
  std::vector<Poly> out;
  std::size_t expected = 1;
  for (const auto& [index, def] : defs) {
    if (index != expected) {
      throw GermFileError(def.line, std::string("missing component ") + prefix +
                                        std::to_string(expected));
    }
    ++expected;
    try {
      out.push_back(parse_poly(def.expr, vars, ext));
    } catch (const ParseError& e) {
      throw GermFileError(def.line, e.what());
    }
  }
  return out;
}

}  // namespace

GermFile parse_germ_file(std::string_view text) {
  std::optional<std::vector<std::string>> names;
  std::size_t vars_line = 0;
  unsigned ext = 0;
  std::map<std::size_t, Definition> map_defs;
  std::map<std::size_t, Definition> mu_defs;
  bool saw_map = false;
  Block block = Block::None;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    const auto eq = line.find('=');
    if (colon != std::string_view::npos && (eq == std::string_view::npos || colon < eq)) {
      const std::string_view key = trim(line.substr(0, colon));
      const std::string_view value = trim(line.substr(colon + 1));
      if (key == "vars") {
        if (names) throw GermFileError(line_no, "duplicate 'vars:'");
        std::istringstream in{std::string(value)};
        std::vector<std::string> v;
        for (std::string name; in >> name;) v.push_back(name);
        if (v.empty()) throw GermFileError(line_no, "'vars:' lists no variables");
        names = std::move(v);
        vars_line = line_no;
        block = Block::None;
      } else if (key == "ext") {
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), ext);
        if (ec != std::errc() || ptr != value.data() + value.size() || ext < 2) {
          throw GermFileError(line_no, "'ext:' needs an integer k >= 2");
        }
        block = Block::None;
      } else if (key == "map") {
        if (saw_map) throw GermFileError(line_no, "duplicate 'map:' block");
        saw_map = true;
        block = Block::Map;
        if (!value.empty()) throw GermFileError(line_no, "'map:' takes no value");
      } else if (key == "mu") {
        block = Block::Mu;
        if (!value.empty()) throw GermFileError(line_no, "'mu:' takes no value");
      } else {
        throw GermFileError(line_no, "unknown section '" + std::string(key) + "'");
      }
      continue;
    }
    switch (block) {
      case Block::Map:
        read_definition(line, 'f', line_no, map_defs);
        break;
      case Block::Mu:
        read_definition(line, 'm', line_no, mu_defs);
        break;
      case Block::None:
        throw GermFileError(line_no, "definition outside a 'map:' or 'mu:' block");
    }
  }

  if (!names) throw GermFileError(0, "missing 'vars:' line");
  if (map_defs.empty()) throw GermFileError(0, "missing 'map:' block");

  GermFile g;
  try {
    g.vars = VarList(*names);
  } catch (const std::invalid_argument& e) {
    throw GermFileError(vars_line, e.what());
  }
  g.ext_degree = ext;
  g.map = PolyMap(g.vars, parse_definitions(map_defs, 'f', g.vars, ext));
  g.multipliers = parse_definitions(mu_defs, 'm', g.vars, ext);
  for (std::size_t i = 0; i < g.map.target_arity(); ++i) {
    if (!g.map[i].constant_term().is_zero()) {
      throw GermFileError(map_defs.at(i + 1).line,
                          "f" + std::to_string(i + 1) + " does not vanish at the origin");
    }
  }
  return g;
}

GermFile load_germ_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GermFileError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_germ_file(buf.str());
}

}  // namespace frontalkit::cli
