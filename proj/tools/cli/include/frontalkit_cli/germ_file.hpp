#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "frontalkit/germ.hpp"

namespace frontalkit::cli {

/// Parsed contents of a germ file.
///
///   # comment
///   vars: x y
///   ext: 3          (optional; enables the generator c with c^3 = 6)
///   map:
///     f1 = 1/3*x^3 + x*y^3
///     f2 = y
///   mu:             (optional)
///     m1 = 1
struct GermFile {
  VarList vars;
  unsigned ext_degree = 0;
  PolyMap map;
  std::vector<Poly> multipliers;
};

class GermFileError : public std::runtime_error {
 public:
  GermFileError(std::size_t line, const std::string& what);
  /// One-based line number, 0 when the error is not tied to a line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

GermFile parse_germ_file(std::string_view text);
GermFile load_germ_file(const std::string& path);

}  // namespace frontalkit::cli
