#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "frontalkit/poly.hpp"

namespace frontalkit {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownVariable, NonConstantDivision, DivisionByZero };

  ParseError(Kind kind, std::size_t position, const std::string& what);

  Kind kind() const { return kind_; }
  /// Zero-based byte offset into the parsed text.
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// Parses a polynomial expression over `vars`.
///
///   expr     := ['+'|'-'] term (('+'|'-') term)*
///   term     := factor (('*'|'/') factor)*
///   factor   := base ('^' nat)?
///   base     := rational | ident | '(' expr ')'
///   rational := int ('/' nat)?
///
/// A '/' that does not belong to a rational literal must be followed by a
/// nonzero constant. Implicit multiplication ("2x") is rejected. When
/// `ext_degree` >= 2, the identifier `c` denotes the generator of
/// Q[c]/(c^k - 6) unless `c` is itself a variable.
Poly parse_poly(std::string_view text, const VarList& vars, unsigned ext_degree = 0);

}  // namespace frontalkit
