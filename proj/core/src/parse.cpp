#include "frontalkit/parse.hpp"

#include <cctype>

namespace frontalkit {

ParseError::ParseError(Kind kind, std::size_t position, const std::string& what)
    : std::runtime_error("at position " + std::to_string(position) + ": " + what),
      kind_(kind),
      position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarList& vars, unsigned ext_degree)
      : text_(text), vars_(vars), ext_degree_(ext_degree) {}

  Poly run() {
    Poly p = expr();
    skip_ws();
    if (pos_ < text_.size()) unexpected();
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[noreturn]] void fail(ParseError::Kind kind, std::size_t at, const std::string& msg) {
    throw ParseError(kind, at, msg);
  }

  [[noreturn]] void unexpected() {
    skip_ws();
    if (pos_ >= text_.size()) fail(ParseError::Kind::Syntax, pos_, "unexpected end of input");
    const char ch = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_' || ch == '(' ||
        std::isdigit(static_cast<unsigned char>(ch))) {
      fail(ParseError::Kind::Syntax, pos_,
           std::string("unexpected '") + ch + "' (implicit multiplication is not allowed)");
    }
    fail(ParseError::Kind::Syntax, pos_, std::string("unexpected '") + ch + "'");
  }

  std::string digits() {
    skip_ws();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(ParseError::Kind::Syntax, start, "expected a natural number");
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly expr() {
    Poly acc(vars_);
    bool negate = false;
    const char lead = peek();
    if (lead == '+' || lead == '-') {
      negate = lead == '-';
      ++pos_;
    }
    Poly first = term();
    acc += negate ? -first : first;
    for (;;) {
      const char op = peek();
      if (op != '+' && op != '-') break;
      ++pos_;
      Poly t = term();
      if (op == '+') {
        acc += t;
      } else {
        acc -= t;
      }
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      const char op = peek();
      if (op != '*' && op != '/') break;
      const auto at = pos_++;
      Poly rhs = factor();
      if (op == '*') {
        acc *= rhs;
        continue;
      }
      if (!rhs.is_constant()) {
        fail(ParseError::Kind::NonConstantDivision, at, "division by a non-constant");
      }
      if (rhs.is_zero()) fail(ParseError::Kind::DivisionByZero, at, "division by zero");
      acc *= rhs.constant_term().inverse();
    }
    const char next = peek();
    if (next != '\0' && next != '+' && next != '-' && next != ')') unexpected();
    return acc;
  }

  Poly factor() {
    Poly b = base();
    if (peek() == '^') {
      ++pos_;
      const auto at = pos_;
      const std::string e = digits();
      if (e.size() > 6) fail(ParseError::Kind::Syntax, at, "exponent too large");
      b = pow(b, static_cast<unsigned>(std::stoul(e)));
    }
    return b;
  }

  Poly base() {
    const char ch = peek();
    const auto at = pos_;
    if (ch == '(') {
      ++pos_;
      Poly inner = expr();
      if (peek() != ')') fail(ParseError::Kind::Syntax, pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mpq_class value(digits());
      // A '/' directly followed by digits belongs to the literal.
      const auto save = pos_;
      if (peek() == '/') {
        ++pos_;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
          const auto den_at = pos_;
          mpz_class den(digits());
          if (den == 0) fail(ParseError::Kind::DivisionByZero, den_at, "zero denominator");
          value /= den;
          value.canonicalize();
        } else {
          pos_ = save;
        }
      }
      return Poly(vars_, Scalar(value));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const auto start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      const auto idx = vars_.index_of(name);
      if (idx < vars_.size()) return Poly::variable(vars_, idx);
      if (ext_degree_ >= 2 && name == "c") return Poly(vars_, Scalar::generator(ext_degree_));
      fail(ParseError::Kind::UnknownVariable, start, "unknown variable '" + name + "'");
    }
    if (ch == '\0') fail(ParseError::Kind::Syntax, at, "unexpected end of input");
    fail(ParseError::Kind::Syntax, at, std::string("unexpected '") + ch + "'");
  }

  std::string_view text_;
  const VarList& vars_;
  unsigned ext_degree_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const VarList& vars, unsigned ext_degree) {
  return Parser(text, vars, ext_degree).run();
}

}  // namespace frontalkit
