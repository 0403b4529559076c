#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "frontalkit/scalar.hpp"

namespace frontalkit {

/// Ordered variable names shared by every polynomial built in one context.
///
/// Copies share storage, so equality usually short-circuits on the pointer.
class VarList {
 public:
  VarList() : names_(std::make_shared<const std::vector<std::string>>()) {}
  VarList(std::vector<std::string> names);  // NOLINT(google-explicit-constructor)
  VarList(std::initializer_list<std::string> names)
      : VarList(std::vector<std::string>(names)) {}

  std::size_t size() const { return names_->size(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }

  /// Index of a name, or size() when absent.
  std::size_t index_of(const std::string& name) const;

  friend bool operator==(const VarList& a, const VarList& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Dense exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial variable(std::size_t nvars, std::size_t index);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t degree() const { return degree_; }
  std::span<const std::uint32_t> exponents() const { return exps_; }

  void set(std::size_t i, std::uint32_t e);

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

/// Term order used for storage and linear-algebra columns: ascending total
/// degree, ties broken lexicographically with larger exponents of earlier
/// variables first (x^2 before x*y before y^2). Printing instead lists
/// terms in descending lexicographic order of exponent vectors.
struct GradedOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials in `nvars` variables of total degree <= max_degree, in GradedOrder.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree);

/// Marker for the order of the zero polynomial.
inline constexpr unsigned kInfiniteOrder = std::numeric_limits<unsigned>::max();

/// Sparse multivariate polynomial with exact coefficients.
///
/// Zero coefficients are never stored. All binary operations require the
/// operands to share a variable list and throw std::invalid_argument
/// otherwise.
class Poly {
 public:
  using TermMap = std::map<Monomial, Scalar, GradedOrder>;

  Poly() = default;
  explicit Poly(VarList vars) : vars_(std::move(vars)) {}
  Poly(VarList vars, const Scalar& constant);

  static Poly variable(const VarList& vars, std::size_t index);
  static Poly variable(const VarList& vars, const std::string& name);
  static Poly term(const VarList& vars, Monomial m, const Scalar& coeff);

  const VarList& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar coefficient(const Monomial& m) const;
  Scalar constant_term() const;

  /// Total degree; 0 for the zero polynomial.
  unsigned degree() const;
  /// Minimal total degree of a term; kInfiniteOrder for zero.
  unsigned order() const;
  bool has_rational_coefficients() const;

  /// Adds c*m in place.
  void add_term(const Monomial& m, const Scalar& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b);

  /// Canonical text accepted back by parse_poly, e.g. "x^2 + 2*x*y + y".
  std::string to_string() const;

 private:
  void require_same_vars(const Poly& o, const char* op) const;

  VarList vars_;
  TermMap terms_;
};

Poly pow(const Poly& p, unsigned m);

/// Product truncated to terms of total degree <= max_degree.
Poly mul_truncated(const Poly& a, const Poly& b, unsigned max_degree);

/// Formal partial derivative with respect to variable `index`.
Poly diff(const Poly& p, std::size_t index);
Poly diff(const Poly& p, const std::string& var);

/// Terms of total degree <= k.
Poly jet(const Poly& p, unsigned k);

/// Composition p(images...). Images must share one variable list and
/// there must be exactly one per variable of p.
Poly substitute(const Poly& p, std::span<const Poly> images);

/// jet(substitute(p, images), max_degree) without building the high-degree part.
Poly substitute_truncated(const Poly& p, std::span<const Poly> images, unsigned max_degree);

Scalar eval(const Poly& p, std::span<const Scalar> point);

/// Re-expresses p over a different variable list by name. Every variable
/// in which p actually has positive degree must exist in `target`.
Poly rename_into(const Poly& p, const VarList& target);

}  // namespace frontalkit
