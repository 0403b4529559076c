#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "frontalkit/poly.hpp"

namespace frontalkit {

/// Polynomial map (R^n, 0) -> (R^p, *) given by p components in n variables.
class PolyMap {
 public:
  PolyMap() = default;
  PolyMap(VarList source, std::vector<Poly> components);

  static PolyMap identity(const VarList& vars);

  const VarList& source() const { return source_; }
  std::size_t source_arity() const { return source_.size(); }
  std::size_t target_arity() const { return components_.size(); }
  const std::vector<Poly>& components() const { return components_; }
  const Poly& operator[](std::size_t i) const { return components_[i]; }

  /// Every component vanishes at the origin.
  bool is_origin_preserving() const;
  bool has_rational_coefficients() const;

  friend bool operator==(const PolyMap& a, const PolyMap& b) = default;

  /// "(c1, c2, ...)" using canonical polynomial text.
  std::string to_string() const;

 private:
  VarList source_;
  std::vector<Poly> components_;
};

/// Rectangular matrix of polynomials over one variable list.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(VarList vars, std::size_t rows, std::size_t cols);

  static PolyMatrix identity(const VarList& vars, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const VarList& vars() const { return vars_; }

  Poly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const PolyMatrix& a, const Poly& s);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

  /// Evaluates every entry at a point.
  std::vector<std::vector<Scalar>> eval(std::span<const Scalar> point) const;

  std::string to_string() const;

 private:
  VarList vars_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> entries_;
};

/// Coefficients of a 1-form dx_1, ..., dx_n, read as a row vector.
struct Covector {
  std::vector<Poly> coeffs;

  std::size_t size() const { return coeffs.size(); }
  friend bool operator==(const Covector& a, const Covector& b) = default;
};

Covector operator+(const Covector& a, const Covector& b);
Covector operator*(const Poly& s, const Covector& v);
/// Row vector times matrix.
Covector operator*(const Covector& v, const PolyMatrix& m);

/// Entry (i, j) = d f_i / d x_j; size target_arity x source_arity.
PolyMatrix jacobian_matrix(const PolyMap& f);

/// Determinant by cofactor expansion; throws on non-square input.
Poly determinant(const PolyMatrix& m);

/// Jacobian determinant of an equidimensional map.
Poly jacobian_det(const PolyMap& f);

/// Transpose of the cofactor matrix: adjugate(M) * M = M * adjugate(M) = det(M) I.
/// A 1x1 matrix has adjugate [[1]].
PolyMatrix adjugate(const PolyMatrix& m);

/// Gradient (dh/dx_1, ..., dh/dx_n).
Covector differential(const Poly& h);

/// g o f; requires f.target_arity() == g.source_arity().
PolyMap compose(const PolyMap& g, const PolyMap& f);

/// Entrywise substitution of f into a matrix over g's source variables.
PolyMatrix substitute(const PolyMatrix& m, const PolyMap& f);

/// n - rank of the Jacobian matrix at the origin.
std::size_t corank_at_zero(const PolyMap& f);

/// True when the linear part at the origin is invertible (diffeomorphism germ witness).
bool has_invertible_linear_part(const PolyMap& f);

}  // namespace frontalkit
