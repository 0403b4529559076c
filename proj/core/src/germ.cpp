#include "frontalkit/germ.hpp"

#include <algorithm>
#include <stdexcept>

#include "frontalkit/linear_solver.hpp"

namespace frontalkit {

PolyMap::PolyMap(VarList source, std::vector<Poly> components)
    : source_(std::move(source)), components_(std::move(components)) {
  for (const auto& c : components_) {
    if (!(c.vars() == source_)) {
      throw std::invalid_argument("map component uses a different variable list");
    }
  }
}

PolyMap PolyMap::identity(const VarList& vars) {
  std::vector<Poly> comps;
  for (std::size_t i = 0; i < vars.size(); ++i) comps.push_back(Poly::variable(vars, i));
  return PolyMap(vars, std::move(comps));
}

bool PolyMap::is_origin_preserving() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Poly& p) { return p.constant_term().is_zero(); });
}

bool PolyMap::has_rational_coefficients() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Poly& p) { return p.has_rational_coefficients(); });
}

std::string PolyMap::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i > 0) out += ", ";
    out += components_[i].to_string();
  }
  return out + ")";
}

PolyMatrix::PolyMatrix(VarList vars, std::size_t rows, std::size_t cols)
    : vars_(std::move(vars)), rows_(rows), cols_(cols), entries_(rows * cols, Poly(vars_)) {}

PolyMatrix PolyMatrix::identity(const VarList& vars, std::size_t n) {
  PolyMatrix m(vars, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly(vars, Scalar(1));
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  PolyMatrix r(a.vars_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Poly acc(a.vars_);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += a(i, k) * b(k, j);
      }
      r(i, j) = std::move(acc);
    }
  }
  return r;
}

PolyMatrix operator*(const PolyMatrix& a, const Poly& s) {
  PolyMatrix r = a;
  for (auto& e : r.entries_) e = e * s;
  return r;
}

std::vector<std::vector<Scalar>> PolyMatrix::eval(std::span<const Scalar> point) const {
  std::vector<std::vector<Scalar>> out(rows_, std::vector<Scalar>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = frontalkit::eval((*this)(i, j), point);
  }
  return out;
}

std::string PolyMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i > 0 ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out += ", ";
      out += (*this)(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

Covector operator+(const Covector& a, const Covector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("covector length mismatch");
  Covector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

Covector operator*(const Poly& s, const Covector& v) {
  Covector r = v;
  for (auto& c : r.coeffs) c = s * c;
  return r;
}

Covector operator*(const Covector& v, const PolyMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("covector/matrix dimension mismatch");
  Covector r;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Poly acc(m.vars());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (v.coeffs[i].is_zero() || m(i, j).is_zero()) continue;
      acc += v.coeffs[i] * m(i, j);
    }
    r.coeffs.push_back(std::move(acc));
  }
  return r;
}

PolyMatrix jacobian_matrix(const PolyMap& f) {
  PolyMatrix j(f.source(), f.target_arity(), f.source_arity());
  for (std::size_t r = 0; r < f.target_arity(); ++r) {
    for (std::size_t c = 0; c < f.source_arity(); ++c) j(r, c) = diff(f[r], c);
  }
  return j;
}

namespace {

// Laplace expansion along the first row of the submatrix given by row/column index sets.
Poly det_minor(const PolyMatrix& m, const std::vector<std::size_t>& rows,
               const std::vector<std::size_t>& cols) {
  const std::size_t n = rows.size();
  if (n == 0) return Poly(m.vars(), Scalar(1));
  if (n == 1) return m(rows[0], cols[0]);
  if (n == 2) {
    return m(rows[0], cols[0]) * m(rows[1], cols[1]) - m(rows[0], cols[1]) * m(rows[1], cols[0]);
  }
  Poly acc(m.vars());
  const std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < n; ++k) {
    const Poly& entry = m(rows[0], cols[k]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    sub_cols.reserve(n - 1);
    for (std::size_t c = 0; c < n; ++c) {
      if (c != k) sub_cols.push_back(cols[c]);
    }
    Poly term = entry * det_minor(m, sub_rows, sub_cols);
    if (k % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

std::vector<std::size_t> iota_except(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != skip) out.push_back(i);
  }
  return out;
}

}  // namespace

Poly determinant(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  return det_minor(m, iota_except(m.rows(), m.rows()), iota_except(m.cols(), m.cols()));
}

Poly jacobian_det(const PolyMap& f) {
  if (f.source_arity() != f.target_arity()) {
    throw std::invalid_argument("jacobian_det: map is not equidimensional");
  }
  return determinant(jacobian_matrix(f));
}

PolyMatrix adjugate(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) throw std::invalid_argument("adjugate of an empty matrix");
  PolyMatrix adj(m.vars(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // adj(j, i) = (-1)^(i+j) * minor obtained by deleting row i and column j.
      Poly minor = det_minor(m, iota_except(n, i), iota_except(n, j));
      adj(j, i) = (i + j) % 2 == 0 ? std::move(minor) : -minor;
    }
  }
  return adj;
}

Covector differential(const Poly& h) {
  Covector d;
  for (std::size_t i = 0; i < h.nvars(); ++i) d.coeffs.push_back(diff(h, i));
  return d;
}

PolyMap compose(const PolyMap& g, const PolyMap& f) {
  if (f.target_arity() != g.source_arity()) {
    throw std::invalid_argument("compose: target arity " + std::to_string(f.target_arity()) +
                                " does not match source arity " +
                                std::to_string(g.source_arity()));
  }
  std::vector<Poly> comps;
  comps.reserve(g.target_arity());
  for (const auto& gi : g.components()) comps.push_back(substitute(gi, f.components()));
  return PolyMap(f.source(), std::move(comps));
}

PolyMatrix substitute(const PolyMatrix& m, const PolyMap& f) {
  if (m.vars().size() != f.target_arity()) {
    throw std::invalid_argument("matrix substitution arity mismatch");
  }
  PolyMatrix r(f.source(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = substitute(m(i, j), f.components());
  }
  return r;
}

std::size_t corank_at_zero(const PolyMap& f) {
  if (f.source_arity() != f.target_arity()) {
    throw std::invalid_argument("corank_at_zero: map is not equidimensional");
  }
  const std::vector<Scalar> origin(f.source_arity());
  return f.source_arity() - rank(jacobian_matrix(f).eval(origin));
}

bool has_invertible_linear_part(const PolyMap& f) {
  return f.source_arity() == f.target_arity() && corank_at_zero(f) == 0;
}

}  // namespace frontalkit
