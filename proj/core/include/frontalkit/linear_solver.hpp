#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "frontalkit/scalar.hpp"

namespace frontalkit {

/// Sparse row: (column, value) pairs; zero values are ignored.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Incremental exact Gaussian elimination for A u = b.
///
/// Rows are reduced against the existing pivots as they arrive, always
/// eliminating the lowest-index column first, so both the echelon form and
/// the particular solution depend only on the order rows are added.
/// solve() sets every free unknown to zero.
class SparseEliminator {
 public:
  explicit SparseEliminator(std::size_t columns) : columns_(columns) {}

  /// Adds one equation; returns false if it is inconsistent with the
  /// equations seen so far (0 = nonzero after reduction).
  bool add_row(const SparseRow& row, const Scalar& rhs = Scalar());

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return pivots_.size(); }
  bool consistent() const { return consistent_; }

  /// Particular solution with free unknowns set to zero; nullopt when inconsistent.
  std::optional<std::vector<Scalar>> solve() const;

 private:
  struct PivotRow {
    std::map<std::size_t, Scalar> entries;  // leading entry normalized to 1
    Scalar rhs;
  };

  std::size_t columns_;
  std::map<std::size_t, PivotRow> pivots_;
  bool consistent_ = true;
};

/// Rank of a dense matrix over the scalar field.
std::size_t rank(const std::vector<std::vector<Scalar>>& matrix);

}  // namespace frontalkit
