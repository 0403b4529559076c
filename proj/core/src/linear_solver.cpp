#include "frontalkit/linear_solver.hpp"

#include <stdexcept>

namespace frontalkit {

bool SparseEliminator::add_row(const SparseRow& row, const Scalar& rhs) {
  std::map<std::size_t, Scalar> work;
  for (const auto& [col, value] : row) {
    if (col >= columns_) throw std::out_of_range("column index out of range");
    if (value.is_zero()) continue;
    auto [it, inserted] = work.try_emplace(col, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) work.erase(it);
    }
  }
  Scalar b = rhs;

  auto it = work.begin();
  while (it != work.end()) {
    const auto pivot = pivots_.find(it->first);
    if (pivot == pivots_.end()) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    const Scalar factor = it->second;
    for (const auto& [pc, pv] : pivot->second.entries) {
      auto [w, inserted] = work.try_emplace(pc, -(factor * pv));
      if (!inserted) {
        w->second -= factor * pv;
        if (w->second.is_zero()) work.erase(w);
      }
    }
    b -= factor * pivot->second.rhs;
    // Column `col` is now eliminated; continue with the next larger column.
    it = work.upper_bound(col);
  }

  if (work.empty()) {
    if (!b.is_zero()) consistent_ = false;
    return b.is_zero();
  }
  const Scalar lead_inv = work.begin()->second.inverse();
  for (auto& [c, v] : work) v *= lead_inv;
  b *= lead_inv;
  const std::size_t lead = work.begin()->first;
  pivots_.emplace(lead, PivotRow{std::move(work), std::move(b)});
  return true;
}

std::optional<std::vector<Scalar>> SparseEliminator::solve() const {
  if (!consistent_) return std::nullopt;
  std::vector<Scalar> u(columns_);
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    Scalar value = it->second.rhs;
    for (const auto& [c, v] : it->second.entries) {
      if (c == it->first) continue;
      if (!u[c].is_zero()) value -= v * u[c];
    }
    u[it->first] = std::move(value);
  }
  return u;
}

std::size_t rank(const std::vector<std::vector<Scalar>>& matrix) {
  if (matrix.empty()) return 0;
  SparseEliminator elim(matrix.front().size());
  for (const auto& r : matrix) {
    if (r.size() != elim.columns()) throw std::invalid_argument("ragged matrix");
    SparseRow row;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (!r[j].is_zero()) row.emplace_back(j, r[j]);
    }
    elim.add_row(row);
  }
  return elim.rank();
}

}  // namespace frontalkit
