#include "frontalkit/algebra.hpp"

#include <map>

#include "frontalkit/linear_solver.hpp"

namespace frontalkit {

std::size_t jet_codimension(const PolyMap& f, unsigned k) {
  const std::size_t n = f.source_arity();
  const auto basis = monomials_up_to(n, k);
  std::map<Monomial, std::size_t, GradedOrder> column;
  for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], i);

  SparseEliminator elim(basis.size());
  for (const auto& fi : f.components()) {
    const Poly low = jet(fi, k);
    if (low.is_zero()) continue;
    const unsigned ord = low.order();
    for (const auto& m : basis) {
      if (m.degree() + ord > k) break;
      SparseRow row;
      for (const auto& [t, c] : low.terms()) {
        if (t.degree() + m.degree() > k) break;
        row.emplace_back(column.at(t * m), c);
      }
      elim.add_row(row);
      if (elim.rank() == basis.size()) return 0;
    }
  }
  return basis.size() - elim.rank();
}

MultiplicityResult multiplicity(const PolyMap& f, unsigned k_max) {
  MultiplicityResult result;
  for (unsigned k = 0; k <= k_max; ++k) {
    result.codimensions.push_back(jet_codimension(f, k));
    result.jet_order = k;
    if (k > 0 && result.codimensions[k] == result.codimensions[k - 1]) {
      result.value = result.codimensions[k];
      break;
    }
  }
  return result;
}

bool is_finite_up_to(const PolyMap& f, unsigned k_max) {
  return multiplicity(f, k_max).stabilized();
}

}  // namespace frontalkit
