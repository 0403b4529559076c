#include "frontalkit/ramification.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

#include "frontalkit/linear_solver.hpp"

namespace frontalkit {

const char* to_string(MembershipVerdict::Status s) {
  switch (s) {
    case MembershipVerdict::Status::Member:
      return "MEMBER";
    case MembershipVerdict::Status::NotMemberModJet:
      return "NOT-MEMBER-MOD-JET";
    case MembershipVerdict::Status::Undecided:
      return "UNDECIDED";
  }
  return "UNDECIDED";
}

const char* to_string(MembershipCertificate::Kind k) {
  return k == MembershipCertificate::Kind::GradientModule ? "gradient-module"
                                                          : "jsq-plus-pullback";
}

VarList target_variables(const PolyMap& f) {
  std::vector<std::string> names;
  std::set<std::string> seen(f.source().names().begin(), f.source().names().end());
  bool clash = false;
  for (const auto& s : f.source().names()) {
    std::string up = s;
    std::transform(up.begin(), up.end(), up.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    if (up == s || !seen.insert(up).second) clash = true;
    names.push_back(std::move(up));
  }
  if (clash || names.size() != f.target_arity()) {
    names.clear();
    for (std::size_t i = 0; i < f.target_arity(); ++i) names.push_back("X" + std::to_string(i + 1));
  }
  return VarList(std::move(names));
}

namespace {

void check_arity(const Poly& psi, const PolyMap& f) {
  if (f.source_arity() != f.target_arity()) {
    throw std::invalid_argument("membership: map is not equidimensional");
  }
  if (!(psi.vars() == f.source())) {
    throw std::invalid_argument("membership: psi and f use different variables");
  }
}

using ColumnIndex = std::map<Monomial, std::size_t, GradedOrder>;

ColumnIndex index_basis(const std::vector<Monomial>& basis) {
  ColumnIndex idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

// Appends the coefficients of `contribution` (already jet-k truncated) to the
// equation rows starting at `block * basis_size`.
void scatter(const Poly& contribution, std::size_t unknown, std::size_t block,
             std::size_t basis_size, const ColumnIndex& idx, std::vector<SparseRow>& rows) {
  for (const auto& [m, c] : contribution.terms()) {
    rows[block * basis_size + idx.at(m)].emplace_back(unknown, c);
  }
}

Poly assemble(const VarList& vars, const std::vector<Monomial>& basis,
              const std::vector<Scalar>& u, std::size_t offset) {
  Poly p(vars);
  for (std::size_t b = 0; b < basis.size(); ++b) p.add_term(basis[b], u[offset + b]);
  return p;
}

Poly assemble(const VarList& vars, const std::vector<Monomial>& basis,
              const std::vector<Scalar>& u, const std::vector<std::size_t>& cols) {
  Poly p(vars);
  for (std::size_t b = 0; b < basis.size(); ++b) p.add_term(basis[b], u[cols[b]]);
  return p;
}

MembershipVerdict solve_system(const std::vector<SparseRow>& rows, const std::vector<Scalar>& rhs,
                               std::size_t unknowns, unsigned k,
                               std::optional<std::vector<Scalar>>& solution) {
  MembershipVerdict v;
  v.jet_order = k;
  v.unknowns = unknowns;
  SparseEliminator elim(unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!elim.add_row(rows[r], rhs[r])) {
      v.status = MembershipVerdict::Status::NotMemberModJet;
      return v;
    }
  }
  solution = elim.solve();
  v.status = MembershipVerdict::Status::Member;
  return v;
}

MembershipVerdict undecided(std::size_t unknowns, unsigned k) {
  MembershipVerdict v;
  v.status = MembershipVerdict::Status::Undecided;
  v.jet_order = k;
  v.unknowns = unknowns;
  return v;
}

}  // namespace

MembershipVerdict gradient_module_membership(const Poly& psi, const PolyMap& f, unsigned k,
                                             std::size_t unknown_cap) {
  check_arity(psi, f);
  const std::size_t n = f.source_arity();
  const auto basis = monomials_up_to(n, k);
  const std::size_t nb = basis.size();
  const std::size_t unknowns = n * nb;
  if (unknowns > unknown_cap) return undecided(unknowns, k);
  const ColumnIndex idx = index_basis(basis);

  // Equation (j, M): coefficient of M in component j of dpsi - sum a_i df_i.
  std::vector<SparseRow> rows(n * nb);
  std::vector<Scalar> rhs(n * nb);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Poly dfij = jet(diff(f[i], j), k);
      if (dfij.is_zero()) continue;
      for (std::size_t b = 0; b < nb; ++b) {
        const Poly mono = Poly::term(f.source(), basis[b], Scalar(1));
        scatter(mul_truncated(mono, dfij, k), i * nb + b, j, nb, idx, rows);
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Poly dpsi = jet(diff(psi, j), k);
    for (const auto& [m, c] : dpsi.terms()) rhs[j * nb + idx.at(m)] = c;
  }

  std::optional<std::vector<Scalar>> u;
  MembershipVerdict v = solve_system(rows, rhs, unknowns, k, u);
  if (!v.member()) return v;
  MembershipCertificate cert;
  cert.kind = MembershipCertificate::Kind::GradientModule;
  cert.jet_order = k;
  for (std::size_t i = 0; i < n; ++i) cert.coefficients.push_back(assemble(f.source(), basis, *u, i * nb));
  v.certificate = std::move(cert);
  return v;
}

MembershipVerdict jsq_plus_pullback_membership(const Poly& psi, const PolyMap& f, unsigned k,
                                               std::size_t unknown_cap) {
  check_arity(psi, f);
  const std::size_t n = f.source_arity();
  const auto basis = monomials_up_to(n, k);
  const std::size_t nb = basis.size();
  const std::size_t unknowns = 2 * nb;
  if (unknowns > unknown_cap) return undecided(unknowns, k);
  const ColumnIndex idx = index_basis(basis);
  const VarList target = target_variables(f);

  std::vector<SparseRow> rows(nb);
  std::vector<Scalar> rhs(nb);
  const Poly jac = jet(jacobian_det(f), k);
  const Poly jac_sq = mul_truncated(jac, jac, k);
  // Columns grouped by monomial degree, eta before mu within a degree. The
  // solver keeps the earliest independent columns, so psi = 1 gives eta = 1
  // and psi = |Jf|^2 gives mu = 1.
  std::vector<std::size_t> mu_col(nb), eta_col(nb);
  for (std::size_t lo = 0, next = 0; lo < nb;) {
    std::size_t hi = lo;
    while (hi < nb && basis[hi].degree() == basis[lo].degree()) ++hi;
    for (std::size_t b = lo; b < hi; ++b) eta_col[b] = next++;
    for (std::size_t b = lo; b < hi; ++b) mu_col[b] = next++;
    lo = hi;
  }
  for (std::size_t b = 0; b < nb; ++b) {
    const Poly mono = Poly::term(f.source(), basis[b], Scalar(1));
    scatter(mul_truncated(mono, jac_sq, k), mu_col[b], 0, nb, idx, rows);
  }
  std::vector<Poly> jets;
  for (const auto& fi : f.components()) jets.push_back(jet(fi, k));
  for (std::size_t b = 0; b < nb; ++b) {
    const Poly mono = Poly::term(target, basis[b], Scalar(1));
    scatter(substitute_truncated(mono, jets, k), eta_col[b], 0, nb, idx, rows);
  }
  const Poly psi_jet = jet(psi, k);
  for (const auto& [m, c] : psi_jet.terms()) rhs[idx.at(m)] = c;

  std::optional<std::vector<Scalar>> u;
  MembershipVerdict v = solve_system(rows, rhs, unknowns, k, u);
  if (!v.member()) return v;
  MembershipCertificate cert;
  cert.kind = MembershipCertificate::Kind::JsqPlusPullback;
  cert.jet_order = k;
  cert.mu = assemble(f.source(), basis, *u, mu_col);
  cert.eta = assemble(target, basis, *u, eta_col);
  v.certificate = std::move(cert);
  return v;
}

bool recheck(const MembershipCertificate& cert, const Poly& psi, const PolyMap& f) {
  const std::size_t n = f.source_arity();
  const unsigned k = cert.jet_order;
  if (cert.kind == MembershipCertificate::Kind::GradientModule) {
    if (cert.coefficients.size() != n) return false;
    for (std::size_t j = 0; j < n; ++j) {
      Poly residual = diff(psi, j);
      for (std::size_t i = 0; i < n; ++i) residual -= cert.coefficients[i] * diff(f[i], j);
      if (!jet(residual, k).is_zero()) return false;
    }
    return true;
  }
  if (!cert.mu || !cert.eta || cert.eta->nvars() != f.target_arity()) return false;
  const Poly jac = jacobian_det(f);
  const Poly residual = psi - *cert.mu * jac * jac - substitute(*cert.eta, f.components());
  return jet(residual, k).is_zero();
}

bool verify_identity(const Poly& lhs, const Poly& rhs) { return lhs == rhs; }

bool GeneratorListReport::all_member() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const GeneratorCheck& c) { return c.gradient.member() && c.jsq.member(); });
}

GeneratorListReport check_generator_list(const PolyMap& f, const std::vector<Poly>& generators,
                                         unsigned k, std::size_t unknown_cap) {
  GeneratorListReport report;
  report.jet_order = k;
  for (const auto& g : generators) {
    report.checks.push_back(GeneratorCheck{g, gradient_module_membership(g, f, k, unknown_cap),
                                           jsq_plus_pullback_membership(g, f, k, unknown_cap)});
  }
  return report;
}

}  // namespace frontalkit
