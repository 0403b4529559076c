#include "frontalkit/frontal.hpp"

#include <stdexcept>

#include "frontalkit/linear_solver.hpp"

namespace frontalkit {

std::vector<Poly> Conormal::components(const VarList& vars) const {
  std::vector<Poly> out = head;
  for (const auto& t : tail) out.emplace_back(vars, t);
  return out;
}

std::vector<Scalar> Conormal::at_origin() const {
  std::vector<Scalar> out;
  for (const auto& h : head) out.push_back(h.constant_term());
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

std::string Conormal::to_string() const {
  std::string out = "(";
  bool first = true;
  for (const auto& h : head) {
    out += first ? "" : ", ";
    out += h.to_string();
    first = false;
  }
  for (const auto& t : tail) {
    out += first ? "" : ", ";
    out += t.to_string();
    first = false;
  }
  return out + ")";
}

namespace {

void check_inputs(const PolyMap& f, const std::vector<Poly>& multipliers) {
  if (multipliers.empty()) throw std::invalid_argument("empty multiplier list");
  if (f.source_arity() != f.target_arity()) {
    throw std::invalid_argument("base germ is not equidimensional");
  }
  for (const auto& mu : multipliers) {
    if (!(mu.vars() == f.source())) {
      throw std::invalid_argument("multiplier uses a different variable list");
    }
  }
}

}  // namespace

PolyMap build_frontal(const PolyMap& f, const std::vector<Poly>& multipliers) {
  check_inputs(f, multipliers);
  const Poly jac = jacobian_det(f);
  const Poly jac_sq = jac * jac;
  std::vector<Poly> comps = f.components();
  for (const auto& mu : multipliers) comps.push_back(mu * jac_sq);
  return PolyMap(f.source(), std::move(comps));
}

std::vector<Conormal> conormals(const PolyMap& f, const std::vector<Poly>& multipliers) {
  check_inputs(f, multipliers);
  const PolyMatrix jf = jacobian_matrix(f);
  const Poly jac = determinant(jf);
  const PolyMatrix adj = adjugate(jf);
  const Covector djac = differential(jac);
  const Poly two(f.source(), Scalar(2));

  std::vector<Conormal> out;
  out.reserve(multipliers.size());
  for (std::size_t i = 0; i < multipliers.size(); ++i) {
    const Poly& mu = multipliers[i];
    const Covector row = jac * differential(mu) + (two * mu) * djac;
    Conormal phi;
    phi.head = (row * adj).coeffs;
    phi.tail.assign(multipliers.size(), Scalar());
    phi.tail[i] = Scalar(-1);
    out.push_back(std::move(phi));
  }
  return out;
}

FrontalPackage make_frontal_package(const PolyMap& f, const std::vector<Poly>& multipliers) {
  return FrontalPackage{f, multipliers, build_frontal(f, multipliers), conormals(f, multipliers)};
}

CertifyReport certify_frontal(const PolyMap& F, const std::vector<Conormal>& candidates) {
  const std::size_t n = F.source_arity();
  const std::size_t dim = F.target_arity();
  for (const auto& phi : candidates) {
    if (phi.head.size() + phi.tail.size() != dim) {
      throw std::invalid_argument("conormal length does not match the target dimension");
    }
    for (const auto& h : phi.head) {
      if (!(h.vars() == F.source())) {
        throw std::invalid_argument("conormal uses a different variable list");
      }
    }
  }

  CertifyReport report;
  const PolyMatrix jF = jacobian_matrix(F);
  for (std::size_t i = 0; i < candidates.size() && report.condition1.pass; ++i) {
    const auto comps = candidates[i].components(F.source());
    for (std::size_t j = 0; j < n; ++j) {
      Poly dot(F.source());
      for (std::size_t r = 0; r < dim; ++r) {
        if (comps[r].is_zero() || jF(r, j).is_zero()) continue;
        dot += comps[r] * jF(r, j);
      }
      if (!dot.is_zero()) {
        report.condition1.pass = false;
        report.condition1.conormal = i;
        report.condition1.direction = j;
        report.condition1.residual = std::move(dot);
        break;
      }
    }
  }

  std::vector<std::vector<Scalar>> values;
  for (const auto& phi : candidates) {
    auto v = phi.at_origin();
    bool nonzero = false;
    for (const auto& s : v) nonzero = nonzero || !s.is_zero();
    report.condition2.per_conormal.push_back(nonzero);
    report.condition2.pass = report.condition2.pass && nonzero;
    values.push_back(std::move(v));
  }
  report.condition2.values_at_origin = values;

  report.condition3.rank = rank(values);
  report.condition3.pass = report.condition3.rank == candidates.size();
  return report;
}

}  // namespace frontalkit
