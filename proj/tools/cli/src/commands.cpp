#include "frontalkit_cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>

#include "frontalkit/corpus.hpp"
#include "frontalkit/frontal.hpp"
#include "frontalkit/parse.hpp"
#include "frontalkit_cli/mesh.hpp"

namespace frontalkit::cli {

namespace {

Json poly_list(const std::vector<Poly>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

Json scalar_list(const std::vector<Scalar>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.to_string());
  return a;
}

Json matrix_rows(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string modulus(unsigned k) { return "m^" + std::to_string(k + 1); }

Json certificate_json(const MembershipCertificate& cert) {
  Json w = Json::object();
  if (cert.kind == MembershipCertificate::Kind::GradientModule) {
    for (std::size_t i = 0; i < cert.coefficients.size(); ++i) {
      w["a" + std::to_string(i + 1)] = cert.coefficients[i].to_string();
    }
  } else {
    w["mu"] = cert.mu->to_string();
    w["eta"] = cert.eta->to_string();
    w["eta_vars"] = cert.eta->vars().names();
  }
  return w;
}

Json verdict_json(const MembershipVerdict& v, const Poly& psi, const PolyMap& f) {
  Json j;
  j["status"] = to_string(v.status);
  j["jet_order"] = v.jet_order;
  j["modulo"] = modulus(v.jet_order);
  j["unknowns"] = v.unknowns;
  if (v.certificate) {
    j["kind"] = to_string(v.certificate->kind);
    j["witness"] = certificate_json(*v.certificate);
    j["recheck"] = recheck(*v.certificate, psi, f);
  }
  return j;
}

int verdict_exit(const MembershipVerdict& v) {
  switch (v.status) {
    case MembershipVerdict::Status::Member:
      return 0;
    case MembershipVerdict::Status::NotMemberModJet:
      return 1;
    case MembershipVerdict::Status::Undecided:
      return 3;
  }
  return 3;
}

Json certify_json(const CertifyReport& r) {
  Json c;
  Json c1;
  c1["pass"] = r.condition1.pass;
  if (!r.condition1.pass) {
    c1["conormal"] = *r.condition1.conormal + 1;
    c1["direction"] = *r.condition1.direction + 1;
    c1["residual"] = r.condition1.residual->to_string();
  }
  c["condition1"] = std::move(c1);
  Json c2;
  c2["pass"] = r.condition2.pass;
  Json values = Json::array();
  for (const auto& v : r.condition2.values_at_origin) values.push_back(scalar_list(v));
  c2["values_at_origin"] = std::move(values);
  c["condition2"] = std::move(c2);
  Json c3;
  c3["pass"] = r.condition3.pass;
  c3["rank"] = r.condition3.rank;
  c["condition3"] = std::move(c3);
  return c;
}

Json path_json(const corpus::PathOutcome& p) {
  Json j;
  j["reached"] = p.reached;
  j["result"] = p.result.to_string();
  if (!p.reached) j["residual"] = poly_list(p.residual);
  Json cps = Json::array();
  for (const auto& cp : p.checkpoints) {
    Json c;
    c["label"] = cp.label;
    c["matches"] = cp.matches;
    if (!cp.matches) {
      c["actual"] = cp.actual.to_string();
      c["residual"] = poly_list(cp.residual);
    }
    cps.push_back(std::move(c));
  }
  if (!cps.empty()) j["checkpoints"] = std::move(cps);
  return j;
}

Json entry_json(const corpus::EntryReport& r, const corpus::Entry& e) {
  Json j;
  j["name"] = r.name;
  j["path"] = to_string(r.path);
  j["ok"] = r.ok();
  j["frontal"] = r.frontal.to_string();
  Json phis = Json::object();
  for (std::size_t i = 0; i < r.conormals.size(); ++i) {
    phis["phi" + std::to_string(i + 1)] = r.conormals[i].to_string();
  }
  j["conormals"] = std::move(phis);
  j["certified"] = r.certification.pass();
  j["transforms_invertible"] = r.transforms_invertible;
  j["claimed"] = e.claimed.to_string();
  if (e.require_rational_result) j["rational_result"] = r.rational_result_ok;
  j["literal"] = path_json(r.literal);
  if (r.corrected) {
    j["corrected"] = path_json(*r.corrected);
    j["notes"] = r.correction_notes;
  }
  return j;
}

unsigned parse_unsigned(std::string_view s, const std::string& what) {
  unsigned v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad " + what + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

CommandResult cmd_jacobian(const GermFile& g) {
  const PolyMatrix J = jacobian_matrix(g.map);
  CommandResult out;
  out.report["command"] = "jacobian";
  out.report["map"] = g.map.to_string();
  out.report["Jf"] = matrix_rows(J);
  if (J.is_square()) {
    const Poly det = determinant(J);
    out.report["|Jf|"] = det.to_string();
    out.report["adj(Jf)"] = matrix_rows(adjugate(J));
    out.report["|Jf|^2"] = (det * det).to_string();
    out.report["corank_at_zero"] = corank_at_zero(g.map);
  } else {
    out.report["|Jf|"] = nullptr;
  }
  return out;
}

CommandResult cmd_frontal(const GermFile& g) {
  if (g.multipliers.empty()) throw std::invalid_argument("frontal: the germ file has no 'mu:' block");
  const FrontalPackage pkg = make_frontal_package(g.map, g.multipliers);
  const CertifyReport cert = certify_frontal(pkg.map, pkg.conormals);
  CommandResult out;
  out.report["command"] = "frontal";
  out.report["base"] = g.map.to_string();
  out.report["multipliers"] = poly_list(g.multipliers);
  out.report["|Jf|^2"] = pow(jacobian_det(g.map), 2).to_string();
  out.report["F"] = pkg.map.to_string();
  Json phis = Json::object();
  for (std::size_t i = 0; i < pkg.conormals.size(); ++i) {
    phis["phi" + std::to_string(i + 1)] = pkg.conormals[i].to_string();
  }
  out.report["conormals"] = std::move(phis);
  out.report["certification"] = certify_json(cert);
  out.report["status"] = cert.pass() ? "PASS" : "FAIL";
  out.exit_code = cert.pass() ? 0 : 1;
  return out;
}

CommandResult cmd_multiplicity(const GermFile& g, unsigned jet_cap) {
  const MultiplicityResult r = multiplicity(g.map, jet_cap);
  CommandResult out;
  out.report["command"] = "multiplicity";
  out.report["map"] = g.map.to_string();
  if (r.value) {
    out.report["multiplicity"] = *r.value;
  } else {
    out.report["multiplicity"] = "not stabilized at jet order " + std::to_string(jet_cap);
  }
  out.report["jet_order"] = r.jet_order;
  out.report["codimensions"] = r.codimensions;
  if (g.map.source_arity() == g.map.target_arity()) {
    out.report["corank_at_zero"] = corank_at_zero(g.map);
  }
  out.exit_code = r.stabilized() ? 0 : 1;
  return out;
}

CommandResult cmd_ramify(const GermFile& g, const std::string& psi_text, unsigned jet,
                         RamifyMode mode, std::size_t unknown_cap) {
  const Poly psi = parse_poly(psi_text, g.vars, g.ext_degree);
  const MembershipVerdict v = mode == RamifyMode::Gradient
                                  ? gradient_module_membership(psi, g.map, jet, unknown_cap)
                                  : jsq_plus_pullback_membership(psi, g.map, jet, unknown_cap);
  CommandResult out;
  out.report["command"] = "ramify";
  out.report["map"] = g.map.to_string();
  out.report["psi"] = psi.to_string();
  out.report["mode"] = mode == RamifyMode::Gradient ? "gradient" : "jsq";
  const Json verdict = verdict_json(v, psi, g.map);
  for (const auto& [k, val] : verdict.items()) out.report[k] = val;
  out.exit_code = verdict_exit(v);
  return out;
}

CommandResult cmd_generators(const GermFile& g, const std::vector<std::string>& generators,
                             unsigned jet, std::size_t unknown_cap) {
  std::vector<Poly> gens;
  for (const auto& t : generators) gens.push_back(parse_poly(t, g.vars, g.ext_degree));
  const GeneratorListReport r = check_generator_list(g.map, gens, jet, unknown_cap);
  CommandResult out;
  out.report["command"] = "generators";
  out.report["map"] = g.map.to_string();
  out.report["jet_order"] = jet;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j;
    j["psi"] = c.generator.to_string();
    j["gradient"] = verdict_json(c.gradient, c.generator, g.map);
    j["jsq"] = verdict_json(c.jsq, c.generator, g.map);
    checks.push_back(std::move(j));
  }
  out.report["generators"] = std::move(checks);
  out.report["status"] = r.all_member() ? "ALL-MEMBER" : "NOT-ALL-MEMBER";
  out.exit_code = r.all_member() ? 0 : 1;
  return out;
}

CommandResult cmd_identity(const std::vector<std::string>& vars, const std::string& lhs_text,
                           const std::string& rhs_text, unsigned ext_degree) {
  const VarList vl(vars);
  const Poly lhs = parse_poly(lhs_text, vl, ext_degree);
  const Poly rhs = parse_poly(rhs_text, vl, ext_degree);
  const bool equal = verify_identity(lhs, rhs);
  CommandResult out;
  out.report["command"] = "identity";
  out.report["lhs"] = lhs.to_string();
  out.report["rhs"] = rhs.to_string();
  out.report["difference"] = (lhs - rhs).to_string();
  out.report["status"] = equal ? "EQUAL" : "DIFFERENT";
  out.exit_code = equal ? 0 : 1;
  return out;
}

CommandResult cmd_corpus(const std::optional<std::string>& name, const std::vector<unsigned>& k_range) {
  CommandResult out;
  out.report["command"] = "corpus";
  Json entries = Json::array();
  std::vector<std::string> discrepancies;
  bool all_ok = true;

  std::vector<corpus::Entry> selected;
  if (name) {
    if (corpus::is_parametrized(*name)) {
      for (unsigned k : k_range) {
        for (int sign : {+1, -1}) selected.push_back(corpus::make_entry(*name, {k, sign}));
      }
    } else {
      selected.push_back(corpus::make_entry(*name));
    }
  } else {
    for (const auto& n : corpus::entry_names()) {
      if (!corpus::is_parametrized(n)) selected.push_back(corpus::make_entry(n));
    }
    for (const auto& n : corpus::entry_names()) {
      if (!corpus::is_parametrized(n)) continue;
      for (unsigned k : k_range) {
        for (int sign : {+1, -1}) selected.push_back(corpus::make_entry(n, {k, sign}));
      }
    }
  }
  for (const auto& e : selected) {
    const corpus::EntryReport r = corpus::run_entry(e);
    all_ok = all_ok && r.ok();
    for (const auto& cp : r.literal.checkpoints) {
      if (!cp.matches) discrepancies.push_back(r.name + ": literal " + cp.label + " differs from the printed intermediate");
    }
    if (!r.literal.reached) {
      discrepancies.push_back(r.name + ": literal chain misses the claimed form; path=" + to_string(r.path));
    }
    entries.push_back(entry_json(r, e));
  }
  out.report["entries"] = std::move(entries);
  out.report["discrepancies"] = discrepancies;
  out.report["status"] = all_ok ? "ALL-REACHED" : "INCOMPLETE";
  out.exit_code = all_ok ? 0 : 1;
  return out;
}

CommandResult cmd_akfront(const std::vector<unsigned>& ks, unsigned jet_cap) {
  CommandResult out;
  out.report["command"] = "akfront";
  Json results = Json::array();
  bool all_ok = true;
  for (unsigned k : ks) {
    const corpus::AkFrontReport r = corpus::a_k_front_checks(k, jet_cap);
    Json j;
    j["k"] = k;
    j["base"] = corpus::a_k_base_germ(k).to_string();
    if (r.multiplicity.value) {
      j["multiplicity"] = *r.multiplicity.value;
    } else {
      j["multiplicity"] = "not stabilized";
    }
    j["|Jf|"] = r.jacobian.to_string();
    j["restricted_|Jf|"] = r.restricted_jacobian.to_string();
    j["restricted_order"] = r.restricted_order;
    j["restricted_|Jf|^2"] = r.restricted_jacobian_squared.to_string();
    j["restricted_squared_order"] = r.restricted_squared_order;
    j["obstruction"] = r.obstruction;
    if (r.inequality_applicable) {
      j["inequality"] = r.inequality_holds;
    } else {
      j["inequality"] = "not applicable";
    }
    j["ok"] = r.ok();
    all_ok = all_ok && r.ok();
    results.push_back(std::move(j));
  }
  out.report["results"] = std::move(results);
  out.report["status"] = all_ok ? "PASS" : "FAIL";
  out.exit_code = all_ok ? 0 : 1;
  return out;
}

PolyMap mesh_surface(const GermFile& g) {
  if (g.multipliers.size() == 1) return build_frontal(g.map, g.multipliers);
  if (g.multipliers.empty() && g.map.target_arity() == 3) return g.map;
  throw std::invalid_argument("mesh: need exactly one multiplier, or a map with three components");
}

CommandResult cmd_mesh(const PolyMap& F, const mpq_class& range, unsigned resolution,
                       const std::string& out_path) {
  const Mesh mesh = sample_surface(F, range, resolution);
  std::ofstream os(out_path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("mesh: cannot write '" + out_path + "'");
  os << to_obj(mesh);
  os.close();
  if (!os) throw std::runtime_error("mesh: failed writing '" + out_path + "'");
  CommandResult out;
  out.report["command"] = "mesh";
  out.report["surface"] = F.to_string();
  out.report["range"] = to_string(range);
  out.report["resolution"] = resolution;
  out.report["vertices"] = mesh.vertices.size();
  out.report["faces"] = mesh.faces.size();
  out.report["out"] = out_path;
  return out;
}

std::vector<unsigned> parse_k_range(const std::string& text) {
  std::vector<unsigned> ks;
  if (text.empty()) return ks;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const unsigned lo = parse_unsigned(std::string_view(text).substr(0, dots), "k range");
    const unsigned hi = parse_unsigned(std::string_view(text).substr(dots + 2), "k range");
    if (lo > hi) throw std::invalid_argument("empty k range '" + text + "'");
    for (unsigned k = lo; k <= hi; ++k) ks.push_back(k);
    return ks;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    ks.push_back(parse_unsigned(std::string_view(text).substr(start, comma - start), "k value"));
    start = comma + 1;
  }
  return ks;
}

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0 || sgn(q.get_den()) == 0) {
    throw std::invalid_argument("bad rational '" + text + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace frontalkit::cli
