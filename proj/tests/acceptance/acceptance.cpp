// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "frontalkit/algebra.hpp"
#include "frontalkit/corpus.hpp"
#include "frontalkit/frontal.hpp"
#include "frontalkit_cli/commands.hpp"
#include "frontalkit_cli/mesh.hpp"
#include "test_support.hpp"

using namespace fk_test;
namespace cp = frontalkit::corpus;
namespace fc = frontalkit::cli;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

Outcome random_frontals() {
  Outcome o;
  Gen g(1001);
  int passed = 0;
  for (int t = 0; t < 500; ++t) {
    const VarList v = vars_n(static_cast<std::size_t>(g.uniform(1, 3)));
    const PolyMap f = g.germ(v, v.size(), 3);
    std::vector<Poly> mus;
    const int l = g.uniform(1, 3);
    for (int i = 0; i < l; ++i) mus.push_back(g.poly(v, 2));
    const PolyMap F = build_frontal(f, mus);
    const auto phis = conormals(f, mus);
    // Residuals recomputed here, independently of certify_frontal.
    const PolyMatrix JF = jacobian_matrix(F);
    bool zero = true;
    for (const auto& phi : phis) {
      const auto comps = phi.components(v);
      for (std::size_t j = 0; j < v.size(); ++j) {
        Poly dot(v);
        for (std::size_t r = 0; r < comps.size(); ++r) dot += comps[r] * JF(r, j);
        zero = zero && dot.is_zero();
      }
    }
    const bool ok = zero && certify_frontal(F, phis).pass();
    passed += ok ? 1 : 0;
    o.require(ok, "random germ " + std::to_string(t) + ": " + f.to_string());
  }
  o.note(std::to_string(passed) + "/500 certified with zero residuals");
  return o;
}

Outcome adjugate_chain_rule() {
  Outcome o;
  Gen g(1002);
  int adj_ok = 0, chain_ok = 0;
  for (int t = 0; t < 200; ++t) {
    const VarList v = vars_n(static_cast<std::size_t>(g.uniform(1, 3)));
    const PolyMap f = g.germ(v, v.size(), 3);
    const PolyMatrix J = jacobian_matrix(f);
    const bool ok = adjugate(J) * J == PolyMatrix::identity(v, v.size()) * jacobian_det(f);
    adj_ok += ok ? 1 : 0;
  }
  for (int t = 0; t < 200; ++t) {
    const VarList vs = vars_n(static_cast<std::size_t>(g.uniform(1, 3)));
    const VarList vt = vars_n(static_cast<std::size_t>(g.uniform(1, 3)), "X");
    const PolyMap f = g.germ(vs, vt.size(), 3);
    const PolyMap h = g.germ(vt, static_cast<std::size_t>(g.uniform(1, 3)), 3);
    const bool ok = jacobian_matrix(compose(h, f)) == substitute(jacobian_matrix(h), f) * jacobian_matrix(f);
    chain_ok += ok ? 1 : 0;
  }
  o.require(adj_ok == 200, "adjugate identity");
  o.require(chain_ok == 200, "chain rule");
  o.note("adjugate " + std::to_string(adj_ok) + "/200, chain rule " + std::to_string(chain_ok) + "/200");
  return o;
}

Outcome jacobian_values() {
  Outcome o;
  const VarList v{"x", "y"};
  o.require(jacobian_det(M(v, {"1/2*x^2 + x*y", "y"})) == P("x + y", v), "fold");
  o.require(jacobian_det(M(v, {"1/3*x^3 + x*y", "y"})) == P("x^2 + y", v), "swallowtail");
  for (unsigned k = 2; k <= 4; ++k) {
    for (const char* s : {" + ", " - "}) {
      const std::string yk = "y^" + std::to_string(k);
      const bool ok = jacobian_det(M(v, {"1/3*x^3" + std::string(s) + "x*" + yk, "y"})) ==
                      P("x^2" + std::string(s) + yk, v);
      o.require(ok, "4_k k=" + std::to_string(k) + s);
    }
  }
  return o;
}

Outcome multiplicities() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const VarList v{"x", "y"};
  auto expect = [&](const PolyMap& f, std::size_t want, const std::string& what) {
    const auto r = multiplicity(f, 12);
    o.require(r.value == want, what + " = " + std::to_string(want));
  };
  expect(M(v, {"1/2*x^2 + x*y", "y"}), 2, "fold");
  expect(M(v, {"1/3*x^3 + x*y", "y"}), 3, "swallowtail");
  for (unsigned k = 2; k <= 4; ++k) {
    expect(M(v, {"1/3*x^3 + x*y^" + std::to_string(k), "y"}), 3, "4_k+ k=" + std::to_string(k));
    expect(M(v, {"1/3*x^3 - x*y^" + std::to_string(k), "y"}), 3, "4_k- k=" + std::to_string(k));
  }
  for (unsigned k = 2; k <= 5; ++k) expect(cp::a_k_base_germ(k), k + 1, "f_" + std::to_string(k));
  expect(PolyMap::identity(v), 1, "identity");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 30.0, "runtime under 30 s");
  std::ostringstream s;
  s.precision(3);
  s << "runtime " << secs << " s";
  o.note(s.str());
  return o;
}

Outcome corpus_forms() {
  Outcome o;
  const VarList v{"x", "y"};
  auto literal = [&](const std::string& name, const std::vector<std::string>& form) {
    const auto r = cp::run_entry(name);
    o.require(r.certification.pass(), name + " certifies");
    o.require(r.path == cp::Path::Literal && r.literal.result == M(v, form), name + " literal form");
  };
  literal("swallowtail", {"-4*x^3 - 2*x*y", "y", "3*x^4 + x^2*y"});
  literal("folded_umbrella", {"x^2 + x*y", "y", "x^4 + 2/3*x^3*y"});
  literal("open_swallowtail", {"x^3 + x*y", "y", "x^4 + 2/3*x^2*y", "x^5 + 5/9*x^3*y", "0"});
  literal("open_folded_umbrella", {"x^2 + x*y", "y", "x^4 + 2/3*x^3*y", "x^5 + 5/8*x^4*y", "0"});
  for (unsigned k : {2u, 3u}) {
    for (int sign : {+1, -1}) {
      const auto r = cp::run_entry("four_k", {k, sign});
      const std::string s = sign > 0 ? " + " : " - ";
      const std::string yk = "y^" + std::to_string(k);
      o.require(r.path == cp::Path::Literal &&
                    r.literal.result == M(v, {"2*x^3" + s + "x*" + yk, "y", "3*x^4" + s + "x^2*" + yk}) &&
                    r.rational_result_ok && r.certification.pass(),
                r.name);
    }
  }
  auto either = [&](const std::string& name, const std::vector<std::string>& form) {
    const auto r = cp::run_entry(name);
    const PolyMap want = M(v, form);
    const bool reached = (r.path == cp::Path::Literal && r.literal.result == want) ||
                         (r.path == cp::Path::Corrected && r.corrected && r.corrected->result == want);
    o.require(reached, name + " reaches " + want.to_string());
    o.note(name + " path=" + to_string(r.path));
  };
  either("fold", {"x^2", "y", "0"});
  either("cuspidal_edge", {"x^2", "y", "x^3"});
  either("cuspidal_crosscap_alt", {"x^2", "y", "x^3*y"});
  return o;
}

Outcome one_variable_generators() {
  Outcome o;
  const VarList x{"x"};
  const std::vector<std::vector<std::string>> lists{{}, {"x^3"}, {"x^4", "x^5"}};
  for (unsigned d = 1; d <= 3; ++d) {
    const PolyMap g = M(x, {"1/" + std::to_string(d) + "*x^" + std::to_string(d)});
    for (const auto& t : lists[d - 1]) {
      const Poly psi = P(t, x);
      o.require(gradient(psi, g, 6).member(), "gradient " + t + " (d=" + std::to_string(d) + ")");
      o.require(jsq(psi, g, 6).member(), "jsq " + t + " (d=" + std::to_string(d) + ")");
    }
    const Poly j = jacobian_det(g);
    o.require((j * j).order() == 2 * (d - 1), "order of |Jg|^2 for d=" + std::to_string(d));
  }
  const auto no = gradient(P("x", x), M(x, {"1/2*x^2"}), 3);
  o.require(no.status == MembershipVerdict::Status::NotMemberModJet && no.jet_order == 3,
            "x is NOT-MEMBER-MOD-JET(3) for d=2");
  return o;
}

Outcome unfolding_verification() {
  Outcome o;
  const VarList xa{"x", "a"};
  const std::vector<std::pair<std::string, std::string>> identities{
      {"(x + a)^2", "2*(1/2*x^2 + a*x) + a^2"},
      {"x*(x + a)^2", "3*(1/3*x^3 + 1/2*a*x^2) + a*(1/2*x^2 + a*x)"},
      {"(x^2 + a)^2", "4*(1/4*x^4 + 1/2*a*x^2) + a^2"},
      {"x*(x^2 + a)^2", "5*(1/5*x^5 + 1/3*a*x^3) + a*(1/3*x^3 + a*x)"},
  };
  for (std::size_t i = 0; i < identities.size(); ++i) {
    const bool ok = verify_identity(P(identities[i].first, xa), P(identities[i].second, xa));
    o.require(ok, "identity " + std::to_string(i + 1));
  }
  o.note(std::string("fourth identity balances exactly as printed: ") +
         (verify_identity(P(identities[3].first, xa), P(identities[3].second, xa)) ? "yes" : "no"));

  for (std::size_t params = 1; params <= 2; ++params) {
    std::vector<std::string> names{"x"};
    for (std::size_t i = 1; i <= params; ++i) names.push_back("l" + std::to_string(i));
    const VarList v(names);
    auto unfolding = [&](const std::string& first) {
      std::vector<std::string> comps{first};
      for (std::size_t i = 1; i <= params; ++i) comps.push_back("l" + std::to_string(i));
      return M(v, comps);
    };
    const PolyMap g2 = unfolding("1/2*x^2 + l1*x");
    const PolyMap g3 = unfolding("1/3*x^3 + l1*x");
    const auto r2 = generators(g2, {P("1/3*x^3 + 1/2*l1*x^2", v)}, 6);
    const auto r3 = generators(g3, {P("1/4*x^4 + 1/2*l1*x^2", v), P("1/5*x^5 + 1/3*l1*x^3", v)}, 6);
    for (const auto* r : {&r2, &r3}) {
      for (const auto& c : r->checks) {
        const bool ok = c.gradient.member() && c.jsq.member() &&
                        recheck(*c.gradient.certificate, c.generator, r == &r2 ? g2 : g3) &&
                        recheck(*c.jsq.certificate, c.generator, r == &r2 ? g2 : g3);
        o.require(ok, c.generator.to_string() + " with " + std::to_string(params) + " parameter(s)");
      }
    }
  }
  return o;
}

Outcome soundness_audit() {
  Outcome o;
  // Extra MEMBER verdicts from random instances on top of those already emitted above.
  Gen g(1008);
  for (int t = 0; t < 60; ++t) {
    const VarList v = vars_n(static_cast<std::size_t>(g.uniform(1, 2)));
    const PolyMap f = g.germ(v, v.size(), 3);
    const Poly j = jacobian_det(f);
    const Poly psi = g.poly(v, 2) * j * j + substitute(g.poly(target_variables(f), 2), f.components());
    gradient(psi, f, psi.degree() + 2);
    jsq(psi, f, 5);
    gradient(g.poly(v, 3, 1), f, 4);
  }
  o.require(audit().members > 0, "some MEMBER verdicts were produced");
  o.require(audit().failures == 0, "every MEMBER verdict re-checks");
  o.note(std::to_string(audit().members) + " MEMBER verdicts re-checked, " +
         std::to_string(audit().failures) + " failures");
  return o;
}

Outcome ak_front() {
  Outcome o;
  for (unsigned k = 2; k <= 4; ++k) {
    const auto r = cp::a_k_front_checks(k);
    const Poly x1k = pow(Poly::variable(r.jacobian.vars(), 0), k);
    o.require(r.restricted_jacobian == x1k, "restricted |Jf_" + std::to_string(k) + "| = x1^" + std::to_string(k));
    o.require(r.multiplicity.value == k + 1, "multiplicity of f_" + std::to_string(k));
    if (k >= 3) {
      o.require(r.inequality_applicable && r.inequality_holds && r.obstruction == static_cast<long>(k) - 1,
                "2k-(k+1) > 1 for k=" + std::to_string(k));
    }
    o.note("k=" + std::to_string(k) + ": ord |Jf|^2 on axis = " + std::to_string(r.restricted_squared_order));
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::string data = FRONTALKIT_TEST_DATA;
  auto full_run = [&] {
    std::string out;
    out += fc::render_text(fc::cmd_corpus(std::nullopt, {2, 3}).report);
    out += fc::render_text(fc::cmd_akfront({2, 3, 4, 5}).report);
    out += fc::render(fc::cmd_corpus(std::nullopt, {2, 3}).report, fc::Format::Json);
    for (const char* f : {"fold.germ", "swallowtail.germ", "four_k3_plus.germ", "degenerate.germ"}) {
      const auto g = fc::load_germ_file(data + "/" + f);
      out += fc::render_text(fc::cmd_jacobian(g).report);
      out += fc::render_text(fc::cmd_frontal(g).report);
      out += fc::render_text(fc::cmd_multiplicity(g).report);
    }
    const auto hs = fc::load_germ_file(data + "/half_square.germ");
    out += fc::render_text(fc::cmd_generators(hs, {"x^3", "x^5"}, 6).report);
    out += fc::to_obj(fc::sample_surface(fc::mesh_surface(fc::load_germ_file(data + "/swallowtail.germ")), 1, 64));
    out += fc::to_obj(fc::sample_surface(cp::make_entry("cuspidal_edge").claimed, mpq_class(3, 2), 20));
    return out;
  };
  const std::string a = full_run();
  const std::string b = full_run();
  o.require(a == b, "byte-identical reports and OBJ text");
  o.note(std::to_string(a.size()) + " bytes compared");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "construction certifies on 500 random germs", random_frontals},
      {2, "adjugate and chain-rule identities", adjugate_chain_rule},
      {3, "Jacobian determinants of the worked examples", jacobian_values},
      {4, "multiplicities of the worked examples", multiplicities},
      {5, "corpus normal forms", corpus_forms},
      {6, "one-variable generator lists", one_variable_generators},
      {7, "unfolding identities and generator lists", unfolding_verification},
      {8, "certificate soundness audit", soundness_audit},
      {9, "A_k front order of vanishing", ak_front},
      {10, "determinism of reports and meshes", determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.title;
    std::cout.precision(2);
    std::cout << std::fixed << " (" << secs << " s)\n";
    for (const auto& n : o.notes) std::cout << "        " << n << "\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
