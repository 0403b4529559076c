#include "doctest.h"
#include "test_support.hpp"

using namespace fk_test;

using Status = MembershipVerdict::Status;

TEST_SUITE("ramification") {

TEST_CASE("gradient-module examples") {
  const VarList x{"x"};
  const PolyMap g2 = M(x, {"1/2*x^2"});
  const auto v = gradient(P("x^3", x), g2, 4);
  REQUIRE(v.member());
  // d(x^3) = 3x d(x^2/2).
  CHECK(v.certificate->coefficients == std::vector<Poly>{P("3*x", x)});

  // 1 = a(x) * x has no solution: the constant coefficient of a*x is 0.
  const auto no = gradient(P("x", x), g2, 3);
  CHECK(no.status == Status::NotMemberModJet);
  CHECK(no.jet_order == 3);
  CHECK_FALSE(no.certificate);

  const VarList xl{"x", "l"};
  const PolyMap g3 = M(xl, {"1/3*x^3 + l*x", "l"});
  const auto u = gradient(P("1/4*x^4 + 1/2*l*x^2", xl), g3, 5);
  REQUIRE(u.member());
  CHECK(u.certificate->coefficients == std::vector<Poly>{P("x", xl), P("-1/2*x^2", xl)});
}

TEST_CASE("jsq-plus-pullback examples") {
  const VarList xl{"x", "l"};
  const PolyMap f = M(xl, {"1/2*x^2 + l*x", "l"});
  const auto v = jsq(P("1/3*x^3 + 1/2*l*x^2", xl), f, 5);
  REQUIRE(v.member());
  CHECK(*v.certificate->mu == P("1/3*x", xl));
  const VarList tgt{"X", "L"};
  CHECK(v.certificate->eta->vars() == tgt);
  CHECK(*v.certificate->eta == P("-1/3*L*X", tgt));

  Gen g(14);
  for (int t = 0; t < 20; ++t) {
    const PolyMap h = g.germ(xl, 2, 3);
    const auto one = jsq(P("1", xl), h, 4);
    REQUIRE(one.member());
    CHECK(one.certificate->mu->is_zero());
    CHECK(*one.certificate->eta == Poly(target_variables(h), Scalar(1)));
    const Poly j = jacobian_det(h);
    const auto sq = jsq(j * j, h, 4);
    CHECK(sq.member());
  }
  const PolyMap fold = M(VarList{"x", "y"}, {"1/2*x^2 + x*y", "y"});
  const Poly j = jacobian_det(fold);
  const auto sq = jsq(j * j, fold, 4);
  REQUIRE(sq.member());
  CHECK(*sq.certificate->mu == P("1", fold.source()));
  CHECK(sq.certificate->eta->is_zero());
}

TEST_CASE("target variable naming") {
  CHECK(target_variables(M(VarList{"x", "l"}, {"x", "l"})) == VarList{"X", "L"});
  CHECK(target_variables(M(VarList{"x", "X"}, {"x", "X"})) == VarList{"X1", "X2"});
  CHECK(target_variables(M(VarList{"x"}, {"x", "x^2"})) == VarList{"X1", "X2"});
}

TEST_CASE("verify_identity") {
  const VarList v{"x", "a"};
  CHECK(verify_identity(P("(x + a)^2", v), P("2*(1/2*x^2 + a*x) + a^2", v)));
  CHECK(verify_identity(P("x*(x^2 + a)^2", v), P("5*(1/5*x^5 + 1/3*a*x^3) + a*(1/3*x^3 + a*x)", v)));
  CHECK_FALSE(verify_identity(P("x^2", v), P("x^3", v)));
}

TEST_CASE("generator lists") {
  const VarList x{"x"};
  const auto r3 = generators(M(x, {"1/3*x^3"}), {P("x^4", x), P("x^5", x)}, 6);
  CHECK(r3.all_member());
  const auto r1 = generators(PolyMap::identity(x), {}, 2);
  CHECK(r1.all_member());
  CHECK(r1.checks.empty());

  const VarList xl{"x", "l"};
  const auto r = generators(M(xl, {"1/3*x^3 + l*x", "l"}),
                            {P("1/4*x^4 + 1/2*l*x^2", xl), P("1/5*x^5 + 1/3*l*x^3", xl)}, 6);
  CHECK(r.all_member());
}

TEST_CASE("principal generator order of the squared Jacobian") {
  const VarList x{"x"};
  for (unsigned d = 1; d <= 3; ++d) {
    const PolyMap g = M(x, {"1/" + std::to_string(d) + "*x^" + std::to_string(d)});
    const Poly j = jacobian_det(g);
    CHECK((j * j).order() == 2 * (d - 1));
  }
}

TEST_CASE("unknown cap gives UNDECIDED") {
  const VarList v{"x", "y"};
  const auto u = gradient_module_membership(P("x", v), M(v, {"x", "y"}), 30, 50);
  CHECK(u.status == Status::Undecided);
  CHECK(u.unknowns > 50);
  CHECK(to_string(u.status) == std::string("UNDECIDED"));
}

TEST_CASE("arity errors") {
  const VarList v{"x", "y"};
  CHECK_THROWS_AS(gradient(P("x", v), M(v, {"x", "y", "x"}), 3), std::invalid_argument);
  CHECK_THROWS_AS(jsq(P("x", VarList{"x"}), M(v, {"x", "y"}), 3), std::invalid_argument);
}

TEST_CASE("recheck rejects tampered certificates") {
  const VarList x{"x"};
  const PolyMap g2 = M(x, {"1/2*x^2"});
  auto v = gradient(P("x^3", x), g2, 4);
  REQUIRE(v.member());
  MembershipCertificate bad = *v.certificate;
  bad.coefficients[0] = P("2*x", x);
  CHECK_FALSE(recheck(bad, P("x^3", x), g2));
}

TEST_CASE("squared Jacobian multiples lie in the ramification module") {
  Gen g(15);
  for (int t = 0; t < 40; ++t) {
    const VarList v = vars_n(static_cast<std::size_t>(g.uniform(1, 2)));
    const PolyMap f = g.germ(v, v.size(), 3);
    const Poly j = jacobian_det(f);
    const Poly psi = g.poly(v, 2) * j * j;
    const auto r = gradient(psi, f, psi.degree() + 2);
    CHECK(r.member());
  }
}

TEST_CASE("pullbacks lie in the ramification module") {
  Gen g(16);
  for (int t = 0; t < 40; ++t) {
    const VarList v = vars_n(static_cast<std::size_t>(g.uniform(1, 2)));
    const PolyMap f = g.germ(v, v.size(), 3);
    const Poly eta = g.poly(target_variables(f), 2);
    const Poly psi = substitute(eta, f.components());
    CHECK(gradient(psi, f, 5).member());
    CHECK(jsq(psi, f, 5).member());
  }
}

TEST_CASE("verdicts are deterministic and consistent across jet orders") {
  Gen g(17);
  const VarList v{"x", "y"};
  for (int t = 0; t < 25; ++t) {
    const PolyMap f = g.germ(v, 2, 3);
    const Poly psi = g.poly(v, 3, 1);
    const auto a = gradient(psi, f, 4);
    const auto b = gradient(psi, f, 4);
    CHECK(a.status == b.status);
    if (a.member()) {
      CHECK(a.certificate->coefficients == b.certificate->coefficients);
    } else {
      // Infeasible at order 4 stays infeasible at every higher order.
      CHECK(gradient(psi, f, 5).status == Status::NotMemberModJet);
    }
  }
}

}  // TEST_SUITE
