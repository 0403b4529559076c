#include <filesystem>
#include <functional>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "frontalkit_cli/commands.hpp"
#include "frontalkit_cli/decimal.hpp"
#include "frontalkit_cli/mesh.hpp"
#include "test_support.hpp"

using namespace fk_test;
namespace fc = frontalkit::cli;

namespace {

fc::GermFile data(const std::string& name) {
  return fc::load_germ_file(std::string(FRONTALKIT_TEST_DATA) + "/" + name);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("germ file parsing") {
  const fc::GermFile g = fc::parse_germ_file(
      "# comment\nvars: x y\next: 3\nmap:\n  f2 = y   # trailing\n  f1 = 1/3*x^3 + x*y^3\nmu:\n  m1 = c\n");
  CHECK(g.vars == VarList{"x", "y"});
  CHECK(g.ext_degree == 3);
  CHECK(g.map == M(g.vars, {"1/3*x^3 + x*y^3", "y"}));
  REQUIRE(g.multipliers.size() == 1);
  CHECK(g.multipliers[0] == Poly(g.vars, Scalar::generator(3)));

  auto line_of = [](const char* text) {
    try {
      fc::parse_germ_file(text);
    } catch (const fc::GermFileError& e) {
      return e.line();
    }
    return std::size_t{999};
  };
  CHECK(line_of("vars: x\nmap:\n f1 = 2x\n") == 3);
  CHECK(line_of("vars: x\nmap:\n f1 = x + 1\n") == 3);
  CHECK(line_of("vars: x\nmap:\n f2 = x\n") == 3);
  CHECK(line_of("vars: x\nf1 = x\n") == 2);
  CHECK(line_of("vars: x x\nmap:\n f1 = x\n") == 1);
  CHECK(line_of("vars: x\nweird: 1\n") == 2);
  CHECK(line_of("map:\n f1 = x\n") == 0);
  CHECK(line_of("vars: x\next: 1\nmap:\n f1 = x\n") == 2);
  CHECK_THROWS_AS(fc::load_germ_file("/nonexistent/file.germ"), fc::GermFileError);
}

TEST_CASE("decimal rendering") {
  CHECK(fc::format_decimal(0) == "0");
  CHECK(fc::format_decimal(mpq_class(2, 3)) == "0.666666666667");
  CHECK(fc::format_decimal(mpq_class(-1, 3)) == "-0.333333333333");
  CHECK(fc::format_decimal(mpq_class(3)) == "3");
  CHECK(fc::format_decimal(mpq_class(-5, 2)) == "-2.5");
  CHECK(fc::format_decimal(mpq_class(1, 1000000)) == "1e-06");
  CHECK(fc::format_decimal(mpq_class(1, 100000)) == "0.00001");
  CHECK(fc::format_decimal(mpq_class("1000000000000")) == "1e+12");
  CHECK(fc::format_decimal(mpq_class("999999999999")) == "999999999999");
  // Ties go to the even neighbour.
  CHECK(fc::format_decimal(mpq_class(25, 1), 1) == "2e+01");
  CHECK(fc::format_decimal(mpq_class(35, 1), 1) == "4e+01");
  CHECK(fc::format_decimal(mpq_class(125, 100), 2) == "1.2");
  CHECK(fc::format_decimal(mpq_class(135, 100), 2) == "1.4");
  CHECK(fc::format_decimal(mpq_class(9999, 1000), 3) == "10");
}

TEST_CASE("k ranges and rationals") {
  CHECK(fc::parse_k_range("").empty());
  CHECK(fc::parse_k_range("3") == std::vector<unsigned>{3});
  CHECK(fc::parse_k_range("2..4") == std::vector<unsigned>{2, 3, 4});
  CHECK(fc::parse_k_range("2,5") == std::vector<unsigned>{2, 5});
  CHECK_THROWS_AS(fc::parse_k_range("4..2"), std::invalid_argument);
  CHECK_THROWS_AS(fc::parse_k_range("a"), std::invalid_argument);
  CHECK(fc::parse_rational("3/6") == mpq_class(1, 2));
  CHECK_THROWS_AS(fc::parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(fc::parse_rational("x"), std::invalid_argument);
}

TEST_CASE("text rendering") {
  fc::Json j;
  j["a"] = "x + y";
  j["b"]["c"] = true;
  j["list"] = {"1", "2"};
  j["empty"] = fc::Json::array();
  CHECK(fc::render_text(j) == "a = x + y\nb.c = true\nlist[1] = 1\nlist[2] = 2\nempty = []\n");
}

TEST_CASE("jacobian command") {
  CHECK(fc::cmd_jacobian(data("fold.germ")).report["|Jf|"] == "x + y");
  CHECK(fc::cmd_jacobian(data("identity.germ")).report["|Jf|"] == "1");
  CHECK(fc::cmd_jacobian(data("four_k3_plus.germ")).report["|Jf|"] == "x^2 + y^3");
  CHECK(fc::cmd_jacobian(data("swallowtail.germ")).report["|Jf|"] == "x^2 + y");
}

TEST_CASE("frontal command") {
  const auto fold = fc::cmd_frontal(data("fold.germ"));
  CHECK(fold.exit_code == 0);
  CHECK(fold.report["conormals"]["phi1"] == "(2, 2*y, -1)");
  CHECK(fc::render_text(fold.report).find("phi1 = (2, 2*y, -1)") != std::string::npos);
  CHECK(fc::cmd_frontal(data("degenerate.germ")).exit_code == 0);
  CHECK(fc::cmd_frontal(data("swallowtail.germ")).exit_code == 0);
  CHECK_THROWS_AS(fc::cmd_frontal(data("half_square.germ")), std::invalid_argument);
}

TEST_CASE("multiplicity and ramify commands") {
  const auto m = fc::cmd_multiplicity(data("fold.germ"));
  CHECK(m.report["multiplicity"] == 2);
  CHECK(m.exit_code == 0);

  const auto r = fc::cmd_ramify(data("half_square.germ"), "x^3", 4, fc::RamifyMode::Gradient);
  CHECK(r.exit_code == 0);
  CHECK(r.report["status"] == "MEMBER");
  CHECK(r.report["recheck"] == true);
  CHECK(fc::render_text(r.report).find("a1 = 3*x") != std::string::npos);

  CHECK(fc::cmd_ramify(data("half_square.germ"), "x", 3, fc::RamifyMode::Gradient).exit_code == 1);
  CHECK(fc::cmd_ramify(data("fold.germ"), "x", 40, fc::RamifyMode::Jsq, 10).exit_code == 3);
  CHECK_THROWS_AS(fc::cmd_ramify(data("fold.germ"), "q", 3, fc::RamifyMode::Jsq), ParseError);
}

TEST_CASE("corpus, akfront, identity and generators commands") {
  const auto all = fc::cmd_corpus(std::nullopt, {2, 3});
  CHECK(all.exit_code == 0);
  CHECK(all.report["entries"].size() == 11);
  CHECK(all.report["status"] == "ALL-REACHED");
  CHECK(fc::cmd_corpus(std::nullopt, {}).report["entries"].size() == 7);
  CHECK(fc::cmd_corpus(std::string("four_k"), {2}).report["entries"].size() == 2);
  CHECK(fc::cmd_corpus(std::string("fold"), {}).report["entries"][0]["path"] == "corrected");
  CHECK_THROWS_AS(fc::cmd_corpus(std::string("four_k"), {1}), std::invalid_argument);

  const auto ak = fc::cmd_akfront({2, 3, 4});
  CHECK(ak.exit_code == 0);
  CHECK(ak.report["results"][1]["restricted_|Jf|"] == "x1^3");

  CHECK(fc::cmd_identity({"x", "a"}, "(x + a)^2", "2*(1/2*x^2 + a*x) + a^2").exit_code == 0);
  CHECK(fc::cmd_identity({"x"}, "x^2", "x^3").exit_code == 1);

  const auto gen = fc::cmd_generators(data("half_square.germ"), {"x^3"}, 6);
  CHECK(gen.exit_code == 0);
}

TEST_CASE("JSON reports carry rationals as strings") {
  const auto r = fc::cmd_frontal(data("swallowtail.germ"));
  std::function<void(const fc::Json&)> walk = [&](const fc::Json& j) {
    CHECK_FALSE(j.is_number_float());
    if (j.is_structured()) {
      for (const auto& c : j) walk(c);
    }
  };
  walk(r.report);
  walk(fc::cmd_corpus(std::nullopt, {2}).report);
  const auto gen = fc::cmd_generators(data("half_square.germ"), {"x^3"}, 6);
  CHECK(gen.report["generators"][0]["jsq"]["witness"]["mu"].is_string());
}

TEST_CASE("mesh sampling") {
  const VarList v{"x", "y"};
  const fc::Mesh m = fc::sample_surface(M(v, {"x^2", "y", "x^3"}), 1, 2);
  CHECK(m.vertices.size() == 9);
  CHECK(m.faces.size() == 8);
  const std::string obj = fc::to_obj(m);
  CHECK(obj.find("v 0 0 0\n") != std::string::npos);
  CHECK(obj.rfind("f 5 9 8\n") != std::string::npos);

  const PolyMap sw = fc::mesh_surface(data("swallowtail.germ"));
  CHECK(fc::sample_surface(sw, 1, 64).vertices.size() == 4225);

  CHECK_THROWS_AS(fc::sample_surface(M(v, {"x", "y"}), 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(fc::sample_surface(sw, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(fc::sample_surface(sw, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(fc::sample_surface(M(v, {"c*x", "y", "x"}, 2), 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(fc::mesh_surface(data("half_square.germ")), std::invalid_argument);
}

TEST_CASE("mesh files are byte-identical across runs") {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string a = (dir / "frontalkit_mesh_a.obj").string();
  const std::string b = (dir / "frontalkit_mesh_b.obj").string();
  const PolyMap sw = fc::mesh_surface(data("swallowtail.germ"));
  CHECK(fc::cmd_mesh(sw, mpq_class(3, 2), 16, a).report["faces"] == 512);
  fc::cmd_mesh(sw, mpq_class(3, 2), 16, b);
  CHECK(slurp(a) == slurp(b));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  CHECK_THROWS_AS(fc::cmd_mesh(sw, 1, 2, "/nonexistent-dir/x.obj"), std::runtime_error);
}

}  // TEST_SUITE
