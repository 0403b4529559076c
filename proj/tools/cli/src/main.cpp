#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frontalkit/corpus.hpp"
#include "frontalkit/parse.hpp"
#include "frontalkit_cli/commands.hpp"
#include "frontalkit_cli/mesh.hpp"

namespace fc = frontalkit::cli;

namespace {

constexpr int kExitInputError = 2;
constexpr int kExitIoError = 4;

struct Options {
  std::string format = "text";
  bool timing = false;
  std::string file;
  unsigned jet_cap = frontalkit::kDefaultJetCap;
  unsigned jet = 6;
  std::size_t unknown_cap = frontalkit::kDefaultUnknownCap;
  std::string psi;
  std::string mode = "gradient";
  std::vector<std::string> generators;
  std::string vars;
  std::string lhs, rhs;
  unsigned ext = 0;
  std::string entry;
  std::string k_range = "2..3";
  std::string range = "1";
  unsigned res = 32;
  std::string out;
};

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> words;
  std::string cur;
  for (char ch : s) {
    if (ch == ' ' || ch == ',' || ch == '\t') {
      if (!cur.empty()) words.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Jacobian-squared frontal toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--timing", o.timing, "Add wall-clock time to the report");

  auto* jac = app.add_subcommand("jacobian", "Jacobian matrix, determinant, adjugate and |Jf|^2");
  jac->add_option("file", o.file, "Germ file")->required();

  auto* fr = app.add_subcommand("frontal", "Build F and its conormals and certify the frontal conditions");
  fr->add_option("file", o.file, "Germ file")->required();

  auto* mult = app.add_subcommand("multiplicity", "Dimension of the local algebra Q(f)");
  mult->add_option("file", o.file, "Germ file")->required();
  mult->add_option("--jet-cap", o.jet_cap, "Largest jet order examined")->capture_default_str();

  auto* ram = app.add_subcommand("ramify", "Jet-level ramification membership of psi");
  ram->add_option("file", o.file, "Germ file")->required();
  ram->add_option("--psi", o.psi, "Function germ")->required();
  ram->add_option("--jet", o.jet, "Jet order k (membership modulo m^(k+1))")->capture_default_str();
  ram->add_option("--mode", o.mode, "gradient or jsq")
      ->check(CLI::IsMember({"gradient", "jsq"}))
      ->capture_default_str();
  ram->add_option("--unknown-cap", o.unknown_cap, "Refuse larger systems")->capture_default_str();

  auto* gen = app.add_subcommand("generators", "Check a generator list under both membership tests");
  gen->add_option("file", o.file, "Germ file")->required();
  gen->add_option("--gen", o.generators, "Generator (repeatable)");
  gen->add_option("--jet", o.jet, "Jet order")->capture_default_str();
  gen->add_option("--unknown-cap", o.unknown_cap, "Refuse larger systems")->capture_default_str();

  auto* idn = app.add_subcommand("identity", "Exact comparison of two polynomial expressions");
  idn->add_option("--vars", o.vars, "Variable names, space or comma separated")->required();
  idn->add_option("--lhs", o.lhs)->required();
  idn->add_option("--rhs", o.rhs)->required();
  idn->add_option("--ext", o.ext, "Extension degree k for the generator c (c^k = 6)");

  auto* cor = app.add_subcommand("corpus", "Replay the normal-form reductions");
  cor->add_option("entry", o.entry, "Entry name (default: all)");
  cor->add_option("--k", o.k_range, "k values for four_k: '2..3', '2,4' or ''")->capture_default_str();
  cor->add_flag_callback("--list", [] {
    for (const auto& n : frontalkit::corpus::entry_names()) std::cout << n << "\n";
    std::exit(0);
  }, "List entry names");

  auto* ak = app.add_subcommand("akfront", "Order-of-vanishing checks on the A_k front base germ");
  ak->add_option("--k", o.k_range, "k values: '2..4', '3' or '2,5'")->capture_default_str();
  ak->add_option("--jet-cap", o.jet_cap, "Largest jet order for the multiplicity")->capture_default_str();

  auto* mesh = app.add_subcommand("mesh", "Sample a surface in R^3 and write an OBJ mesh");
  mesh->add_option("file", o.file, "Germ file (one multiplier, or a map with three components)");
  mesh->add_option("--entry", o.entry, "Use the claimed normal form of a corpus entry instead");
  mesh->add_option("--range", o.range, "Half-width r of the square [-r, r]^2")->capture_default_str();
  mesh->add_option("--res", o.res, "Grid cells per side")->capture_default_str();
  mesh->add_option("--out", o.out, "OBJ output path (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);
  const fc::Format format = o.format == "json" ? fc::Format::Json : fc::Format::Text;

  const auto start = std::chrono::steady_clock::now();
  fc::CommandResult result;
  try {
    const auto load = [&] { return fc::load_germ_file(o.file); };
    if (jac->parsed()) {
      result = fc::cmd_jacobian(load());
    } else if (fr->parsed()) {
      result = fc::cmd_frontal(load());
    } else if (mult->parsed()) {
      result = fc::cmd_multiplicity(load(), o.jet_cap);
    } else if (ram->parsed()) {
      result = fc::cmd_ramify(load(), o.psi, o.jet,
                              o.mode == "jsq" ? fc::RamifyMode::Jsq : fc::RamifyMode::Gradient,
                              o.unknown_cap);
    } else if (gen->parsed()) {
      result = fc::cmd_generators(load(), o.generators, o.jet, o.unknown_cap);
    } else if (idn->parsed()) {
      result = fc::cmd_identity(split_words(o.vars), o.lhs, o.rhs, o.ext);
    } else if (cor->parsed()) {
      std::optional<std::string> name;
      if (!o.entry.empty()) name = o.entry;
      result = fc::cmd_corpus(name, fc::parse_k_range(o.k_range));
    } else if (ak->parsed()) {
      result = fc::cmd_akfront(fc::parse_k_range(o.k_range), o.jet_cap);
    } else if (mesh->parsed()) {
      frontalkit::PolyMap F;
      if (!o.entry.empty() && !o.file.empty()) {
        throw std::invalid_argument("mesh: give either a germ file or --entry, not both");
      }
      if (!o.entry.empty()) {
        F = frontalkit::corpus::make_entry(o.entry).claimed;
      } else if (!o.file.empty()) {
        F = fc::mesh_surface(load());
      } else {
        throw std::invalid_argument("mesh: a germ file or --entry is required");
      }
      const mpq_class r = fc::parse_rational(o.range);
      if (o.out.empty()) {
        std::cout << fc::to_obj(fc::sample_surface(F, r, o.res));
        return 0;
      }
      result = fc::cmd_mesh(F, r, o.res, o.out);
    }
  } catch (const fc::GermFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const frontalkit::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  }

  if (o.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    result.report["timing_ms"] =
        std::chrono::duration<double, std::milli>(elapsed).count();
  }
  std::cout << fc::render(result.report, format);
  return result.exit_code;
}
