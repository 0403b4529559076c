#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "frontalkit/algebra.hpp"
#include "frontalkit/ramification.hpp"
#include "frontalkit_cli/germ_file.hpp"
#include "frontalkit_cli/report.hpp"

namespace frontalkit::cli {

struct CommandResult {
  Json report;
  int exit_code = 0;
};

enum class RamifyMode { Gradient, Jsq };

/// Jf, |Jf|, adj(Jf) and |Jf|^2.
CommandResult cmd_jacobian(const GermFile& g);

/// Builds F and its conormals from the map and mu blocks and certifies them.
/// Exit 0 on pass, 1 on fail.
CommandResult cmd_frontal(const GermFile& g);

/// Exit 0 when the codimension sequence stabilized, 1 otherwise.
CommandResult cmd_multiplicity(const GermFile& g, unsigned jet_cap = kDefaultJetCap);

/// Exit 0 MEMBER, 1 NOT-MEMBER-MOD-JET, 3 UNDECIDED.
CommandResult cmd_ramify(const GermFile& g, const std::string& psi, unsigned jet, RamifyMode mode,
                         std::size_t unknown_cap = kDefaultUnknownCap);

/// Both membership tests for each generator; exit 0 when all are members.
CommandResult cmd_generators(const GermFile& g, const std::vector<std::string>& generators,
                             unsigned jet, std::size_t unknown_cap = kDefaultUnknownCap);

/// Exact comparison of two expressions; exit 0 when equal.
CommandResult cmd_identity(const std::vector<std::string>& vars, const std::string& lhs,
                           const std::string& rhs, unsigned ext_degree = 0);

/// One entry (all k in the range for a parametrized name) or the whole
/// corpus when `name` is empty. Exit 0 when every claimed form is reached.
CommandResult cmd_corpus(const std::optional<std::string>& name, const std::vector<unsigned>& k_range);

/// Exit 0 when every requested k passes.
CommandResult cmd_akfront(const std::vector<unsigned>& ks, unsigned jet_cap = kDefaultJetCap);

/// Surface to mesh: F = (f, mu |Jf|^2) when the file has one multiplier,
/// otherwise the map itself when it already has three components.
PolyMap mesh_surface(const GermFile& g);

/// Samples F, writes the OBJ file and reports its size. Throws
/// std::runtime_error when the file cannot be written.
CommandResult cmd_mesh(const PolyMap& F, const mpq_class& range, unsigned resolution,
                       const std::string& out_path);

/// Accepts "", "3", "2..4" and "2,3,5".
std::vector<unsigned> parse_k_range(const std::string& text);

/// Accepts integers and fractions such as "3/2".
mpq_class parse_rational(const std::string& text);

}  // namespace frontalkit::cli
