#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "frontalkit/algebra.hpp"
#include "frontalkit/frontal.hpp"
#include "frontalkit/germ.hpp"

namespace frontalkit {

/// Worked normal-form reductions, stored as data and replayed by literal
/// composition. Where the printed transforms do not reach the printed
/// result, a corrected transform is stored next to the literal one and
/// both runs are reported.
namespace corpus {

enum class Side { Source, Target };

struct ChainStep {
  Side side;
  std::string label;
  PolyMap map;
};

/// Intermediate result claimed after the first `after_steps` chain steps.
struct Checkpoint {
  std::size_t after_steps;
  std::string label;
  PolyMap claimed;
};

struct Correction {
  std::size_t step;
  PolyMap replacement;
  std::string note;
};

struct EntryParams {
  std::optional<unsigned> k;
  int sign = +1;
};

struct Entry {
  std::string name;
  EntryParams params;
  unsigned ext_degree = 0;
  PolyMap base;
  std::vector<Poly> multipliers;
  std::vector<ChainStep> chain;
  std::vector<Checkpoint> checkpoints;
  PolyMap claimed;
  std::vector<Correction> corrections;
  /// The final form must have rational coefficients even if the chain does not.
  bool require_rational_result = false;

  /// Name with parameters, e.g. "four_k[k=2,-]".
  std::string display_name() const;
};

struct CheckpointOutcome {
  std::string label;
  bool matches = false;
  PolyMap actual;
  std::vector<Poly> residual;  // actual - claimed
};

struct PathOutcome {
  bool reached = false;
  PolyMap result;
  std::vector<Poly> residual;  // result - claimed
  std::vector<CheckpointOutcome> checkpoints;
};

enum class Path { Literal, Corrected, Unreached };
const char* to_string(Path p);

struct EntryReport {
  std::string name;
  PolyMap frontal;
  std::vector<Conormal> conormals;
  CertifyReport certification;
  bool transforms_invertible = false;
  bool claimed_origin_preserving = false;
  bool rational_result_ok = true;
  PathOutcome literal;
  std::optional<PathOutcome> corrected;
  std::vector<std::string> correction_notes;
  Path path = Path::Unreached;

  /// Claimed form reached (either path) and every structural check passed.
  bool ok() const;
};

/// Names of registered entries in run order.
const std::vector<std::string>& entry_names();
bool is_parametrized(const std::string& name);

/// Builds an entry; throws std::invalid_argument for unknown names or
/// parameters outside the registered range (four_k needs 2 <= k <= 12).
Entry make_entry(const std::string& name, const EntryParams& params = {});

/// Composes the chain, optionally replacing steps by stored corrections.
PathOutcome replay(const Entry& entry, const PolyMap& frontal, bool apply_corrections);

EntryReport run_entry(const Entry& entry);
EntryReport run_entry(const std::string& name, const EntryParams& params = {});

struct Summary {
  std::vector<EntryReport> entries;
  /// One line per checkpoint or final form that the literal chain misses.
  std::vector<std::string> discrepancies;
  bool all_reached() const;
};

/// Runs every fixed entry and, for each k in `k_range`, both signs of four_k.
Summary run_all(const std::vector<unsigned>& k_range = {2, 3});

/// Base germ of the A_k front: (x1^(k+1)/(k+1) + sum_j x1^(k+1-j) x_j/(k+1-j), x2, ..., xk).
PolyMap a_k_base_germ(unsigned k);

struct AkFrontReport {
  unsigned k = 0;
  MultiplicityResult multiplicity;
  Poly jacobian;             // |Jf_k|
  Poly restricted_jacobian;  // |Jf_k|(x1, 0, ..., 0)
  unsigned restricted_order = 0;
  Poly restricted_jacobian_squared;
  unsigned restricted_squared_order = 0;
  bool inequality_applicable = false;  // k >= 3
  long obstruction = 0;                // ord(restricted |Jf_k|^2) - multiplicity
  bool inequality_holds = false;       // obstruction > 1

  /// multiplicity == k+1, restricted |Jf_k| == x1^k, and the inequality when applicable.
  bool ok() const;
};

/// Order-of-vanishing checks on the A_k front base germ; requires k >= 2.
AkFrontReport a_k_front_checks(unsigned k, unsigned jet_cap = kDefaultJetCap);

}  // namespace corpus
}  // namespace frontalkit
