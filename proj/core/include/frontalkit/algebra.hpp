#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "frontalkit/germ.hpp"

namespace frontalkit {

inline constexpr unsigned kDefaultJetCap = 12;

struct MultiplicityResult {
  /// dim Q(f), when the codimension sequence stabilized by the cap.
  std::optional<std::size_t> value;
  /// Last jet order examined.
  unsigned jet_order = 0;
  /// codims[k] = dim of polynomials of degree <= k modulo the jet-k ideal span.
  std::vector<std::size_t> codimensions;

  bool stabilized() const { return value.has_value(); }
};

/// Codimension of jet_k(<f_1, ..., f_p>) in the space of k-jets.
std::size_t jet_codimension(const PolyMap& f, unsigned k);

/// dim_R Q(f) via jet-truncated linear algebra.
///
/// For k = 0, 1, ... the codimension of the jet-k ideal is computed; the
/// first k with codim(k) == codim(k+1) gives the answer (then m^(k+1) lies
/// in the ideal by Nakayama's lemma). Germs that do not stabilize by
/// `k_max` are reported without a value.
MultiplicityResult multiplicity(const PolyMap& f, unsigned k_max = kDefaultJetCap);

/// Whether multiplicity() stabilizes by k_max. A "false" is only evidence,
/// not a proof, that f is not finite.
bool is_finite_up_to(const PolyMap& f, unsigned k_max = kDefaultJetCap);

}  // namespace frontalkit
