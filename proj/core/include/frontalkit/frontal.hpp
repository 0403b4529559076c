#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "frontalkit/germ.hpp"

namespace frontalkit {

/// Vector field along F: a polynomial n-block followed by a constant l-block.
struct Conormal {
  std::vector<Poly> head;
  std::vector<Scalar> tail;

  /// All n + l components as polynomials in the source variables.
  std::vector<Poly> components(const VarList& vars) const;
  /// Value at the origin.
  std::vector<Scalar> at_origin() const;
  std::string to_string() const;

  friend bool operator==(const Conormal& a, const Conormal& b) = default;
};

/// Result of checking the three frontal conditions.
struct CertifyReport {
  struct Annihilation {
    bool pass = true;
    // First failure: conormal index i and coordinate field index j (both zero-based)
    // together with the nonzero residual phi_i . dF/dx_j.
    std::optional<std::size_t> conormal;
    std::optional<std::size_t> direction;
    std::optional<Poly> residual;
  };
  struct NonVanishing {
    bool pass = true;
    std::vector<bool> per_conormal;
    std::vector<std::vector<Scalar>> values_at_origin;
  };
  struct Independence {
    bool pass = true;
    std::size_t rank = 0;
  };

  Annihilation condition1;
  NonVanishing condition2;
  Independence condition3;

  bool pass() const { return condition1.pass && condition2.pass && condition3.pass; }
};

/// Base germ, multipliers, the assembled map and its conormal fields.
struct FrontalPackage {
  PolyMap base;
  std::vector<Poly> multipliers;
  PolyMap map;
  std::vector<Conormal> conormals;
};

/// F = (f, mu_1 |Jf|^2, ..., mu_l |Jf|^2).
/// Throws std::invalid_argument for an empty multiplier list, a
/// non-equidimensional base or multipliers over other variables.
PolyMap build_frontal(const PolyMap& f, const std::vector<Poly>& multipliers);

/// phi_i = ( transpose((|Jf| d mu_i + 2 mu_i d|Jf|) adj(Jf)), -e_i ).
std::vector<Conormal> conormals(const PolyMap& f, const std::vector<Poly>& multipliers);

FrontalPackage make_frontal_package(const PolyMap& f, const std::vector<Poly>& multipliers);

/// Checks the frontal conditions for arbitrary candidate fields.
///
/// Condition (1) is checked on the coordinate fields d/dx_j; any vector
/// field is a polynomial combination of these, so vanishing on them
/// implies vanishing on all of theta(n). Conditions (2) and (3) are exact
/// evaluation and rank at the origin. Dimension mismatches throw
/// std::invalid_argument.
CertifyReport certify_frontal(const PolyMap& F, const std::vector<Conormal>& candidates);

}  // namespace frontalkit
