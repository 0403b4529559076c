#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "frontalkit/germ.hpp"

namespace frontalkit {

inline constexpr std::size_t kDefaultUnknownCap = 20000;

/// Witnesses for membership modulo m^(k+1).
///
/// Gradient-module kind: jet_k(dpsi - sum_i a_i df_i) = 0 componentwise.
/// Jsq-plus-pullback kind: jet_k(psi - mu |Jf|^2 - eta o f) = 0, where eta
/// is a polynomial in the target variables.
struct MembershipCertificate {
  enum class Kind { GradientModule, JsqPlusPullback };

  Kind kind = Kind::GradientModule;
  unsigned jet_order = 0;
  std::vector<Poly> coefficients;  // a_1 .. a_n (gradient-module kind)
  std::optional<Poly> mu;          // source polynomial (jsq kind)
  std::optional<Poly> eta;         // target polynomial (jsq kind)
};

struct MembershipVerdict {
  enum class Status { Member, NotMemberModJet, Undecided };

  Status status = Status::Undecided;
  unsigned jet_order = 0;
  std::optional<MembershipCertificate> certificate;
  std::size_t unknowns = 0;

  bool member() const { return status == Status::Member; }
};

const char* to_string(MembershipVerdict::Status s);
const char* to_string(MembershipCertificate::Kind k);

/// Target variable names for f: upper-cased source names, or X1..Xn on a clash.
VarList target_variables(const PolyMap& f);

/// Is dpsi in the E_n-module generated by df_1, ..., df_n, modulo m^(k+1)?
///
/// Unknown coefficient polynomials a_i have degree <= k. A NotMemberModJet
/// verdict proves non-membership; Member only certifies the jet identity.
MembershipVerdict gradient_module_membership(const Poly& psi, const PolyMap& f, unsigned k,
                                             std::size_t unknown_cap = kDefaultUnknownCap);

/// Is psi in <|Jf|^2>_{E_n} + f^*(E_n), modulo m^(k+1)?
MembershipVerdict jsq_plus_pullback_membership(const Poly& psi, const PolyMap& f, unsigned k,
                                               std::size_t unknown_cap = kDefaultUnknownCap);

/// Re-checks a certificate by direct substitution, independently of the solver.
bool recheck(const MembershipCertificate& cert, const Poly& psi, const PolyMap& f);

/// Exact equality of canonical forms.
bool verify_identity(const Poly& lhs, const Poly& rhs);

struct GeneratorCheck {
  Poly generator;
  MembershipVerdict gradient;
  MembershipVerdict jsq;
};

struct GeneratorListReport {
  unsigned jet_order = 0;
  std::vector<GeneratorCheck> checks;

  /// True when every generator is a member under both tests (vacuous for none).
  bool all_member() const;
};

GeneratorListReport check_generator_list(const PolyMap& f, const std::vector<Poly>& generators,
                                         unsigned k,
                                         std::size_t unknown_cap = kDefaultUnknownCap);

}  // namespace frontalkit
