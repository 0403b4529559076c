#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace frontalkit {

/// Exact field element: a rational number, or a residue in Q[c]/(c^k - 6).
///
/// Rationals carry no extension tag. An element of the extension field
/// whose non-constant coefficients all vanish is normalized back to a plain
/// rational, so equality never depends on how a value was produced.
/// Mixing elements of two different extension degrees throws
/// std::domain_error.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : rational_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class v);              // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);

  /// The generator c of Q[c]/(c^k - 6); requires k >= 2.
  static Scalar generator(unsigned k);

  /// Builds sum coeffs[i] * c^i reduced modulo c^k - 6.
  static Scalar from_coefficients(unsigned k, std::vector<mpq_class> coeffs);

  bool is_zero() const { return ext_.empty() && sgn(rational_) == 0; }
  bool is_one() const { return ext_.empty() && rational_ == 1; }
  bool is_rational() const { return ext_.empty(); }

  /// Extension degree k, or 0 for a plain rational.
  unsigned ext_degree() const { return ext_degree_; }

  /// Value as a rational; throws std::domain_error if not rational.
  const mpq_class& rational() const;

  /// Coefficient of c^i (i < k); for rationals only i == 0 is nonzero.
  mpq_class coefficient(unsigned i) const;

  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// True when the printed form needs parentheses before a '*'.
  bool is_compound() const;

  /// Canonical text: "3", "-1/2", or "1/6*c^2 + c" for extension values.
  std::string to_string() const;

 private:
  void normalize();
  static unsigned common_degree(const Scalar& a, const Scalar& b);
  std::vector<mpq_class> dense(unsigned k) const;

  mpq_class rational_{0};
  // Coefficients of c^1 .. c^(k-1); empty iff the value is rational.
  std::vector<mpq_class> ext_;
  unsigned ext_degree_ = 0;
};

std::string to_string(const mpq_class& q);

}  // namespace frontalkit
