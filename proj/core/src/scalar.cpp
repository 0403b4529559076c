#include "frontalkit/scalar.hpp"

#include <utility>

namespace frontalkit {

namespace {

constexpr long kExtRadicand = 6;

// Multiply dense residues a, b of length k modulo c^k - 6.
std::vector<mpq_class> ext_mul(const std::vector<mpq_class>& a,
                               const std::vector<mpq_class>& b, unsigned k) {
  std::vector<mpq_class> out(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (unsigned j = 0; j < k; ++j) {
      if (sgn(b[j]) == 0) continue;
      mpq_class t = a[i] * b[j];
      unsigned e = i + j;
      if (e >= k) {
        t *= kExtRadicand;
        e -= k;
      }
      out[e] += t;
    }
  }
  return out;
}

}  // namespace

std::string to_string(const mpq_class& q) {
  // mpq_class::get_str already prints "a" or "a/b" in lowest terms.
  return q.get_str();
}

Scalar::Scalar(mpq_class v) : rational_(std::move(v)) { rational_.canonicalize(); }

Scalar::Scalar(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  rational_ = mpq_class(num, den);
  rational_.canonicalize();
}

Scalar Scalar::generator(unsigned k) {
  if (k < 2) throw std::domain_error("extension degree must be at least 2");
  std::vector<mpq_class> coeffs(k, 0);
  coeffs[1] = 1;
  return from_coefficients(k, std::move(coeffs));
}

Scalar Scalar::from_coefficients(unsigned k, std::vector<mpq_class> coeffs) {
  if (k < 2) {
    mpq_class v = 0;
    // c^i with k <= 1 is meaningless; only the constant term is accepted.
    if (coeffs.size() > 1) throw std::domain_error("no extension active");
    if (!coeffs.empty()) v = coeffs[0];
    return Scalar(v);
  }
  std::vector<mpq_class> red(k, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    mpq_class t = coeffs[i];
    std::size_t e = i;
    while (e >= k) {
      e -= k;
      t *= kExtRadicand;
    }
    red[e] += t;
  }
  Scalar s;
  s.ext_degree_ = k;
  s.rational_ = red[0];
  s.ext_.assign(red.begin() + 1, red.end());
  s.normalize();
  return s;
}

const mpq_class& Scalar::rational() const {
  if (!is_rational()) throw std::domain_error("scalar is not rational: " + to_string());
  return rational_;
}

mpq_class Scalar::coefficient(unsigned i) const {
  if (i == 0) return rational_;
  if (i - 1 < ext_.size()) return ext_[i - 1];
  return 0;
}

void Scalar::normalize() {
  for (const auto& c : ext_) {
    if (sgn(c) != 0) return;
  }
  ext_.clear();
  ext_degree_ = 0;
}

unsigned Scalar::common_degree(const Scalar& a, const Scalar& b) {
  if (a.ext_degree_ == 0) return b.ext_degree_;
  if (b.ext_degree_ == 0 || a.ext_degree_ == b.ext_degree_) return a.ext_degree_;
  throw std::domain_error("mixing extension fields of degree " +
                          std::to_string(a.ext_degree_) + " and " +
                          std::to_string(b.ext_degree_));
}

std::vector<mpq_class> Scalar::dense(unsigned k) const {
  std::vector<mpq_class> out(k, 0);
  out[0] = rational_;
  for (std::size_t i = 0; i < ext_.size(); ++i) out[i + 1] = ext_[i];
  return out;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.rational_ = -r.rational_;
  for (auto& c : r.ext_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  const unsigned k = common_degree(*this, o);
  rational_ += o.rational_;
  if (k == 0) return *this;
  ext_.resize(k - 1, 0);
  ext_degree_ = k;
  for (std::size_t i = 0; i < o.ext_.size(); ++i) ext_[i] += o.ext_[i];
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  const unsigned k = common_degree(*this, o);
  if (k == 0) {
    rational_ *= o.rational_;
    return *this;
  }
  if (o.is_rational()) {
    rational_ *= o.rational_;
    for (auto& c : ext_) c *= o.rational_;
    normalize();
    return *this;
  }
  if (is_rational()) {
    Scalar r = o;
    r *= *this;
    return *this = std::move(r);
  }
  return *this = from_coefficients(k, ext_mul(dense(k), o.dense(k), k));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) return Scalar(mpq_class(1) / rational_);
  // Solve M y = e0 where column j of M is this * c^j.
  const unsigned k = ext_degree_;
  const auto self = dense(k);
  std::vector<std::vector<mpq_class>> m(k, std::vector<mpq_class>(k + 1, 0));
  for (unsigned j = 0; j < k; ++j) {
    std::vector<mpq_class> basis(k, 0);
    basis[j] = 1;
    const auto col = ext_mul(self, basis, k);
    for (unsigned i = 0; i < k; ++i) m[i][j] = col[i];
  }
  m[0][k] = 1;
  for (unsigned c = 0; c < k; ++c) {
    unsigned p = c;
    while (p < k && sgn(m[p][c]) == 0) ++p;
    // c^k - 6 is irreducible, so the multiplication map is invertible.
    if (p == k) throw std::logic_error("singular extension multiplication");
    std::swap(m[p], m[c]);
    const mpq_class piv = m[c][c];
    for (unsigned j = c; j <= k; ++j) m[c][j] /= piv;
    for (unsigned r = 0; r < k; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      const mpq_class f = m[r][c];
      for (unsigned j = c; j <= k; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::vector<mpq_class> y(k);
  for (unsigned i = 0; i < k; ++i) y[i] = m[i][k];
  return from_coefficients(k, std::move(y));
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  return a.ext_degree_ == b.ext_degree_ && a.rational_ == b.rational_ && a.ext_ == b.ext_;
}

bool Scalar::is_compound() const {
  if (is_rational()) return false;
  int nonzero = sgn(rational_) != 0 ? 1 : 0;
  for (const auto& c : ext_) nonzero += sgn(c) != 0 ? 1 : 0;
  return nonzero > 1;
}

std::string Scalar::to_string() const {
  if (is_rational()) return frontalkit::to_string(rational_);
  // Highest power of c first, then the constant.
  std::string out;
  auto emit = [&out](const mpq_class& coeff, unsigned power) {
    if (sgn(coeff) == 0) return;
    mpq_class mag = abs(coeff);
    if (out.empty()) {
      if (sgn(coeff) < 0) out += "-";
    } else {
      out += sgn(coeff) < 0 ? " - " : " + ";
    }
    if (power == 0) {
      out += frontalkit::to_string(mag);
      return;
    }
    if (mag != 1) out += frontalkit::to_string(mag) + "*";
    out += "c";
    if (power > 1) out += "^" + std::to_string(power);
  };
  for (std::size_t i = ext_.size(); i-- > 0;) emit(ext_[i], static_cast<unsigned>(i + 1));
  emit(rational_, 0);
  return out;
}

}  // namespace frontalkit
