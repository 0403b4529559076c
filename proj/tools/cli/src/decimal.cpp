#include "frontalkit_cli/decimal.hpp"

#include <stdexcept>

namespace frontalkit::cli {

namespace {

mpz_class pow10(unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

mpq_class scale10(const mpq_class& q, long e) {
  if (e >= 0) return q * mpq_class(pow10(static_cast<unsigned>(e)));
  return q / mpq_class(pow10(static_cast<unsigned>(-e)));
}

// Rounds a non-negative rational to the nearest integer, ties to even.
mpz_class round_half_even(const mpq_class& v) {
  mpz_class floor_v;
  mpz_fdiv_q(floor_v.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  const mpq_class frac = v - mpq_class(floor_v);
  const int cmp_half = cmp(frac, mpq_class(1, 2));
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(floor_v.get_mpz_t()))) floor_v += 1;
  return floor_v;
}

}  // namespace

std::string format_decimal(const mpq_class& q, int digits) {
  if (digits < 1) throw std::invalid_argument("format_decimal: digits must be positive");
  if (sgn(q) == 0) return "0";
  const mpq_class a = abs(q);

  // Decimal exponent e with 10^e <= a < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  while (cmp(scale10(a, -e), 1) < 0) --e;
  while (cmp(scale10(a, -e), 10) >= 0) ++e;

  mpz_class mant = round_half_even(scale10(a, digits - 1 - e));
  if (mant == pow10(static_cast<unsigned>(digits))) {
    mant /= 10;
    ++e;
  }
  std::string ds = mant.get_str();  // exactly `digits` characters

  std::string out = sgn(q) < 0 ? "-" : "";
  auto strip = [](std::string s) {
    if (s.find('.') != std::string::npos) {
      while (!s.empty() && s.back() == '0') s.pop_back();
      if (!s.empty() && s.back() == '.') s.pop_back();
    }
    return s;
  };
  if (e < -5 || e >= digits) {
    std::string m = strip(ds.substr(0, 1) + "." + ds.substr(1));
    std::string exp = std::to_string(e < 0 ? -e : e);
    if (exp.size() < 2) exp.insert(0, "0");
    return out + m + (e < 0 ? "e-" : "e+") + exp;
  }
  if (e >= 0) {
    const auto int_len = static_cast<std::size_t>(e + 1);
    out += strip(ds.substr(0, int_len) + "." + ds.substr(int_len));
  } else {
    out += strip("0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds);
  }
  return out;
}

}  // namespace frontalkit::cli
