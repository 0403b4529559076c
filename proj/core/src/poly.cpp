#include "frontalkit/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace frontalkit {

VarList::VarList(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if ((*names_)[i] == (*names_)[j]) {
        throw std::invalid_argument("duplicate variable name: " + (*names_)[i]);
      }
    }
  }
}

std::size_t VarList::index_of(const std::string& name) const {
  const auto it = std::find(names_->begin(), names_->end(), name);
  return static_cast<std::size_t>(it - names_->begin());
}

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
  Monomial m(nvars);
  m.set(index, 1);
  return m;
}

void Monomial::set(std::size_t i, std::uint32_t e) {
  degree_ = degree_ - exps_.at(i) + e;
  exps_[i] = e;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

bool GradedOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] != eb[i]) return ea[i] > eb[i];
  }
  return false;
}

namespace {

// Appends all exponent vectors of exactly `degree` in descending lex order.
void homogeneous(std::size_t nvars, std::size_t pos, std::uint32_t remaining,
                 std::vector<std::uint32_t>& cur, std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (std::uint32_t e = remaining + 1; e-- > 0;) {
    cur[pos] = e;
    homogeneous(nvars, pos + 1, remaining - e, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    out.emplace_back(std::vector<std::uint32_t>{});
    return out;
  }
  std::vector<std::uint32_t> cur(nvars, 0);
  for (unsigned d = 0; d <= max_degree; ++d) homogeneous(nvars, 0, d, cur, out);
  return out;
}

Poly::Poly(VarList vars, const Scalar& constant) : vars_(std::move(vars)) {
  add_term(Monomial(vars_.size()), constant);
}

Poly Poly::variable(const VarList& vars, std::size_t index) {
  if (index >= vars.size()) throw std::out_of_range("variable index out of range");
  return term(vars, Monomial::variable(vars.size(), index), Scalar(1));
}

Poly Poly::variable(const VarList& vars, const std::string& name) {
  const auto i = vars.index_of(name);
  if (i == vars.size()) throw std::invalid_argument("unknown variable: " + name);
  return variable(vars, i);
}

Poly Poly::term(const VarList& vars, Monomial m, const Scalar& coeff) {
  if (m.size() != vars.size()) throw std::invalid_argument("monomial arity mismatch");
  Poly p(vars);
  p.add_term(m, coeff);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Scalar Poly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

Scalar Poly::constant_term() const {
  if (terms_.empty() || terms_.begin()->first.degree() != 0) return Scalar();
  return terms_.begin()->second;
}

unsigned Poly::degree() const {
  return terms_.empty() ? 0u : terms_.rbegin()->first.degree();
}

unsigned Poly::order() const {
  return terms_.empty() ? kInfiniteOrder : terms_.begin()->first.degree();
}

bool Poly::has_rational_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_rational(); });
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Poly::require_same_vars(const Poly& o, const char* op) const {
  if (!(vars_ == o.vars_)) {
    throw std::invalid_argument(std::string("mismatched variable lists in ") + op);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_vars(o, "add");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_vars(o, "sub");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_vars(b, "mul");
  Poly r(a.vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  // Lexicographic, largest first: x^2 + y^3, x^4 + 2*x^2*y + y^2.
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    const auto ea = a->first.exponents(), eb = b->first.exponents();
    return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
  });
  std::string out;
  for (const auto* t : order) {
    const auto& [m, c] = *t;
    // Single-term coefficients carry their sign into the separator.
    const bool negative = !c.is_compound() && c.to_string().front() == '-';
    const Scalar mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += mag.is_compound() ? "(" + mag.to_string() + ")" : mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else if (mag.is_compound()) {
      out += "(" + mag.to_string() + ")*" + mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

Poly pow(const Poly& p, unsigned m) {
  Poly result(p.vars(), Scalar(1));
  Poly base = p;
  while (m > 0) {
    if (m & 1u) result = result * base;
    m >>= 1;
    if (m > 0) base = base * base;
  }
  return result;
}

Poly mul_truncated(const Poly& a, const Poly& b, unsigned max_degree) {
  if (!(a.vars() == b.vars())) throw std::invalid_argument("mismatched variable lists in mul");
  Poly r(a.vars());
  for (const auto& [ma, ca] : a.terms()) {
    if (ma.degree() > max_degree) break;
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.degree() + mb.degree() > max_degree) break;
      r.add_term(ma * mb, ca * cb);
    }
  }
  return r;
}

Poly diff(const Poly& p, std::size_t index) {
  if (index >= p.nvars()) throw std::invalid_argument("unknown variable index");
  Poly r(p.vars());
  for (const auto& [m, c] : p.terms()) {
    const auto e = m[index];
    if (e == 0) continue;
    Monomial d = m;
    d.set(index, e - 1);
    r.add_term(d, c * Scalar(static_cast<long>(e)));
  }
  return r;
}

Poly diff(const Poly& p, const std::string& var) {
  const auto i = p.vars().index_of(var);
  if (i == p.nvars()) throw std::invalid_argument("unknown variable: " + var);
  return diff(p, i);
}

Poly jet(const Poly& p, unsigned k) {
  Poly r(p.vars());
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() > k) break;
    r.add_term(m, c);
  }
  return r;
}

namespace {

const VarList& image_vars(const Poly& p, std::span<const Poly> images) {
  if (images.size() != p.nvars()) {
    throw std::invalid_argument("substitute: expected " + std::to_string(p.nvars()) +
                                " images, got " + std::to_string(images.size()));
  }
  if (images.empty()) throw std::invalid_argument("substitute: no images to infer variables");
  for (const auto& im : images) {
    if (!(im.vars() == images[0].vars())) {
      throw std::invalid_argument("substitute: images use different variable lists");
    }
  }
  return images[0].vars();
}

Poly substitute_impl(const Poly& p, std::span<const Poly> images, unsigned max_degree,
                     bool truncate) {
  const VarList& vars = image_vars(p, images);
  auto mul = [&](const Poly& a, const Poly& b) {
    return truncate ? mul_truncated(a, b, max_degree) : a * b;
  };
  // powers[i][e] = images[i]^e, grown on demand.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(vars, Scalar(1));
    while (cache.size() <= e) cache.push_back(mul(cache.back(), images[i]));
    return cache[e];
  };
  Poly result(vars);
  for (const auto& [m, c] : p.terms()) {
    Poly t(vars, c);
    for (std::size_t i = 0; i < m.size() && !t.is_zero(); ++i) {
      if (m[i] > 0) t = mul(t, power(i, m[i]));
    }
    result += t;
  }
  return truncate ? jet(result, max_degree) : result;
}

}  // namespace

Poly substitute(const Poly& p, std::span<const Poly> images) {
  return substitute_impl(p, images, 0, false);
}

Poly substitute_truncated(const Poly& p, std::span<const Poly> images, unsigned max_degree) {
  return substitute_impl(p, images, max_degree, true);
}

Scalar eval(const Poly& p, std::span<const Scalar> point) {
  if (point.size() != p.nvars()) {
    throw std::invalid_argument("eval: expected " + std::to_string(p.nvars()) +
                                " coordinates, got " + std::to_string(point.size()));
  }
  Scalar total;
  for (const auto& [m, c] : p.terms()) {
    Scalar t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::uint32_t e = 0; e < m[i]; ++e) t *= point[i];
    }
    total += t;
  }
  return total;
}

Poly rename_into(const Poly& p, const VarList& target) {
  std::vector<std::size_t> where(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) where[i] = target.index_of(p.vars()[i]);
  Poly r(target);
  for (const auto& [m, c] : p.terms()) {
    Monomial out(target.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (where[i] == target.size()) {
        throw std::invalid_argument("variable " + p.vars()[i] + " missing from target list");
      }
      out.set(where[i], m[i]);
    }
    r.add_term(out, c);
  }
  return r;
}

}  // namespace frontalkit
