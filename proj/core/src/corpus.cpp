#include "frontalkit/corpus.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "frontalkit/parse.hpp"

namespace frontalkit::corpus {

namespace {

constexpr unsigned kMaxFamilyParameter = 12;

const VarList& plane() {
  static const VarList vars{"x", "y"};
  return vars;
}

const VarList& space3() {
  static const VarList vars{"X", "Y", "Z"};
  return vars;
}

const VarList& space5() {
  static const VarList vars{"X", "Y", "U1", "U2", "U3"};
  return vars;
}

PolyMap map_of(const VarList& vars, std::initializer_list<std::string> comps, unsigned ext = 0) {
  std::vector<Poly> out;
  for (const auto& c : comps) out.push_back(parse_poly(c, vars, ext));
  return PolyMap(vars, std::move(out));
}

std::vector<Poly> polys_of(std::initializer_list<std::string> texts) {
  std::vector<Poly> out;
  for (const auto& t : texts) out.push_back(parse_poly(t, plane()));
  return out;
}

ChainStep target(std::string label, PolyMap m) {
  return ChainStep{Side::Target, std::move(label), std::move(m)};
}

ChainStep source(std::string label, PolyMap m) {
  return ChainStep{Side::Source, std::move(label), std::move(m)};
}

const PolyMap& fold_base() {
  static const PolyMap f = map_of(plane(), {"1/2*x^2 + x*y", "y"});
  return f;
}

const PolyMap& swallowtail_base() {
  static const PolyMap f = map_of(plane(), {"1/3*x^3 + x*y", "y"});
  return f;
}

Entry fold() {
  Entry e;
  e.name = "fold";
  e.base = fold_base();
  e.multipliers = polys_of({"1"});
  e.chain = {
      target("H1", map_of(space3(), {"X - 1/2*Y^2", "Y", "Z"})),
      source("h1", map_of(plane(), {"x - y", "y"})),
      target("H2", map_of(space3(), {"2*X", "Y", "Z - 2*X"})),
  };
  e.checkpoints = {{1, "H1 o F", map_of(plane(), {"1/2*(x+y)^2", "y", "(x+y)^2"})}};
  e.claimed = map_of(plane(), {"x^2", "y", "0"});
  e.corrections = {{0, map_of(space3(), {"X + 1/2*Y^2", "Y", "Z"}),
                    "H1 = (X + 1/2*Y^2, Y, Z): the printed minus sign does not produce "
                    "the printed intermediate 1/2*(x+y)^2"}};
  return e;
}

Entry cuspidal_edge() {
  Entry e;
  e.name = "cuspidal_edge";
  e.base = fold_base();
  e.multipliers = polys_of({"x"});
  e.chain = {
      target("H1", map_of(space3(), {"X - 1/2*Y^2", "Y", "Z"})),
      source("h1", map_of(plane(), {"x - y", "y"})),
      target("H2", map_of(space3(), {"2*X", "Y", "Z - 2*X*Y"})),
  };
  e.checkpoints = {
      {1, "H1 o F", map_of(plane(), {"1/2*(x+y)^2", "y", "(x+y)^3 - y*(x+y)^2"})}};
  e.claimed = map_of(plane(), {"x^2", "y", "x^3"});
  e.corrections = {
      {0, map_of(space3(), {"X + 1/2*Y^2", "Y", "Z"}),
       "H1 = (X + 1/2*Y^2, Y, Z): same sign issue as for the fold"},
      {2, map_of(space3(), {"2*X", "Y", "Z + 2*X*Y"}),
       "H2 = (2*X, Y, Z + 2*X*Y): the cross term must be added to cancel -x^2*y"},
  };
  return e;
}

std::vector<ChainStep> folded_umbrella_chain() {
  return {
      target("H1", map_of(space3(), {"X", "Y", "Z - X^2"})),
      source("h1", map_of(plane(), {"x", "1/2*y"})),
      target("H2", map_of(space3(), {"2*X", "2*Y", "4/3*Z"})),
  };
}

std::vector<Checkpoint> folded_umbrella_checkpoints() {
  return {
      {1, "H1 o F", map_of(plane(), {"1/2*x^2 + x*y", "y", "3/4*x^4 + x^3*y"})},
      {2, "H1 o F o h1",
       map_of(plane(), {"1/2*x^2 + 1/2*x*y", "1/2*y", "3/4*x^4 + 1/2*x^3*y"})},
  };
}

Entry folded_umbrella() {
  Entry e;
  e.name = "folded_umbrella";
  e.base = fold_base();
  e.multipliers = polys_of({"x^2"});
  e.chain = folded_umbrella_chain();
  e.checkpoints = folded_umbrella_checkpoints();
  e.claimed = map_of(plane(), {"x^2 + x*y", "y", "x^4 + 2/3*x^3*y"});
  return e;
}

Entry cuspidal_crosscap_alt() {
  Entry e;
  e.name = "cuspidal_crosscap_alt";
  e.base = fold_base();
  e.multipliers = polys_of({"x^2"});
  e.chain = folded_umbrella_chain();
  e.chain.push_back(source("h2", map_of(plane(), {"1/2*(x - y)", "y"})));
  e.chain.push_back(target(
      "H3", map_of(space3(), {"4*(X + 1/4*Y^2)", "Y",
                              "-6*(Z - (X + 1/4*Y^2)^2 - 1/2*(X + 1/4*Y^2)*Y^2 - 1/16*Y^4)"})));
  e.checkpoints = folded_umbrella_checkpoints();
  e.checkpoints.push_back(
      {3, "H2 o H1 o F o h1", map_of(plane(), {"x^2 + x*y", "y", "x^4 + 2/3*x^3*y"})});
  e.claimed = map_of(plane(), {"x^2", "y", "x^3*y"});
  e.corrections = {
      {4,
       map_of(space3(), {"4*(X + 1/4*Y^2)", "Y",
                         "-6*(Z - (X + 1/4*Y^2)^2 - 1/2*(X + 1/4*Y^2)*Y^2 + 1/48*Y^4)"}),
       "H3 with +1/48*Y^4 in place of -1/16*Y^4: the printed constant leaves 1/2*y^4"}};
  return e;
}

Entry open_folded_umbrella() {
  Entry e;
  e.name = "open_folded_umbrella";
  e.base = fold_base();
  e.multipliers = polys_of({"x^2", "x^2*(x + y)", "0"});
  e.chain = {
      target("H1", map_of(space5(), {"X", "Y", "U1 - X^2", "U2 - Y*U1", "U3"})),
      source("h1", map_of(plane(), {"x", "1/2*y"})),
      target("H2", map_of(space5(), {"X", "Y", "U1", "U2 - Y*U1", "U3"})),
      target("H3", map_of(space5(), {"2*X", "2*Y", "4/3*U1", "U2", "U3"})),
  };
  e.checkpoints = {
      {1, "H1 o F",
       map_of(plane(), {"1/2*x^2 + x*y", "y", "3/4*x^4 + x^3*y", "x^5 + 2*x^4*y + x^3*y^2", "0"})},
      {2, "H1 o F o h1",
       map_of(plane(), {"1/2*x^2 + 1/2*x*y", "1/2*y", "3/4*x^4 + 1/2*x^3*y",
                        "x^5 + x^4*y + 1/4*x^3*y^2", "0"})},
      {3, "H2 o H1 o F o h1",
       map_of(plane(), {"1/2*x^2 + 1/2*x*y", "1/2*y", "3/4*x^4 + 1/2*x^3*y",
                        "x^5 + 5/8*x^4*y", "0"})},
  };
  e.claimed = map_of(plane(), {"x^2 + x*y", "y", "x^4 + 2/3*x^3*y", "x^5 + 5/8*x^4*y", "0"});
  return e;
}

Entry swallowtail() {
  Entry e;
  e.name = "swallowtail";
  e.base = swallowtail_base();
  e.multipliers = polys_of({"1"});
  e.chain = {
      target("H1", map_of(space3(), {"X", "Y", "Z - Y^2"})),
      target("H2", map_of(space3(), {"-12*X", "6*Y", "3*Z"})),
      source("h1", map_of(plane(), {"x", "1/6*y"})),
  };
  e.checkpoints = {
      {2, "H2 o H1 o F", map_of(plane(), {"-4*x^3 - 12*x*y", "6*y", "3*x^4 + 6*x^2*y"})}};
  e.claimed = map_of(plane(), {"-4*x^3 - 2*x*y", "y", "3*x^4 + x^2*y"});
  return e;
}

Entry open_swallowtail() {
  Entry e;
  e.name = "open_swallowtail";
  e.base = swallowtail_base();
  e.multipliers = polys_of({"1", "x", "0"});
  e.chain = {
      target("H1", map_of(space5(), {"X", "Y", "U1 - Y^2", "U2 - X*Y", "U3"})),
      source("h1", map_of(plane(), {"x", "1/3*y"})),
      target("H2", map_of(space5(), {"3*X", "3*Y", "U1", "U2", "U3"})),
  };
  e.checkpoints = {
      {1, "H1 o F",
       map_of(plane(), {"1/3*x^3 + x*y", "y", "x^4 + 2*x^2*y", "x^5 + 5/3*x^3*y", "0"})},
      {2, "H1 o F o h1",
       map_of(plane(), {"1/3*x^3 + 1/3*x*y", "1/3*y", "x^4 + 2/3*x^2*y", "x^5 + 5/9*x^3*y", "0"})},
  };
  e.claimed = map_of(plane(), {"x^3 + x*y", "y", "x^4 + 2/3*x^2*y", "x^5 + 5/9*x^3*y", "0"});
  return e;
}

Entry four_k(const EntryParams& params) {
  if (!params.k) throw std::invalid_argument("four_k requires a parameter k");
  const unsigned k = *params.k;
  if (k < 2) throw std::invalid_argument("four_k requires k to be an integer greater than 1");
  if (k > kMaxFamilyParameter) {
    throw std::invalid_argument("four_k parameter k=" + std::to_string(k) +
                                " outside the registered range 2.." +
                                std::to_string(kMaxFamilyParameter));
  }
  if (params.sign != 1 && params.sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const std::string ks = std::to_string(k);
  const std::string s = params.sign > 0 ? " + " : " - ";

  Entry e;
  e.name = "four_k";
  e.params = params;
  e.ext_degree = k;
  e.require_rational_result = true;
  e.base = map_of(plane(), {"1/3*x^3" + s + "x*y^" + ks, "y"});
  e.multipliers = polys_of({"1"});
  e.chain = {
      target("H1", map_of(space3(), {"X", "Y", "Z - Y^" + std::to_string(2 * k)})),
      target("H2", map_of(space3(), {"6*X", "6*Y", "3*Z"})),
      // c = 6^(1/k), so 1/c = c^(k-1)/6.
      source("h1", map_of(plane(), {"x", "1/6*c^" + std::to_string(k - 1) + "*y"}, k)),
      target("H3", map_of(space3(), {"X", "1/6*c*Y", "Z"}, k)),
  };
  e.checkpoints = {{2, "H2 o H1 o F",
                    map_of(plane(), {"2*x^3" + s + "6*x*y^" + ks, "6*y",
                                     "3*x^4" + s + "6*x^2*y^" + ks})}};
  e.claimed = map_of(plane(), {"2*x^3" + s + "x*y^" + ks, "y", "3*x^4" + s + "x^2*y^" + ks});
  return e;
}

using Factory = std::function<Entry()>;

const std::vector<std::pair<std::string, Factory>>& fixed_entries() {
  static const std::vector<std::pair<std::string, Factory>> entries = {
      {"fold", fold},
      {"cuspidal_edge", cuspidal_edge},
      {"folded_umbrella", folded_umbrella},
      {"cuspidal_crosscap_alt", cuspidal_crosscap_alt},
      {"open_folded_umbrella", open_folded_umbrella},
      {"swallowtail", swallowtail},
      {"open_swallowtail", open_swallowtail},
  };
  return entries;
}

std::vector<Poly> difference(const PolyMap& a, const PolyMap& b) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < a.target_arity(); ++i) out.push_back(a[i] - b[i]);
  return out;
}

PolyMap apply(const ChainStep& step, const PolyMap& current) {
  return step.side == Side::Target ? compose(step.map, current) : compose(current, step.map);
}

}  // namespace

std::string Entry::display_name() const {
  if (!params.k) return name;
  return name + "[k=" + std::to_string(*params.k) + "," + (params.sign > 0 ? "+" : "-") + "]";
}

const char* to_string(Path p) {
  switch (p) {
    case Path::Literal:
      return "literal";
    case Path::Corrected:
      return "corrected";
    case Path::Unreached:
      return "unreached";
  }
  return "unreached";
}

bool EntryReport::ok() const {
  return path != Path::Unreached && certification.pass() && transforms_invertible &&
         claimed_origin_preserving && rational_result_ok;
}

const std::vector<std::string>& entry_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, factory] : fixed_entries()) out.push_back(name);
    out.emplace_back("four_k");
    return out;
  }();
  return names;
}

bool is_parametrized(const std::string& name) { return name == "four_k"; }

Entry make_entry(const std::string& name, const EntryParams& params) {
  if (name == "four_k") return four_k(params);
  for (const auto& [n, factory] : fixed_entries()) {
    if (n == name) return factory();
  }
  throw std::invalid_argument("unknown corpus entry: " + name);
}

PathOutcome replay(const Entry& entry, const PolyMap& frontal, bool apply_corrections) {
  PathOutcome out;
  PolyMap current = frontal;
  auto check = [&](std::size_t done) {
    for (const auto& cp : entry.checkpoints) {
      if (cp.after_steps != done) continue;
      CheckpointOutcome o;
      o.label = cp.label;
      o.actual = current;
      o.matches = current == cp.claimed;
      o.residual = difference(current, cp.claimed);
      out.checkpoints.push_back(std::move(o));
    }
  };
  for (std::size_t i = 0; i < entry.chain.size(); ++i) {
    ChainStep step = entry.chain[i];
    if (apply_corrections) {
      for (const auto& c : entry.corrections) {
        if (c.step == i) step.map = c.replacement;
      }
    }
    current = apply(step, current);
    check(i + 1);
  }
  out.reached = current == entry.claimed;
  out.residual = difference(current, entry.claimed);
  out.result = std::move(current);
  return out;
}

EntryReport run_entry(const Entry& entry) {
  EntryReport r;
  r.name = entry.display_name();
  const FrontalPackage pkg = make_frontal_package(entry.base, entry.multipliers);
  r.frontal = pkg.map;
  r.conormals = pkg.conormals;
  r.certification = certify_frontal(pkg.map, pkg.conormals);

  r.transforms_invertible = std::all_of(entry.chain.begin(), entry.chain.end(), [](const auto& s) {
    return s.map.is_origin_preserving() && has_invertible_linear_part(s.map);
  });
  for (const auto& c : entry.corrections) {
    r.transforms_invertible = r.transforms_invertible && c.replacement.is_origin_preserving() &&
                              has_invertible_linear_part(c.replacement);
  }
  r.claimed_origin_preserving = entry.claimed.is_origin_preserving();

  r.literal = replay(entry, pkg.map, false);
  if (r.literal.reached) {
    r.path = Path::Literal;
  } else if (!entry.corrections.empty()) {
    r.corrected = replay(entry, pkg.map, true);
    for (const auto& c : entry.corrections) r.correction_notes.push_back(c.note);
    r.path = r.corrected->reached ? Path::Corrected : Path::Unreached;
  }
  if (entry.require_rational_result) {
    r.rational_result_ok = entry.claimed.has_rational_coefficients();
    const PathOutcome& used = r.path == Path::Corrected ? *r.corrected : r.literal;
    r.rational_result_ok = r.rational_result_ok && used.result.has_rational_coefficients();
  }
  return r;
}

EntryReport run_entry(const std::string& name, const EntryParams& params) {
  return run_entry(make_entry(name, params));
}

bool Summary::all_reached() const {
  return std::all_of(entries.begin(), entries.end(), [](const EntryReport& e) { return e.ok(); });
}

Summary run_all(const std::vector<unsigned>& k_range) {
  std::vector<Entry> entries;
  for (const auto& [name, factory] : fixed_entries()) entries.push_back(factory());
  for (unsigned k : k_range) {
    for (int sign : {+1, -1}) entries.push_back(four_k(EntryParams{k, sign}));
  }
  Summary s;
  for (const auto& e : entries) {
    EntryReport r = run_entry(e);
    for (const auto& cp : r.literal.checkpoints) {
      if (!cp.matches) s.discrepancies.push_back(r.name + ": literal " + cp.label + " differs from the printed intermediate");
    }
    if (!r.literal.reached) {
      s.discrepancies.push_back(r.name + ": literal chain misses the claimed form; path=" +
                                to_string(r.path));
    }
    s.entries.push_back(std::move(r));
  }
  return s;
}

PolyMap a_k_base_germ(unsigned k) {
  if (k < 2) throw std::invalid_argument("A_k front requires k >= 2");
  std::vector<std::string> names;
  for (unsigned i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
  const VarList vars(names);
  const Poly x1 = Poly::variable(vars, 0);
  Poly first = pow(x1, k + 1) * Scalar(1, static_cast<long>(k + 1));
  for (unsigned j = 2; j <= k; ++j) {
    const unsigned e = k + 1 - j;
    first += pow(x1, e) * Poly::variable(vars, j - 1) * Scalar(1, static_cast<long>(e));
  }
  std::vector<Poly> comps{first};
  for (unsigned j = 2; j <= k; ++j) comps.push_back(Poly::variable(vars, j - 1));
  return PolyMap(vars, std::move(comps));
}

bool AkFrontReport::ok() const {
  const bool mult_ok = multiplicity.value && *multiplicity.value == k + 1;
  const Poly expected = pow(Poly::variable(restricted_jacobian.vars(), 0), k);
  return mult_ok && restricted_jacobian == expected && restricted_order == k &&
         restricted_squared_order == 2 * k && (!inequality_applicable || inequality_holds);
}

AkFrontReport a_k_front_checks(unsigned k, unsigned jet_cap) {
  const PolyMap f = a_k_base_germ(k);
  AkFrontReport r;
  r.k = k;
  r.multiplicity = multiplicity(f, jet_cap);
  r.jacobian = jacobian_det(f);
  std::vector<Poly> axis{Poly::variable(f.source(), 0)};
  for (unsigned j = 1; j < k; ++j) axis.emplace_back(f.source());
  r.restricted_jacobian = substitute(r.jacobian, axis);
  r.restricted_order = r.restricted_jacobian.order();
  r.restricted_jacobian_squared = r.restricted_jacobian * r.restricted_jacobian;
  r.restricted_squared_order = r.restricted_jacobian_squared.order();
  r.inequality_applicable = k >= 3;
  // Order of |Jf_k|^2 on the x1-axis minus the multiplicity.
  const long mult = r.multiplicity.value ? static_cast<long>(*r.multiplicity.value) : 0;
  r.obstruction = static_cast<long>(r.restricted_squared_order) - mult;
  r.inequality_holds = r.obstruction > 1;
  return r;
}

}  // namespace frontalkit::corpus
