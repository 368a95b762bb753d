#include "lapint/proposition_cases.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "lapint/cases_data.hpp"
#include "lapint/roots.hpp"

namespace lapint {

namespace {

using nlohmann::json;

Params parse_params(const json& j, bool skip_reason = false) {
  Params out;
  for (const auto& [k, v] : j.items()) {
    if (skip_reason && k == "reason") continue;
    out[k] = v.get<long>();
  }
  return out;
}

ParamRange parse_range(const json& j) {
  ParamRange out;
  for (const auto& [k, v] : j.items()) {
    std::optional<long> hi;
    if (!v.at(1).is_null()) hi = v.at(1).get<long>();
    out[k] = {v.at(0).get<long>(), hi};
  }
  return out;
}

SignClaim parse_claim(const json& j) {
  SignClaim c;
  c.label = j.value("label", "");
  c.range = parse_range(j.at("range"));
  if (j.contains("exclude")) {
    for (const auto& e : j.at("exclude")) c.exclude.emplace_back(parse_params(e, true), e.value("reason", ""));
  }
  for (const auto& p : j.at("points")) {
    PointClaim pc;
    pc.at = parse_rational(p.at("at").get<std::string>());
    pc.sign = p.at("sign").get<int>();
    if (p.contains("printed")) pc.printed = p.at("printed").get<std::string>();
    if (p.contains("approximate")) pc.approximate = p.at("approximate").get<std::string>();
    c.points.push_back(std::move(pc));
  }
  c.lo = parse_rational(j.at("interval").at(0).get<std::string>());
  c.hi = parse_rational(j.at("interval").at(1).get<std::string>());
  return c;
}

ClosedForm parse_closed_form(const json& j) {
  ClosedForm f;
  f.label = j.at("label").get<std::string>();
  f.fixed = parse_params(j.at("fixed"));
  if (j.contains("range")) f.range = parse_range(j.at("range"));
  if (j.contains("printed_identity")) f.printed_identity = j.at("printed_identity").get<std::string>();
  if (j.contains("printed_roots")) f.printed_roots = j.at("printed_roots").get<std::vector<std::string>>();
  if (j.contains("printed_spectrum")) {
    for (const auto& e : j.at("printed_spectrum")) {
      f.printed_spectrum.emplace_back(e.at(0).get<std::string>(), e.at(1).get<unsigned>());
    }
  }
  if (j.contains("bracket")) {
    const auto& b = j.at("bracket");
    f.bracket = std::array<std::string, 3>{b.at("lower").get<std::string>(), b.at("radicand").get<std::string>(),
                                           b.at("upper").get<std::string>()};
  }
  return f;
}

struct Registry {
  std::vector<PropositionCase> cases;
  std::vector<SuspectedTypo> typos;
  std::vector<PrintedBlock> blocks;
};

const Registry& registry() {
  static const Registry reg = [] {
    Registry r;
    const json doc = json::parse(detail::kPropositionCasesJson);
    for (const auto& j : doc.at("cases")) {
      PropositionCase c;
      c.id = j.at("id").get<std::string>();
      c.parameters = j.at("parameters").get<std::vector<std::string>>();
      c.hub_adjacent = j.at("hub_adjacent").get<bool>();
      c.p3 = j.at("structure").at("p3").get<std::string>();
      c.p4 = j.at("structure").at("p4").get<std::string>();
      c.long_path = j.at("structure").at("long_path").get<std::size_t>();
      c.printed_matrix = j.at("matrix").get<std::vector<std::vector<std::string>>>();
      c.printed_polynomial = j.at("printed_polynomial").get<std::string>();
      if (j.contains("variable_aliases")) {
        c.variable_aliases = j.at("variable_aliases").get<std::map<std::string, std::string>>();
      }
      for (const auto& cl : j.at("claims")) c.claims.push_back(parse_claim(cl));
      if (j.contains("direct_checks")) {
        for (const auto& d : j.at("direct_checks")) c.direct_checks.push_back(parse_params(d));
      }
      if (j.contains("closed_forms")) {
        for (const auto& f : j.at("closed_forms")) c.closed_forms.push_back(parse_closed_form(f));
      }
      r.cases.push_back(std::move(c));
    }
    for (const auto& j : doc.at("suspected_typos")) {
      SuspectedTypo t;
      t.case_id = j.at("case").get<std::string>();
      const std::string kind = j.at("kind").get<std::string>();
      if (kind == "coefficient") {
        t.kind = TypoKind::coefficient;
        t.power = j.at("power").get<unsigned>();
      } else if (kind == "matrix_entry") {
        t.kind = TypoKind::matrix_entry;
        for (const auto& e : j.at("entries")) t.entries.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
      } else if (kind == "claim_value") {
        t.kind = TypoKind::claim_value;
        t.at = parse_rational(j.at("at").get<std::string>());
      } else {
        throw std::logic_error("case registry: unknown typo kind " + kind);
      }
      t.printed = j.at("printed").get<std::string>();
      if (j.contains("corrected")) t.corrected = j.at("corrected").get<std::string>();
      t.note = j.value("note", "");
      r.typos.push_back(std::move(t));
    }
    for (const auto& j : doc.at("printed_blocks")) {
      PrintedBlock b;
      b.name = j.at("name").get<std::string>();
      const std::string kind = j.at("kind").get<std::string>();
      if (kind == "path_interior") {
        b.kind = PrintedBlock::Kind::path_interior;
        b.order = j.at("order").get<std::size_t>();
        b.printed = j.at("printed").get<std::vector<std::vector<std::string>>>();
      } else if (kind == "coupling") {
        b.kind = PrintedBlock::Kind::coupling;
        b.hub_adjacent = j.at("hub_adjacent").get<bool>();
        b.path_order = j.at("path_order").get<std::size_t>();
        b.printed = {{j.at("printed").get<std::string>()}};
      } else {
        throw std::logic_error("case registry: unknown block kind " + kind);
      }
      b.note = j.value("note", "");
      r.blocks.push_back(std::move(b));
    }
    return r;
  }();
  return reg;
}

bool coefficient_registered(const std::string& id, unsigned power) {
  for (const auto& t : registry().typos) {
    if (t.case_id == id && t.kind == TypoKind::coefficient && t.power == power) return true;
  }
  return false;
}

bool entry_registered(const std::string& id, std::size_t i, std::size_t j) {
  for (const auto& t : registry().typos) {
    if (t.case_id != id || t.kind != TypoKind::matrix_entry) continue;
    if (std::find(t.entries.begin(), t.entries.end(), std::pair{i, j}) != t.entries.end()) return true;
  }
  return false;
}

bool claim_registered(const std::string& id, const Rational& at) {
  for (const auto& t : registry().typos) {
    if (t.case_id == id && t.kind == TypoKind::claim_value && t.at == at) return true;
  }
  return false;
}

long count_of(const std::string& expr, const Params& p) {
  if (expr == "0") return 0;
  auto it = p.find(expr);
  if (it == p.end()) throw ParameterOutOfRange("missing parameter " + expr);
  return it->second;
}

std::map<std::string, Integer> as_integers(const Params& p) {
  std::map<std::string, Integer> out;
  for (const auto& [k, v] : p) out[k] = Integer(v);
  return out;
}

std::size_t hub_degree(const PropositionCase& c, const Params& p) {
  return static_cast<std::size_t>(count_of(c.p3, p) + count_of(c.p4, p)) + (c.hub_adjacent ? 1 : 0) +
         (c.long_path > 0 ? 1 : 0);
}

void check_params(const PropositionCase& c, const Params& p) {
  for (const auto& name : c.parameters) {
    auto it = p.find(name);
    if (it == p.end()) throw ParameterOutOfRange(c.id + ": parameter " + name + " is required");
    if (it->second < 0) throw ParameterOutOfRange(c.id + ": parameter " + name + " must be nonnegative");
  }
  for (const auto& [k, v] : p) {
    if (std::find(c.parameters.begin(), c.parameters.end(), k) == c.parameters.end()) {
      throw ParameterOutOfRange(c.id + ": unexpected parameter " + k);
    }
  }
}

IntMatrix evaluate_unchecked(const PropositionCase& c, const Params& p, Transcription mode) {
  check_params(c, p);
  return evaluate_matrix(build_quotient(c, mode), as_integers(p));
}

// All points of a range, capped at grid_max.
std::vector<Params> grid(const ParamRange& range, const Params& fixed, long grid_max, const ParamRange& window = {}) {
  std::vector<Params> out{fixed};
  for (const auto& [name, declared] : range) {
    auto bounds = declared;
    if (auto w = window.find(name); w != window.end()) {
      bounds.first = std::max(bounds.first, w->second.first);
      if (w->second.second) bounds.second = std::min(bounds.second.value_or(*w->second.second), *w->second.second);
    }
    const long hi = std::min(bounds.second.value_or(grid_max), grid_max);
    std::vector<Params> next;
    for (const auto& base : out) {
      for (long v = bounds.first; v <= hi; ++v) {
        Params q = base;
        q[name] = v;
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

UPoly instantiate(const MPoly& poly, const Params& p) {
  return UPoly::from_mpoly(poly.evaluate_partial(as_integers(p)).compact());
}

// den^deg * p(num/den), an integer polynomial in the parameters.
MPoly scaled_value(const MPoly& poly, const Rational& at, Integer& denominator) {
  const unsigned deg = poly.degree_in("λ");
  const Integer num = at.get_num();
  const Integer den = at.get_den();
  MPoly out;
  Integer num_pow = 1;
  for (unsigned k = 0; k <= deg; ++k) {
    Integer den_pow;
    mpz_pow_ui(den_pow.get_mpz_t(), den.get_mpz_t(), deg - k);
    out += poly.coefficient("λ", k) * MPoly(num_pow * den_pow);
    num_pow *= num;
  }
  mpz_pow_ui(denominator.get_mpz_t(), den.get_mpz_t(), deg);
  return out.compact();
}

using Monomial = std::map<std::string, unsigned>;

std::map<Monomial, Rational> rational_terms(const MPoly& scaled, const Integer& denominator) {
  std::map<Monomial, Rational> out;
  const auto& vars = scaled.variables();
  for (const auto& [exps, coeff] : scaled.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] > 0) m[vars[i]] = exps[i];
    }
    Rational q(coeff, denominator);
    q.canonicalize();
    out[m] = q;
  }
  return out;
}

std::string render_terms(const MPoly& scaled, const Integer& denominator) {
  if (scaled.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& vars = scaled.variables();
  for (const auto& [exps, coeff] : scaled.terms()) {
    Rational q(coeff, denominator);
    q.canonicalize();
    if (first) {
      if (q < 0) os << "-";
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    first = false;
    Rational mag = abs(q);
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      factors.push_back(exps[i] == 1 ? vars[i] : vars[i] + "^" + std::to_string(exps[i]));
    }
    if (factors.empty() || mag != 1) factors.insert(factors.begin(), to_string(mag));
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

// "-0.23s^2 - 0.84st + 1.33": signed decimal coefficients times monomials in single letters.
std::map<Monomial, Rational> parse_decimal_terms(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  std::map<Monomial, Rational> out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sgn = 1;
    if (s[i] == '+' || s[i] == '-') sgn = s[i++] == '-' ? -1 : 1;
    std::size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) ++i;
    Rational coeff = start == i ? Rational(1) : parse_rational(s.substr(start, i - start));
    Monomial m;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      std::string var(1, s[i++]);
      unsigned e = 1;
      if (i < s.size() && s[i] == '^') {
        std::size_t e0 = ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        e = static_cast<unsigned>(std::stoul(s.substr(e0, i - e0)));
      }
      m[var] += e;
    }
    if (start == i) throw std::invalid_argument("malformed approximate expression: " + text);
    out[m] += sgn * coeff;
  }
  return out;
}

bool approximation_consistent(const std::map<Monomial, Rational>& exact, const std::map<Monomial, Rational>& approx) {
  const Rational tol(1, 100);
  std::set<Monomial> keys;
  for (const auto& [m, _] : exact) keys.insert(m);
  for (const auto& [m, _] : approx) keys.insert(m);
  for (const auto& m : keys) {
    Rational a = exact.contains(m) ? exact.at(m) : Rational(0);
    Rational b = approx.contains(m) ? approx.at(m) : Rational(0);
    if (abs(a - b) > tol) return false;
  }
  return true;
}

Integer eval_integer(const std::string& expr, const Params& p) {
  return MPoly::parse(expr).evaluate_partial(as_integers(p)).constant_value();
}

std::string spectrum_token(const RealRoot& r) {
  if (r.is_integer()) return r.where.lo.get_num().get_str();
  return to_decimal(r.where.midpoint(), 2);
}

}  // namespace

std::string to_string(const Params& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += ",";
    out += k + "=" + std::to_string(v);
  }
  return out;
}

const std::vector<PropositionCase>& proposition_cases() { return registry().cases; }
const std::vector<SuspectedTypo>& suspected_typos() { return registry().typos; }
const std::vector<PrintedBlock>& printed_blocks() { return registry().blocks; }

const PropositionCase& find_case(std::string_view id) {
  for (const auto& c : registry().cases) {
    if (c.id == id) return c;
  }
  throw UnknownCase("unknown proposition case '" + std::string(id) + "'");
}

PolyMatrix build_quotient(const PropositionCase& c, Transcription mode) {
  const std::size_t n = c.dimension();
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = MPoly::parse(c.printed_matrix[i][j]);
  }
  if (mode == Transcription::corrected) {
    for (const auto& t : registry().typos) {
      if (t.case_id != c.id || t.kind != TypoKind::matrix_entry) continue;
      for (auto [i, j] : t.entries) m(i, j) = MPoly::parse(*t.corrected);
    }
  }
  return m;
}

IntMatrix build_quotient(const PropositionCase& c, const Params& p, Transcription mode) {
  check_params(c, p);
  if (hub_degree(c, p) < 3) {
    throw ParameterOutOfRange(c.id + " at " + to_string(p) + ": hubs have degree " +
                              std::to_string(hub_degree(c, p)) + ", outside the two-hub family");
  }
  return evaluate_unchecked(c, p, mode);
}

Graph case_graph(const PropositionCase& c, const Params& p) {
  check_params(c, p);
  const long s = count_of(c.p3, p);
  const long t = count_of(c.p4, p);
  std::vector<Edge> e;
  if (c.hub_adjacent) e.emplace_back(0, 1);
  Vertex next = 2;
  for (long i = 0; i < s; ++i, ++next) {
    e.emplace_back(0, next);
    e.emplace_back(next, 1);
  }
  for (long i = 0; i < t; ++i, next += 2) {
    e.emplace_back(0, next);
    e.emplace_back(next, next + 1);
    e.emplace_back(next + 1, 1);
  }
  if (c.long_path > 0) {
    Vertex prev = 0;
    for (std::size_t k = 0; k + 2 < c.long_path; ++k, ++next) {
      e.emplace_back(prev, next);
      prev = next;
    }
    e.emplace_back(prev, 1);
  }
  return Graph::from_edges(next, e);
}

FamilyConfig case_config(const PropositionCase& c, const Params& p) {
  check_params(c, p);
  std::vector<std::size_t> paths(static_cast<std::size_t>(count_of(c.p3, p)), 3);
  paths.insert(paths.end(), static_cast<std::size_t>(count_of(c.p4, p)), 4);
  if (c.long_path > 0) paths.push_back(c.long_path);
  return FamilyConfig::g2(c.hub_adjacent, paths, {}, {}).normalized();
}

std::vector<std::size_t> live_cells(const PropositionCase& c, const Params& p) {
  std::vector<std::size_t> out{0, 1};
  std::size_t row = 2;
  if (c.p3 != "0") {
    if (count_of(c.p3, p) > 0) out.push_back(row);
    ++row;
  }
  if (c.p4 != "0") {
    if (count_of(c.p4, p) > 0) {
      out.push_back(row);
      out.push_back(row + 1);
    }
    row += 2;
  }
  while (row < c.dimension()) out.push_back(row++);
  return out;
}

Partition case_partition(const PropositionCase& c, const Params& p) {
  check_params(c, p);
  const auto s = static_cast<std::size_t>(count_of(c.p3, p));
  const auto t = static_cast<std::size_t>(count_of(c.p4, p));
  std::vector<std::vector<std::size_t>> cells{{0}, {1}};
  std::vector<std::size_t> mids;
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
  for (std::size_t i = 0; i < s; ++i) mids.push_back(2 + i);
  for (std::size_t i = 0; i < t; ++i) {
    first.push_back(2 + s + 2 * i);
    second.push_back(3 + s + 2 * i);
  }
  for (auto* cell : {&mids, &first, &second}) {
    if (!cell->empty()) cells.push_back(*cell);
  }
  const std::size_t base = 2 + s + 2 * t;
  for (std::size_t k = 0; k + 2 < c.long_path; ++k) cells.push_back({base + k});
  return Partition(std::move(cells));
}

PolyMatrix derive_quotient(const PropositionCase& c) {
  auto observe = [&](const Params& p) {
    const Graph g = case_graph(c, p);
    return quotient_matrix(laplacian(g), case_partition(c, p));
  };
  const std::size_t n = c.dimension();
  PolyMatrix out(n, n);
  std::vector<Params> checks;
  if (c.parameters.size() == 1) {
    const std::string& a = c.parameters[0];
    const MPoly x = MPoly::variable(a);
    const IntMatrix m1 = observe({{a, 1}});
    const IntMatrix m2 = observe({{a, 2}});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) = MPoly(m1(i, j)) + MPoly(Integer(m2(i, j) - m1(i, j))) * (x - MPoly(1));
      }
    }
    checks = {{{a, 3}}, {{a, 4}}};
  } else if (c.parameters.size() == 2) {
    const std::string& a = c.parameters[0];
    const std::string& b = c.parameters[1];
    const MPoly x = MPoly::variable(a) - MPoly(1);
    const MPoly y = MPoly::variable(b) - MPoly(1);
    const IntMatrix m11 = observe({{a, 1}, {b, 1}});
    const IntMatrix m21 = observe({{a, 2}, {b, 1}});
    const IntMatrix m12 = observe({{a, 1}, {b, 2}});
    const IntMatrix m22 = observe({{a, 2}, {b, 2}});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Integer e11 = m11(i, j);
        out(i, j) = MPoly(e11) + MPoly(Integer(m21(i, j) - e11)) * x + MPoly(Integer(m12(i, j) - e11)) * y +
                    MPoly(Integer(m22(i, j) - m21(i, j) - m12(i, j) + e11)) * x * y;
      }
    }
    checks = {{{a, 3}, {b, 2}}, {{a, 2}, {b, 3}}, {{a, 4}, {b, 5}}};
  } else {
    throw std::logic_error(c.id + ": expected one or two parameters");
  }
  for (const auto& p : checks) {
    if (!(evaluate_matrix(out, as_integers(p)) == observe(p))) {
      throw std::logic_error(c.id + ": quotient entries are not affine in the parameters");
    }
  }
  return out;
}

MPoly case_polynomial(const PropositionCase& c) { return char_poly(build_quotient(c), "λ"); }

bool PolynomialReport::explained() const {
  if (!corrected_matches_derived) return false;
  for (const auto& d : diffs) {
    if (!d.registered) return false;
  }
  for (const auto& d : matrix_diffs) {
    if (!d.registered) return false;
  }
  return true;
}

PolynomialReport verify_printed_polynomial(const PropositionCase& c) {
  PolynomialReport r;
  r.case_id = c.id;
  MPoly printed = MPoly::parse(c.printed_polynomial);
  for (const auto& [from, to] : c.variable_aliases) printed = printed.rename(from, to);
  r.printed = printed;
  r.computed = case_polynomial(c);
  const unsigned deg = std::max(printed.degree_in("λ"), r.computed.degree_in("λ"));
  for (unsigned k = 0; k <= deg; ++k) {
    MPoly pc = printed.coefficient("λ", k).compact();
    MPoly cc = r.computed.coefficient("λ", k).compact();
    if (!(pc == cc)) r.diffs.push_back({k, pc, cc, coefficient_registered(c.id, k)});
  }
  const PolyMatrix verbatim = build_quotient(c, Transcription::verbatim);
  const PolyMatrix derived = derive_quotient(c);
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    for (std::size_t j = 0; j < c.dimension(); ++j) {
      if (!(verbatim(i, j) == derived(i, j))) {
        r.matrix_diffs.push_back({i, j, verbatim(i, j), derived(i, j), entry_registered(c.id, i, j)});
      }
    }
  }
  r.corrected_matches_derived = build_quotient(c, Transcription::corrected) == derived;
  return r;
}

std::vector<SignClaimReport> verify_sign_claims(const PropositionCase& c, long grid_max, const ParamRange& window) {
  const MPoly poly = case_polynomial(c);
  std::vector<SignClaimReport> out;
  for (const auto& claim : c.claims) {
    SignClaimReport r;
    r.case_id = c.id;
    r.label = claim.label;
    r.lo = claim.lo;
    r.hi = claim.hi;
    for (const auto& p : grid(claim.range, {}, grid_max, window)) {
      bool excluded = std::any_of(claim.exclude.begin(), claim.exclude.end(),
                                  [&](const auto& e) { return e.first == p; });
      if (excluded) {
        ++r.excluded_points;
        continue;
      }
      ++r.grid_points;
      const UPoly up = instantiate(poly, p);
      for (const auto& pt : claim.points) {
        Rational v = up.evaluate(pt.at);
        if (sign(v) != pt.sign) r.sign_failures.push_back({p, pt.at, v});
      }
      if (count_roots_open(up, claim.lo, claim.hi) == 0) r.sturm_failures.push_back(p);
    }
    for (const auto& pt : claim.points) {
      Integer denominator;
      const MPoly scaled = scaled_value(poly, pt.at, denominator);
      ExpressionCheck e;
      e.at = pt.at;
      e.exact = render_terms(scaled, denominator);
      if (pt.printed) {
        e.printed = *pt.printed;
        e.matches = denominator == 1 && scaled == MPoly::parse(*pt.printed);
        e.registered = !e.matches && claim_registered(c.id, pt.at);
      } else if (pt.approximate) {
        e.printed = *pt.approximate;
        e.approximate = true;
        e.matches = approximation_consistent(rational_terms(scaled, denominator), parse_decimal_terms(*pt.approximate));
      }
      r.expressions.push_back(std::move(e));
    }
    out.push_back(std::move(r));
  }
  return out;
}

ClosedFormReport closed_form_root_check(const PropositionCase& c, std::string_view label, long grid_max) {
  auto it = std::find_if(c.closed_forms.begin(), c.closed_forms.end(), [&](const ClosedForm& f) { return f.label == label; });
  if (it == c.closed_forms.end()) {
    throw UnknownCase(c.id + " has no closed form '" + std::string(label) + "'");
  }
  const ClosedForm& f = *it;
  ClosedFormReport r;
  r.case_id = c.id;
  r.label = f.label;
  const MPoly poly = case_polynomial(c);

  if (f.printed_identity) {
    const MPoly lhs = poly.evaluate_partial(as_integers(f.fixed)).compact();
    r.identity = lhs == MPoly::parse(*f.printed_identity);
    if (!*r.identity) r.problems.push_back("identity fails: computed " + lhs.to_string());
  }

  const auto points = grid(f.range, f.fixed, grid_max);
  r.grid_points = points.size();
  if (!f.printed_roots.empty()) r.roots = true;
  if (f.bracket) r.bracket = true;
  for (const auto& p : points) {
    const UPoly up = instantiate(poly, p);
    if (splits_over_integers(up)) {
      r.non_integral = false;
      r.problems.push_back("quotient polynomial splits over the integers at " + to_string(p));
    }
    for (const auto& root : f.printed_roots) {
      if (up.evaluate(Rational(eval_integer(root, p))) != 0) {
        r.roots = false;
        r.problems.push_back(root + " is not a root at " + to_string(p));
      }
    }
    if (f.bracket) {
      const Integer lo = eval_integer((*f.bracket)[0], p);
      const Integer rad = eval_integer((*f.bracket)[1], p);
      const Integer hi = eval_integer((*f.bracket)[2], p);
      bool ok = lo >= 0 && lo * lo < rad && rad < hi * hi;
      // The irrational part must be the quadratic whose discriminant is the radicand.
      const UPoly quad = square_free_part(integer_roots(up).residual);
      if (quad.degree() != 2) {
        ok = false;
      } else {
        const UPoly m = quad.monic();
        ok = ok && m.coeff(1) * m.coeff(1) - 4 * m.coeff(0) == Rational(rad);
      }
      if (!ok) {
        r.bracket = false;
        r.problems.push_back("bracket fails at " + to_string(p));
      }
    }
  }

  if (!f.printed_spectrum.empty()) {
    const SpectrumReport s = spectrum(case_graph(c, f.fixed), MatrixKind::L, pow10_inverse(6));
    std::vector<std::pair<std::string, unsigned>> computed;
    for (const auto& ev : s.eigenvalues) computed.emplace_back(spectrum_token(ev), ev.multiplicity);
    r.spectrum = computed == f.printed_spectrum;
    if (!*r.spectrum) r.problems.push_back("spectrum differs from the printed one");
    if (s.integral) {
      r.non_integral = false;
      r.problems.push_back("graph is L-integral");
    }
  }
  return r;
}

CrossCheckReport cross_check_with_realization(const PropositionCase& c, const Params& p) {
  CrossCheckReport r;
  r.case_id = c.id;
  r.params = p;
  const Graph g = case_graph(c, p);
  r.in_family = hub_degree(c, p) >= 3;
  if (r.in_family) r.realize_matches = realize(case_config(c, p)) == g;
  const IntMatrix lap = laplacian(g);
  const Partition part = case_partition(c, p);
  r.equitable = is_equitable(lap, part).equitable;
  if (r.equitable) {
    const IntMatrix full = evaluate_unchecked(c, p, Transcription::corrected);
    std::vector<std::size_t> dead;
    const auto live = live_cells(c, p);
    for (std::size_t i = 0; i < c.dimension(); ++i) {
      if (std::find(live.begin(), live.end(), i) == live.end()) dead.push_back(i);
    }
    r.quotient_matches = quotient_matrix(lap, part) == principal_submatrix(full, dead);
    r.divides = eigenvalue_containment_check(lap, part).divides();
  }
  r.integral = is_L_integral(g);
  return r;
}

std::vector<DirectCheckReport> run_direct_checks(const PropositionCase& c) {
  std::vector<DirectCheckReport> out;
  for (const auto& p : c.direct_checks) {
    const Graph g = case_graph(c, p);
    const UPoly cp = characteristic_polynomial(g, MatrixKind::L);
    out.push_back({p, g.order(), splits_over_integers(cp), cp.to_string()});
  }
  return out;
}

bool CaseVerdict::ok() const {
  if (!polynomial.explained()) return false;
  for (const auto& r : claims) {
    if (!r.holds()) return false;
  }
  for (const auto& r : closed_forms) {
    if (!r.holds()) return false;
  }
  for (const auto& r : cross_checks) {
    if (!r.ok()) return false;
  }
  for (const auto& r : direct) {
    if (r.integral) return false;
  }
  return true;
}

CaseVerdict verify_case(const PropositionCase& c, long grid_max, long cross_max, const ParamRange& window) {
  CaseVerdict v;
  v.case_id = c.id;
  v.polynomial = verify_printed_polynomial(c);
  v.claims = verify_sign_claims(c, grid_max, window);
  for (const auto& f : c.closed_forms) v.closed_forms.push_back(closed_form_root_check(c, f.label, grid_max));

  std::set<Params> points;
  for (const auto& claim : c.claims) {
    for (const auto& p : grid(claim.range, {}, cross_max, window)) points.insert(p);
  }
  for (const auto& p : c.direct_checks) points.insert(p);
  for (const auto& f : c.closed_forms) {
    for (const auto& p : grid(f.range, f.fixed, std::max<long>(cross_max, 3))) points.insert(p);
  }
  for (const auto& p : points) v.cross_checks.push_back(cross_check_with_realization(c, p));
  v.direct = run_direct_checks(c);
  return v;
}

std::vector<CaseVerdict> verify_all_cases(long grid_max, long cross_max, unsigned jobs, const ParamRange& window) {
  const auto& cases = proposition_cases();
  std::vector<CaseVerdict> out(cases.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::exception_ptr> errors(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        out[i] = verify_case(cases[i], grid_max, cross_max, window);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < std::min<std::size_t>(jobs, cases.size()); ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

namespace {

std::string cell(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

ErratumEntry check_typo(const SuspectedTypo& t) {
  const PropositionCase& c = find_case(t.case_id);
  ErratumEntry e;
  e.source = t.case_id;
  e.printed = t.printed;
  e.note = t.note;
  switch (t.kind) {
    case TypoKind::coefficient: {
      e.kind = "coefficient";
      e.location = "power " + std::to_string(*t.power);
      for (const auto& d : verify_printed_polynomial(c).diffs) {
        if (d.power == *t.power) {
          e.computed = d.computed.to_string();
          e.confirmed = true;
        }
      }
      break;
    }
    case TypoKind::matrix_entry: {
      e.kind = "matrix_entry";
      const PolynomialReport r = verify_printed_polynomial(c);
      std::size_t hits = 0;
      for (auto [i, j] : t.entries) {
        if (!e.location.empty()) e.location += " ";
        e.location += cell(i, j);
        for (const auto& d : r.matrix_diffs) {
          if (d.row == i && d.col == j) {
            ++hits;
            e.computed = d.derived.to_string();
          }
        }
      }
      e.confirmed = hits == t.entries.size() && r.corrected_matches_derived;
      break;
    }
    case TypoKind::claim_value: {
      e.kind = "claim_value";
      e.location = "p(" + to_string(*t.at) + ")";
      for (const auto& rep : verify_sign_claims(c, 2)) {
        for (const auto& x : rep.expressions) {
          if (x.at == *t.at && !x.printed.empty() && !x.approximate) {
            e.computed = x.exact;
            e.confirmed = !x.matches;
          }
        }
      }
      break;
    }
  }
  return e;
}

ErratumEntry check_block(const PrintedBlock& b) {
  ErratumEntry e;
  e.source = b.name;
  e.note = b.note;
  if (b.kind == PrintedBlock::Kind::path_interior) {
    e.kind = "path_interior";
    const IntMatrix actual = path_interior_block(b.order);
    for (std::size_t i = 0; i < b.order; ++i) {
      for (std::size_t j = 0; j < b.order; ++j) {
        const Integer printed = parse_rational(b.printed.at(i).at(j)).get_num();
        if (printed == actual(i, j)) continue;
        auto append = [](std::string& s, const std::string& x) { s += (s.empty() ? "" : " ") + x; };
        append(e.location, cell(i, j));
        append(e.printed, printed.get_str());
        append(e.computed, actual(i, j).get_str());
        e.confirmed = true;
      }
    }
    return e;
  }
  // Hub u is vertex 0; the u-v path's first interior vertex follows the two hubs.
  e.kind = "coupling";
  e.location = "(u,x1)";
  HubSide pad;
  pad.pendants = {1};
  const FamilyConfig cfg = FamilyConfig::g2(b.hub_adjacent, {b.path_order, 3}, pad, pad);
  const IntMatrix lap = laplacian(realize(cfg));
  const Integer printed = parse_rational(b.printed.at(0).at(0)).get_num();
  e.printed = printed.get_str();
  e.computed = lap(0, 2).get_str();
  e.confirmed = printed != lap(0, 2);
  return e;
}

}  // namespace

std::vector<ErratumEntry> erratum_report() {
  std::vector<ErratumEntry> out;
  for (const auto& t : suspected_typos()) out.push_back(check_typo(t));
  for (const auto& b : printed_blocks()) out.push_back(check_block(b));
  return out;
}

std::pair<long, std::optional<long>> parse_param_bounds(std::string_view text) {
  auto number = [&](std::string_view part) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string_view::npos) {
      throw std::invalid_argument("malformed parameter range '" + std::string(text) + "'");
    }
    return std::stol(std::string(part));
  };
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    long v = number(text);
    return {v, v};
  }
  long lo = number(text.substr(0, dots));
  std::string_view rest = text.substr(dots + 2);
  if (rest.empty()) return {lo, std::nullopt};
  long hi = number(rest);
  if (hi < lo) throw std::invalid_argument("empty parameter range '" + std::string(text) + "'");
  return {lo, hi};
}

}  // namespace lapint
