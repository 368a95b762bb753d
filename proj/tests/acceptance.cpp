// Acceptance run: one line per criterion, "PASS" or "FAIL" with details.
//
// Exit status is nonzero only for failures that are not on the known list, so a
// documented shortfall shows up as FAIL without breaking the test suite.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "lapint/canonical.hpp"
#include "lapint/connectivity.hpp"
#include "lapint/enumerator.hpp"
#include "lapint/partition.hpp"
#include "lapint/proposition_cases.hpp"
#include "lapint/spectral.hpp"
#include "support.hpp"

using namespace lapint;

namespace {

struct Outcome {
  bool pass = false;
  bool known = false;  // failure explained and expected
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

Outcome theorem_list() {
  const auto t0 = Clock::now();
  const TheoremReport r = verify_theorem(9, 12);
  const double dt = seconds_since(t0);
  std::size_t graphs = 0;
  for (const auto& row : r.summary) graphs += row.graphs;
  Outcome o;
  o.pass = r.literal_disagreements() == 0 && dt < 60;
  std::ostringstream os;
  os << graphs << " graphs, " << r.literal_disagreements() << " disagreements, "
     << r.structural_disagreements() << " ignoring side conditions, " << fmt_seconds(dt);
  if (!o.pass) {
    // Known: every disagreement is an integral graph of a listed shape whose side
    // condition fails (windmills F_{r,0,0}; one-vertex joins with r + s < 2).
    bool explained = r.structural_disagreements() == 0 && dt < 60;
    for (const auto& v : r.verdicts) {
      if (!v.literal_agreement) explained = explained && v.integral && !v.tag.conditions_met;
    }
    o.known = explained;
    if (explained) os << "; all are integral graphs excluded by the list's side conditions";
  }
  o.detail = os.str();
  return o;
}

Outcome printed_polynomials() {
  const auto t0 = Clock::now();
  std::size_t verified = 0;
  std::size_t explained = 0;
  std::size_t unexplained = 0;
  std::string where;
  for (const auto& c : proposition_cases()) {
    const PolynomialReport r = verify_printed_polynomial(c);
    if (r.diffs.empty()) {
      ++verified;
    } else if (r.explained()) {
      ++explained;
      for (const auto& d : r.diffs) where += " " + c.id + "@λ^" + std::to_string(d.power);
    } else {
      ++unexplained;
      where += " " + c.id + "(unregistered)";
    }
  }
  const double dt = seconds_since(t0);
  Outcome o;
  o.pass = unexplained == 0 && dt < 5;
  o.detail = std::to_string(verified) + " exact, " + std::to_string(explained) + " with registered typos" +
             (where.empty() ? "" : " [" + where.substr(1) + "]") + ", " + std::to_string(unexplained) +
             " unexplained, " + fmt_seconds(dt);
  return o;
}

struct SpectrumExpectation {
  Params params;
  std::vector<std::pair<long, unsigned>> integers;
  std::vector<std::pair<Rational, Rational>> windows;  // containing intervals for irrational roots
  std::vector<std::string> decimals;
};

Rational frac(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

Outcome printed_spectra() {
  const PropositionCase& c = find_case("4.7-c1.2");
  const std::vector<SpectrumExpectation> cases = {
      {{{"s", 2}, {"t", 1}},
       {{0, 1}, {2, 2}, {4, 1}},
       {{frac(1265, 1000), frac(1275, 1000)}, {frac(4725, 1000), frac(4735, 1000)}},
       {"1.27", "4.73"}},
      {{{"s", 2}, {"t", 2}},
       {},
       {{frac(1435, 1000), frac(1445, 1000)}, {frac(5555, 1000), frac(5565, 1000)}},
       {"1.44", "5.56"}},
  };
  const Rational width = pow10_inverse(6);
  Outcome o;
  o.pass = true;
  std::ostringstream os;
  for (const auto& e : cases) {
    const SpectrumReport r = spectrum(case_graph(c, e.params), MatrixKind::L, width);
    bool ok = true;
    if (!e.integers.empty()) {
      std::vector<std::pair<long, unsigned>> got;
      for (const auto& [root, m] : r.roots.integer_roots) got.emplace_back(root.get_si(), m);
      ok = ok && got == e.integers;
    }
    std::vector<std::string> decimals;
    for (std::size_t k = 0; k < e.windows.size(); ++k) {
      bool found = false;
      for (const auto& iv : r.roots.isolating_intervals) {
        if (iv.width() <= width && iv.lo >= e.windows[k].first && iv.hi <= e.windows[k].second) {
          found = true;
          decimals.push_back(to_decimal(iv.midpoint(), 2));
        }
      }
      ok = ok && found;
    }
    ok = ok && decimals == e.decimals;
    o.pass = o.pass && ok;
    os << to_string(e.params) << ": residual " << r.roots.residual.to_string() << ", roots";
    for (const auto& d : decimals) os << " " << d;
    os << (ok ? " ok" : " MISMATCH") << "; ";
  }
  o.detail = os.str().substr(0, os.str().size() - 2);
  return o;
}

Outcome sign_grid() {
  const auto t0 = Clock::now();
  std::size_t points = 0;
  std::size_t failures = 0;
  std::size_t mismatched_values = 0;
  for (const auto& c : proposition_cases()) {
    for (const auto& r : verify_sign_claims(c, 20)) {
      points += r.grid_points;
      failures += r.sign_failures.size() + r.sturm_failures.size();
      for (const auto& e : r.expressions) mismatched_values += !e.matches && !e.registered;
    }
  }
  Outcome o;
  o.pass = failures == 0 && mismatched_values == 0 && points > 0;
  o.detail = std::to_string(points) + " grid points, " + std::to_string(failures) + " sign/Sturm failures, " +
             std::to_string(mismatched_values) + " unregistered printed values, " + fmt_seconds(seconds_since(t0));
  return o;
}

Outcome property_suites() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(2024);
  std::ostringstream os;
  bool all = true;
  auto part = [&](const char* tag, bool ok, const std::string& what) {
    all = all && ok;
    os << tag << " " << what << (ok ? "" : " FAILED") << "; ";
  };

  bool a = true;
  for (std::size_t n = 7; n <= 12; ++n) a = a && count_roots_open(characteristic_polynomial(path(n), MatrixKind::L), 0, 1) >= 2;
  part("(a)", a, "P_7..P_12");

  bool b = true;
  for (int k = 0; k < 200; ++k) {
    const Graph g = testing::random_connected_graph(rng, 2 + k % 9, 0.35);
    const auto removed = testing::random_edges(rng, g, 1 + k % 3);
    b = b && edge_interlacing_check(g, removed).holds;
  }
  part("(b)", b, "200 interlacing instances");

  std::size_t enumerated = 0;
  bool c = true;
  bool d = true;
  for (std::size_t n = 4; n <= 12; ++n) {
    for (Family f : {Family::G1, Family::G2}) {
      for (const auto& cfg : enumerate_family(f, n)) {
        ++enumerated;
        const Graph g = realize(cfg);
        const IntMatrix l = laplacian(g);
        const Partition r = coarsest_equitable_refinement(l, Partition::whole(g.order()));
        c = c && is_equitable(l, r).equitable && eigenvalue_containment_check(l, r).divides();
        const std::size_t kappa = vertex_connectivity(g);
        d = d && compare_algebraic_connectivity(g, kappa) <= 0 && kappa <= min_degree(g);
      }
    }
  }
  part("(c)", c, std::to_string(enumerated) + " quotient divisibilities");
  part("(d)", d, "a<=k<=delta on the same graphs");

  bool e = true;
  for (int k = 0; k < 200; ++k) e = e && is_L_integral(testing::random_cograph(rng, 1 + k % 12));
  part("(e)", e, "200 cographs");

  std::size_t bipartite = 0;
  bool f = true;
  for (std::size_t n = 1; n <= 9; ++n) {
    for (const Graph& g : generate_graphs(n, false, is_bipartite)) {
      ++bipartite;
      f = f && characteristic_polynomial(g, MatrixKind::L) == characteristic_polynomial(g, MatrixKind::Q);
    }
  }
  part("(f)", f, std::to_string(bipartite) + " bipartite graphs");

  const double dt = seconds_since(t0);
  Outcome o;
  o.pass = all && dt < 120;
  o.detail = os.str() + fmt_seconds(dt);
  return o;
}

Outcome oracle_counts() {
  Outcome o;
  o.pass = true;
  std::ostringstream os;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (Family f : {Family::G1, Family::G2}) {
      const auto cfgs = enumerate_family(f, n);
      std::set<std::string> mine;
      for (const auto& cfg : cfgs) mine.insert(canonical_form(realize(cfg)));
      const auto oracle = brute_force_oracle(f, n);
      std::set<std::string> theirs;
      for (const Graph& g : oracle) theirs.insert(canonical_form(g));
      const bool ok = cfgs.size() == oracle.size() && mine == theirs;
      o.pass = o.pass && ok;
      if (n >= 4) os << to_string(f) << "(" << n << ")=" << cfgs.size() << (ok ? "" : "!=" + std::to_string(oracle.size())) << " ";
    }
  }
  o.detail = os.str();
  o.detail.pop_back();
  return o;
}

Outcome matrix_tree() {
  std::mt19937_64 rng(7);
  std::size_t agree = 0;
  for (int k = 0; k < 100; ++k) {
    const Graph g = testing::random_connected_graph(rng, 2 + k % 7, 0.25 + 0.05 * (k % 8));
    const std::size_t last[] = {g.order() - 1};
    agree += determinant(principal_submatrix(laplacian(g), last)) == testing::spanning_trees_brute_force(g);
  }
  Outcome o;
  o.pass = agree == 100;
  o.detail = std::to_string(agree) + "/100 random connected graphs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"classification list, n = 9..12", theorem_list},
      {"printed characteristic polynomials", printed_polynomials},
      {"printed decimal spectra", printed_spectra},
      {"sign claims on the parameter grid", sign_grid},
      {"spectral property suites", property_suites},
      {"enumeration against brute force", oracle_counts},
      {"matrix-tree cross-check", matrix_tree},
  };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : o.known ? "FAIL (known)" : "FAIL") << "  "
              << criteria[i].first << ": " << o.detail << std::endl;
    if (!o.pass && !o.known) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
