#include "lapint/spectral.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "lapint/connectivity.hpp"
#include "lapint/graph6.hpp"

namespace lapint {

const char* to_string(MatrixKind kind) { return kind == MatrixKind::L ? "L" : "Q"; }

MatrixKind parse_kind(const std::string& text) {
  if (text.size() == 1) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (c == 'L') return MatrixKind::L;
    if (c == 'Q') return MatrixKind::Q;
  }
  throw std::invalid_argument("matrix kind must be L or Q, got '" + text + "'");
}

IntMatrix graph_matrix(const Graph& g, MatrixKind kind) {
  const std::size_t n = g.order();
  const long off = kind == MatrixKind::L ? -1 : 1;
  IntMatrix m(n, n);
  for (Vertex v = 0; v < n; ++v) {
    m(v, v) = static_cast<long>(g.degree(v));
    for (Vertex w : g.neighbors(v)) m(v, w) = off;
  }
  return m;
}

IntMatrix laplacian(const Graph& g) { return graph_matrix(g, MatrixKind::L); }
IntMatrix signless_laplacian(const Graph& g) { return graph_matrix(g, MatrixKind::Q); }

UPoly characteristic_polynomial(const Graph& g, MatrixKind kind) { return char_poly(graph_matrix(g, kind)); }

SpectrumReport spectrum(const Graph& g, MatrixKind kind, const Rational& precision) {
  SpectrumReport r;
  r.graph6 = to_graph6(g);
  r.kind = kind;
  r.order = g.order();
  r.precision = precision;
  r.char_poly = characteristic_polynomial(g, kind);
  r.roots = integer_roots(r.char_poly, precision);
  r.integral = r.roots.residual.degree() == 0;
  r.eigenvalues = real_roots(r.char_poly, precision);
  std::reverse(r.eigenvalues.begin(), r.eigenvalues.end());
  return r;
}

bool is_integral(const Graph& g, MatrixKind kind) {
  if (g.order() == 0) return true;
  return splits_over_integers(characteristic_polynomial(g, kind));
}

bool is_L_integral(const Graph& g) { return is_integral(g, MatrixKind::L); }
bool is_Q_integral(const Graph& g) { return is_integral(g, MatrixKind::Q); }

RealRoot algebraic_connectivity(const Graph& g, const Rational& precision) {
  if (g.order() < 2) throw std::invalid_argument("algebraic connectivity needs at least two vertices");
  std::vector<RealRoot> roots = real_roots(characteristic_polynomial(g, MatrixKind::L), precision);
  // Ascending; the second eigenvalue counted with multiplicity.
  if (roots.front().multiplicity >= 2) return {roots.front().where, 1};
  return roots[1];
}

int compare_algebraic_connectivity(const Graph& g, const Rational& x) {
  if (g.order() < 2) throw std::invalid_argument("algebraic connectivity needs at least two vertices");
  RootCounter counter(characteristic_polynomial(g, MatrixKind::L));
  unsigned at_most = counter.count_at_most(x);
  if (at_most < 2) return 1;
  unsigned below = at_most - counter.multiplicity_at(x);
  return below >= 2 ? -1 : 0;
}

namespace {

bool is_complete(const Graph& g) { return 2 * g.size() == g.order() * (g.order() - 1); }

bool next_combination(std::vector<Vertex>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

InterlacingReport counting_check(const UPoly& big, const UPoly& small, unsigned slack) {
  RootCounter a(big);
  RootCounter b(small);
  std::set<Rational> thresholds;
  const Rational fine = Rational(1, 1024);
  for (const UPoly* p : {&big, &small}) {
    for (const auto& r : real_roots(*p, fine)) {
      thresholds.insert(r.where.lo);
      thresholds.insert(r.where.hi);
      thresholds.insert(r.where.lo - fine);
    }
  }
  Rational top = Rational(std::max(root_bound(big), root_bound(small)) + 1);
  for (Rational x = -top; x <= top; x += Rational(1, 8)) thresholds.insert(x);

  InterlacingReport report;
  for (const Rational& x : thresholds) {
    ++report.thresholds_checked;
    unsigned n_big = a.count_above(x);
    unsigned n_small = b.count_above(x);
    if (n_small > n_big || n_big > n_small + slack) {
      report.holds = false;
      report.witness = x;
      return report;
    }
  }
  return report;
}

}  // namespace

KirklandReport kirkland_decomposition_check(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("kirkland check needs a connected graph");
  if (is_complete(g)) throw std::invalid_argument("kirkland check rejects complete graphs");
  const std::size_t n = g.order();
  KirklandReport r;
  r.connectivity = vertex_connectivity(g);
  const std::size_t k = r.connectivity;
  r.a_vs_k = compare_algebraic_connectivity(g, Rational(static_cast<long>(k)));
  if (r.a_vs_k > 0) throw std::logic_error("algebraic connectivity exceeds vertex connectivity");

  std::vector<Vertex> part(k);
  for (std::size_t i = 0; i < k; ++i) part[i] = i;
  do {
    std::vector<bool> in(n, false);
    for (Vertex x : part) in[x] = true;
    // Each vertex of the part sees every vertex outside it.
    bool joined = std::all_of(part.begin(), part.end(), [&](Vertex x) {
      std::size_t inside = 0;
      for (Vertex y : g.neighbors(x)) inside += in[y];
      return g.degree(x) - inside == n - k;
    });
    if (!joined) continue;
    Graph rest = without_vertices(g, part);
    if (is_connected(rest)) continue;
    Graph gb = induced_subgraph(g, part);
    long need = 2 * static_cast<long>(k) - static_cast<long>(n);
    bool condition = gb.order() < 2 ? need <= 0
                                    : compare_algebraic_connectivity(gb, Rational(need)) >= 0;
    if (!r.join_part || (condition && !r.join_part_condition)) {
      r.join_part = part;
      r.join_part_condition = condition;
    }
    if (condition) break;
  } while (next_combination(part, n));

  bool join_exists = r.join_part && r.join_part_condition;
  r.consistent = (r.a_vs_k == 0) == join_exists;
  return r;
}

InterlacingReport edge_interlacing_check(const Graph& g, std::span<const Edge> removed) {
  Graph h = without_edges(g, removed);
  UPoly pg = characteristic_polynomial(g, MatrixKind::L);
  UPoly ph = characteristic_polynomial(h, MatrixKind::L);
  return counting_check(pg, ph, static_cast<unsigned>(removed.size()));
}

InterlacingReport principal_interlacing_check(const IntMatrix& a, std::span<const std::size_t> removed) {
  if (!a.is_symmetric()) throw std::invalid_argument("interlacing needs a symmetric matrix");
  IntMatrix b = principal_submatrix(a, removed);
  UPoly pa = char_poly(a);
  InterlacingReport report;
  if (b.rows() == 0) return report;
  UPoly pb = char_poly(b);
  return counting_check(pa, pb, static_cast<unsigned>(removed.size()));
}

}  // namespace lapint
