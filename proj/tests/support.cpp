#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace lapint::testing {

Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> parent(0, v - 1);
    edges.emplace_back(parent(rng), v);
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      bool present = std::any_of(edges.begin(), edges.end(), [&](const Edge& e) { return e == Edge{a, b}; });
      if (!present && coin(rng)) edges.emplace_back(a, b);
    }
  }
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(Graph::from_edges(n, edges), perm);
}

Graph random_cograph(std::mt19937_64& rng, std::size_t n) {
  if (n == 1) return complete(1);
  std::uniform_int_distribution<std::size_t> split(1, n - 1);
  const std::size_t left = split(rng);
  Graph a = random_cograph(rng, left);
  Graph b = random_cograph(rng, n - left);
  return std::bernoulli_distribution(0.5)(rng) ? join(a, b) : disjoint_union(a, b);
}

std::vector<Edge> random_edges(std::mt19937_64& rng, const Graph& g, std::size_t k) {
  std::vector<Edge> all = g.edges();
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(k, all.size()));
  return all;
}

namespace {

struct Forest {
  std::vector<Vertex> parent;
  Vertex find(Vertex x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
};

std::size_t grow(const std::vector<Edge>& edges, std::size_t from, std::size_t missing, Forest& f) {
  if (missing == 0) return 1;
  std::size_t total = 0;
  for (std::size_t i = from; i + missing <= edges.size(); ++i) {
    Vertex a = f.find(edges[i].first);
    Vertex b = f.find(edges[i].second);
    if (a == b) continue;
    f.parent[b] = a;
    total += grow(edges, i + 1, missing - 1, f);
    f.parent[b] = b;
  }
  return total;
}

}  // namespace

std::size_t spanning_trees_brute_force(const Graph& g) {
  if (g.order() <= 1) return 1;
  Forest f;
  f.parent.resize(g.order());
  std::iota(f.parent.begin(), f.parent.end(), 0);
  return grow(g.edges(), 0, g.order() - 1, f);
}

Rational char_poly_at(const IntMatrix& m, const Rational& x) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = (i == j ? x : Rational(0)) - Rational(m(i, j));
  }
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = entry(rng);
  }
  return m;
}

}  // namespace lapint::testing
