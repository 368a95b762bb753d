#include "lapint/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace lapint {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) {
      throw std::invalid_argument("edge " + std::to_string(a) + "-" + std::to_string(b) +
                                  " out of range for order " + std::to_string(n));
    }
    if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
    g.adj_[a].push_back(b);
    g.adj_[b].push_back(a);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& nb = g.adj_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw std::invalid_argument("repeated edge at vertex " + std::to_string(v));
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& nb = adj_.at(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex a = 0; a < adj_.size(); ++a) {
    for (Vertex b : adj_[a]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph path(std::size_t k) {
  if (k == 0) throw std::invalid_argument("path needs at least one vertex");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(k, e);
}

Graph cycle(std::size_t k) {
  if (k < 3) throw std::invalid_argument("cycle needs at least three vertices");
  std::vector<Edge> e;
  for (Vertex i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return Graph::from_edges(k, e);
}

Graph star(std::size_t k) {
  if (k == 0) throw std::invalid_argument("star needs at least one vertex");
  std::vector<Edge> e;
  for (Vertex i = 1; i < k; ++i) e.emplace_back(0, i);
  return Graph::from_edges(k, e);
}

Graph complete(std::size_t k) {
  if (k == 0) throw std::invalid_argument("complete graph needs at least one vertex");
  std::vector<Edge> e;
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j = i + 1; j < k; ++j) e.emplace_back(i, j);
  }
  return Graph::from_edges(k, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("complete bipartite sides must be nonempty");
  return join(Graph(a), Graph(b));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> e = g.edges();
  for (auto [a, b] : h.edges()) e.emplace_back(a + g.order(), b + g.order());
  return Graph::from_edges(g.order() + h.order(), e);
}

Graph join(const Graph& g, const Graph& h) {
  std::vector<Edge> e = g.edges();
  const std::size_t off = g.order();
  for (auto [a, b] : h.edges()) e.emplace_back(a + off, b + off);
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = 0; b < h.order(); ++b) e.emplace_back(a, b + off);
  }
  return Graph::from_edges(g.order() + h.order(), e);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t m = h.order();
  std::vector<Edge> e;
  for (Vertex i = 0; i < g.order(); ++i) {
    for (auto [a, b] : h.edges()) e.emplace_back(i * m + a, i * m + b);
  }
  for (auto [a, b] : g.edges()) {
    for (Vertex j = 0; j < m; ++j) e.emplace_back(a * m + j, b * m + j);
  }
  return Graph::from_edges(g.order() * m, e);
}

Graph copies(const Graph& g, std::size_t k) {
  Graph out;
  for (std::size_t i = 0; i < k; ++i) out = disjoint_union(out, g);
  return out;
}

Graph firefly(std::size_t r, std::size_t s, std::size_t t) {
  if (r + s + t == 0) throw std::invalid_argument("firefly needs r + s + t >= 1");
  std::vector<Edge> e;
  Vertex next = 1;
  for (std::size_t i = 0; i < r; ++i, next += 2) {
    e.emplace_back(0, next);
    e.emplace_back(0, next + 1);
    e.emplace_back(next, next + 1);
  }
  for (std::size_t i = 0; i < s; ++i, ++next) e.emplace_back(0, next);
  for (std::size_t i = 0; i < t; ++i, next += 2) {
    e.emplace_back(0, next);
    e.emplace_back(next, next + 1);
  }
  return Graph::from_edges(next, e);
}

Graph gamma_101() {
  const std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}};
  return Graph::from_edges(6, e);
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

std::size_t max_degree(const Graph& g) {
  std::size_t m = 0;
  for (Vertex v = 0; v < g.order(); ++v) m = std::max(m, g.degree(v));
  return m;
}

std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  std::size_t m = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) m = std::min(m, g.degree(v));
  return m;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<int> seen(g.order(), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(x)) {
        if (color[w] < 0) {
          color[w] = 1 - color[x];
          queue.push_back(w);
        } else if (color[w] == color[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<std::size_t> index(g.order(), g.order());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= g.order()) throw std::out_of_range("induced_subgraph: vertex out of range");
    if (index[keep[i]] != g.order()) throw std::invalid_argument("induced_subgraph: repeated vertex");
    index[keep[i]] = i;
  }
  std::vector<Edge> e;
  for (auto [a, b] : g.edges()) {
    if (index[a] < g.order() && index[b] < g.order()) e.emplace_back(index[a], index[b]);
  }
  return Graph::from_edges(keep.size(), e);
}

Graph without_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<bool> drop(g.order(), false);
  for (Vertex v : removed) drop.at(v) = true;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

Graph without_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> e = g.edges();
  for (auto [a, b] : removed) {
    Edge key{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(e.begin(), e.end(), key);
    if (it == e.end() || *it != key) {
      throw std::invalid_argument("edge " + std::to_string(a) + "-" + std::to_string(b) +
                                  " is not in the graph");
    }
    e.erase(it);
  }
  return Graph::from_edges(g.order(), e);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<Edge> e;
  for (auto [a, b] : g.edges()) e.emplace_back(perm[a], perm[b]);
  return Graph::from_edges(g.order(), e);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << "\n";
  for (auto [a, b] : g.edges()) os << a << " " << b << "\n";
  return os.str();
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream is(text);
  long long n = -1;
  if (!(is >> n) || n < 0) throw std::invalid_argument("edge list: missing vertex count");
  std::vector<Edge> e;
  long long a = 0;
  long long b = 0;
  while (is >> a) {
    if (!(is >> b)) throw std::invalid_argument("edge list: dangling endpoint");
    if (a < 0 || b < 0) throw std::invalid_argument("edge list: negative vertex");
    e.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!is.eof()) throw std::invalid_argument("edge list: unexpected token");
  return Graph::from_edges(static_cast<std::size_t>(n), e);
}

}  // namespace lapint
