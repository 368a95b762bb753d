#include "lapint/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <vector>

namespace lapint {

namespace {

bool is_complete(const Graph& g) { return 2 * g.size() == g.order() * (g.order() - 1); }

bool disconnected_without(const Graph& g, const std::vector<bool>& removed) {
  const std::size_t n = g.order();
  Vertex start = n;
  std::size_t alive = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) {
      ++alive;
      if (start == n) start = v;
    }
  }
  if (alive < 2) return false;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{start};
  seen[start] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(x)) {
      if (!removed[w] && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached < alive;
}

bool search(const Graph& g, std::vector<bool>& removed, Vertex from, std::size_t left) {
  if (left == 0) return disconnected_without(g, removed);
  for (Vertex v = from; v < g.order(); ++v) {
    removed[v] = true;
    bool found = search(g, removed, v + 1, left - 1);
    removed[v] = false;
    if (found) return true;
  }
  return false;
}

// Unit-capacity vertex-split network: v_in = 2v, v_out = 2v+1.
std::size_t disjoint_paths(const Graph& g, Vertex s, Vertex t) {
  const std::size_t n = g.order();
  const std::size_t m = 2 * n;
  std::vector<std::vector<int>> cap(m, std::vector<int>(m, 0));
  const int inf = static_cast<int>(n);
  for (Vertex v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? inf : 1;
  for (auto [a, b] : g.edges()) {
    cap[2 * a + 1][2 * b] = inf;
    cap[2 * b + 1][2 * a] = inf;
  }
  const std::size_t src = 2 * s + 1;
  const std::size_t sink = 2 * t;
  std::size_t flow = 0;
  while (true) {
    std::vector<std::size_t> parent(m, m);
    parent[src] = src;
    std::deque<std::size_t> queue{src};
    while (!queue.empty() && parent[sink] == m) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t y = 0; y < m; ++y) {
        if (cap[x][y] > 0 && parent[y] == m) {
          parent[y] = x;
          queue.push_back(y);
        }
      }
    }
    if (parent[sink] == m) return flow;
    for (std::size_t y = sink; y != src; y = parent[y]) {
      --cap[parent[y]][y];
      ++cap[y][parent[y]];
    }
    ++flow;
  }
}

}  // namespace

std::size_t vertex_connectivity_exhaustive(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  if (is_complete(g)) return n - 1;
  std::vector<bool> removed(n, false);
  for (std::size_t k = 1; k + 2 <= n; ++k) {
    if (search(g, removed, 0, k)) return k;
  }
  return n - 1;
}

std::size_t vertex_connectivity_flow(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  if (is_complete(g)) return n - 1;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (!g.adjacent(s, t)) best = std::min(best, disjoint_paths(g, s, t));
    }
  }
  return best;
}

std::size_t vertex_connectivity(const Graph& g) {
  return g.order() <= 20 ? vertex_connectivity_exhaustive(g) : vertex_connectivity_flow(g);
}

}  // namespace lapint
