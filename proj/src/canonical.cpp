#include "lapint/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

#include "lapint/graph6.hpp"

namespace lapint {

namespace {

using Mask = std::uint64_t;
using Cells = std::vector<std::vector<int>>;

Mask bit(int v) { return Mask{1} << v; }

// Individualization-refinement search for the labeling whose adjacency rows are
// lexicographically largest. Twins (same neighbors apart from each other) in the
// target cell lead to isomorphic subtrees, so only one of them is explored.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(static_cast<int>(g.order())), adj_(g.order(), 0) {
    if (g.order() > 64) throw std::invalid_argument("canonical labeling supports at most 64 vertices");
    for (auto [a, b] : g.edges()) {
      adj_[a] |= bit(static_cast<int>(b));
      adj_[b] |= bit(static_cast<int>(a));
    }
  }

  std::vector<Vertex> run() {
    Cells start;
    if (n_ > 0) {
      start.emplace_back();
      for (int v = 0; v < n_; ++v) start.back().push_back(v);
    }
    search(refine(std::move(start)));
    std::vector<Vertex> perm(n_);
    for (int i = 0; i < n_; ++i) perm[best_order_[i]] = static_cast<Vertex>(i);
    return perm;
  }

 private:
  Cells refine(Cells cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<Mask> masks(cells.size(), 0);
      for (std::size_t j = 0; j < cells.size(); ++j) {
        for (int v : cells[j]) masks[j] |= bit(v);
      }
      for (std::size_t i = 0; i < cells.size() && !changed; ++i) {
        if (cells[i].size() < 2) continue;
        std::map<std::vector<int>, std::vector<int>> groups;
        for (int v : cells[i]) {
          std::vector<int> sig(cells.size());
          for (std::size_t j = 0; j < cells.size(); ++j) sig[j] = std::popcount(adj_[v] & masks[j]);
          groups[sig].push_back(v);
        }
        if (groups.size() < 2) continue;
        Cells split;
        for (auto& [sig, members] : groups) split.push_back(std::move(members));
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(i));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i), split.begin(), split.end());
        changed = true;
      }
    }
    return cells;
  }

  bool twins(int a, int b) const { return (adj_[a] & ~bit(b)) == (adj_[b] & ~bit(a)); }

  void search(const Cells& cells) {
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t ti = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> tried;
    for (int v : cells[ti]) {
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
      tried.push_back(v);
      Cells next = cells;
      std::vector<int> rest;
      for (int w : cells[ti]) {
        if (w != v) rest.push_back(w);
      }
      next[ti] = {v};
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(ti) + 1, rest);
      search(refine(std::move(next)));
    }
  }

  void leaf(const Cells& cells) {
    std::vector<int> order;
    for (const auto& c : cells) order.push_back(c.front());
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; ++i) pos[order[i]] = i;
    std::vector<Mask> rows(n_, 0);
    for (int i = 0; i < n_; ++i) {
      Mask m = adj_[order[i]];
      while (m) {
        int w = std::countr_zero(m);
        m &= m - 1;
        rows[i] |= bit(n_ - 1 - pos[w]);
      }
    }
    if (best_order_.empty() || rows > best_rows_) {
      best_rows_ = std::move(rows);
      best_order_ = std::move(order);
    }
  }

  int n_;
  std::vector<Mask> adj_;
  std::vector<Mask> best_rows_;
  std::vector<int> best_order_;
};

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g) { return Canonizer(g).run(); }

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_labeling(g)); }

std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && degree_sequence(a) == degree_sequence(b) &&
         canonical_graph(a) == canonical_graph(b);
}

std::vector<Graph> generate_graphs(std::size_t n, bool connected, const std::function<bool(const Graph&)>& keep) {
  if (n == 0) return {Graph()};
  std::vector<Graph> level{Graph(1)};
  if (keep && !keep(level.front())) return {};
  for (std::size_t k = 1; k < n; ++k) {
    std::map<std::string, Graph> found;
    for (const Graph& base : level) {
      const auto base_edges = base.edges();
      for (Mask subset = connected ? 1 : 0; subset < (Mask{1} << k); ++subset) {
        std::vector<Edge> e = base_edges;
        for (Vertex v = 0; v < k; ++v) {
          if (subset & bit(static_cast<int>(v))) e.emplace_back(v, k);
        }
        Graph g = Graph::from_edges(k + 1, e);
        if (keep && !keep(g)) continue;
        Graph c = canonical_graph(g);
        found.try_emplace(to_graph6(c), std::move(c));
      }
    }
    level.clear();
    for (auto& [code, g] : found) level.push_back(std::move(g));
  }
  return level;
}

std::vector<Graph> brute_force_oracle(Family family, std::size_t n) {
  if (n > 8) throw std::invalid_argument("brute-force oracle is limited to n <= 8");
  std::vector<Graph> out;
  for (Graph& g : generate_graphs(n, true)) {
    Membership m = family_membership(g);
    bool match = family == Family::G1 ? m == Membership::G1 : (m == Membership::G2 || m == Membership::G2_nonbipartite);
    if (match) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace lapint
