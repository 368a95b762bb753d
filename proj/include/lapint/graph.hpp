#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lapint {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Labeled undirected simple graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// n isolated vertices.
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Rejects loops, out-of-range endpoints and repeated edges.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edge_count_; }

  /// Sorted neighbor list.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex a, Vertex b) const;

  /// Edges as (a, b) with a < b, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

Graph empty_graph(std::size_t n);
Graph path(std::size_t k);
Graph cycle(std::size_t k);
/// K_{1,k-1}: k vertices, vertex 0 is the center.
Graph star(std::size_t k);
Graph complete(std::size_t k);
Graph complete_bipartite(std::size_t a, std::size_t b);

Graph disjoint_union(const Graph& g, const Graph& h);
/// Disjoint union plus every edge between the two sides.
Graph join(const Graph& g, const Graph& h);
/// Vertex (i, j) gets label i * h.order() + j.
Graph cartesian_product(const Graph& g, const Graph& h);
/// k disjoint copies.
Graph copies(const Graph& g, std::size_t k);

/// r triangles, s pendant edges and t pendant 2-paths on a common hub (vertex 0).
Graph firefly(std::size_t r, std::size_t s, std::size_t t);

/// Two adjacent hubs of degree 3, each closing a triangle with its own K_2.
/// Equivalently the path P_4 with its end vertices blown up to K_2.
Graph gamma_101();

/// Degrees in descending order.
std::vector<std::size_t> degree_sequence(const Graph& g);
std::size_t max_degree(const Graph& g);
std::size_t min_degree(const Graph& g);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
Graph without_vertices(const Graph& g, std::span<const Vertex> removed);
/// Throws std::invalid_argument naming the first edge that is absent.
Graph without_edges(const Graph& g, std::span<const Edge> removed);
/// Vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// "n\na b\n..." with one edge per line.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

}  // namespace lapint
