#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "lapint/graph.hpp"
#include "lapint/matrix.hpp"

namespace lapint::testing {

/// Connected graph on n vertices: a random spanning tree plus each remaining
/// pair with probability p.
Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p);

/// Random union/join tree over n single-vertex leaves.
Graph random_cograph(std::mt19937_64& rng, std::size_t n);

/// Up to k distinct edges of g, chosen uniformly.
std::vector<Edge> random_edges(std::mt19937_64& rng, const Graph& g, std::size_t k);

/// Number of spanning trees, by growing acyclic edge sets edge by edge.
std::size_t spanning_trees_brute_force(const Graph& g);

/// det(x I - m) by fraction-based Gaussian elimination.
Rational char_poly_at(const IntMatrix& m, const Rational& x);

/// Random symmetric integer matrix with entries in [-bound, bound].
IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, int bound);

}  // namespace lapint::testing
