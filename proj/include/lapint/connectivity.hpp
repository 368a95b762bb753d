#pragma once

#include <cstddef>

#include "lapint/graph.hpp"

namespace lapint {

/// Minimum number of vertices whose removal disconnects g. Disconnected graphs
/// give 0 and K_n gives n-1. Uses subset search for n <= 20, max-flow above.
std::size_t vertex_connectivity(const Graph& g);

/// Smallest separating set found by trying all vertex subsets in size order.
std::size_t vertex_connectivity_exhaustive(const Graph& g);

/// Minimum over non-adjacent pairs of the number of internally disjoint paths.
std::size_t vertex_connectivity_flow(const Graph& g);

}  // namespace lapint
