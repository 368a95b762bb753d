#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "lapint/family_config.hpp"
#include "lapint/graph.hpp"

namespace lapint {

/// Permutation sending each vertex of g to its canonical position. Two graphs are
/// isomorphic exactly when relabeling both gives identical graphs. Supports n <= 64.
std::vector<Vertex> canonical_labeling(const Graph& g);
Graph canonical_graph(const Graph& g);
/// graph6 of the canonical graph.
std::string canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// Every graph on n vertices up to isomorphism that satisfies `keep`, in canonical
/// labeling and sorted by canonical form. `keep` must be hereditary (closed under
/// deleting a vertex); graphs are grown one vertex at a time and filtered at each
/// order. With `connected` set only connected graphs are produced, which is
/// complete because every connected graph has a vertex whose deletion leaves it
/// connected.
std::vector<Graph> generate_graphs(std::size_t n, bool connected,
                                   const std::function<bool(const Graph&)>& keep = {});

/// Connected graphs on n vertices with the degree profile of the family, found by
/// generating all connected graphs and filtering. Limited to n <= 8.
std::vector<Graph> brute_force_oracle(Family family, std::size_t n);

}  // namespace lapint
