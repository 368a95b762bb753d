#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "lapint/family_config.hpp"
#include "lapint/graph.hpp"

namespace lapint {

struct BuilderError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Builds a graph from an expression.
///
///   expr  := call | atom ["x" INT]
///   call  := ("join" | "union" | "product") "(" expr ("," expr)* ")"
///   atom  := "K" INT | "P" INT | "C" INT | "E" INT
///          | ("complete" | "path" | "cycle" | "empty" | "star") INT
///          | "bipartite" INT INT | "firefly" INT INT INT | "gamma101"
///          | "g6" STRING | "g1" attr* | "g2" attr*
///   attr  := "hub-edge" | KEY "=" INT ("," INT)*
///
/// "x k" takes k disjoint copies; "K1" and "K 1" are the same. product is the
/// Cartesian product. The g1 and g2 attributes are the ones FamilyConfig::to_string
/// writes: path-orders, cycles, pendants, cycles-u, pendants-u, cycles-v, pendants-v.
Graph build_graph(std::string_view expr);

/// Parses a "g1 ..." or "g2 ..." expression without realizing it.
FamilyConfig parse_family_config(std::string_view expr);

}  // namespace lapint
