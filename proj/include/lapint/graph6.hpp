#pragma once

#include <string>
#include <string_view>

#include "lapint/graph.hpp"

namespace lapint {

/// graph6 text for g, without header or trailing newline.
std::string to_graph6(const Graph& g);

/// Decodes one graph6 string. A leading ">>graph6<<" header and surrounding
/// whitespace are accepted. Throws std::invalid_argument on malformed input.
Graph from_graph6(std::string_view text);

}  // namespace lapint
