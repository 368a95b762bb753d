#include "lapint/graph6.hpp"

#include <cctype>
#include <stdexcept>

namespace lapint {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void put_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

int sextet(char c) {
  int v = static_cast<unsigned char>(c) - 63;
  if (v < 0 || v > 63) throw std::invalid_argument(std::string("graph6: invalid character '") + c + "'");
  return v;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  put_size(out, n);
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw std::invalid_argument("graph6: empty input");

  std::size_t pos = 0;
  std::size_t n = 0;
  auto take = [&](std::size_t count) {
    if (pos + count > text.size()) throw std::invalid_argument("graph6: truncated size field");
    std::size_t v = 0;
    for (std::size_t k = 0; k < count; ++k) v = (v << 6) | static_cast<std::size_t>(sextet(text[pos++]));
    return v;
  };
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] == 126) {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }

  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = (pairs + 5) / 6;
  if (text.size() - pos != expected) {
    throw std::invalid_argument("graph6: expected " + std::to_string(expected) + " data bytes for n=" +
                                std::to_string(n) + ", found " + std::to_string(text.size() - pos));
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      int byte = sextet(text[pos + bit / 6]);
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bit % 6 != 0) {
    int byte = sextet(text[pos + bit / 6]);
    if ((byte & ((1 << (6 - bit % 6)) - 1)) != 0) throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return Graph::from_edges(n, edges);
}

}  // namespace lapint
