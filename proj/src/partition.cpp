#include "lapint/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "lapint/roots.hpp"

namespace lapint {

Partition Partition::parse(std::string_view text) {
  std::vector<std::vector<std::size_t>> cells;
  std::string chunk;
  auto flush = [&] {
    std::istringstream is(chunk);
    std::vector<std::size_t> cell;
    std::string tok;
    while (is >> tok) {
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw InvalidPartition("partition: '" + tok + "' is not a vertex index");
      }
      cell.push_back(std::stoul(tok));
    }
    if (cell.empty()) throw InvalidPartition("partition: empty cell");
    cells.push_back(std::move(cell));
    chunk.clear();
  };
  for (char c : text) {
    if (c == '|') {
      flush();
    } else {
      chunk.push_back(c);
    }
  }
  flush();
  return Partition(std::move(cells));
}

Partition Partition::singletons(std::size_t n) {
  std::vector<std::vector<std::size_t>> cells(n);
  for (std::size_t i = 0; i < n; ++i) cells[i] = {i};
  return Partition(std::move(cells));
}

Partition Partition::whole(std::size_t n) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return Partition({all});
}

void Partition::validate(std::size_t n) const {
  std::vector<bool> seen(n, false);
  std::size_t covered = 0;
  for (const auto& cell : cells_) {
    if (cell.empty()) throw InvalidPartition("partition: empty cell");
    for (std::size_t x : cell) {
      if (x >= n) throw InvalidPartition("partition: vertex " + std::to_string(x) + " out of range for order " + std::to_string(n));
      if (seen[x]) throw InvalidPartition("partition: vertex " + std::to_string(x) + " appears twice");
      seen[x] = true;
      ++covered;
    }
  }
  if (covered != n) throw InvalidPartition("partition covers " + std::to_string(covered) + " of " + std::to_string(n) + " vertices");
}

Partition Partition::canonical() const {
  auto cells = cells_;
  for (auto& c : cells) std::sort(c.begin(), c.end());
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return Partition(std::move(cells));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (i > 0) out += " | ";
    for (std::size_t j = 0; j < cells_[i].size(); ++j) {
      if (j > 0) out += " ";
      out += std::to_string(cells_[i][j]);
    }
  }
  return out;
}

namespace {

Integer row_sum(const IntMatrix& m, std::size_t s, const std::vector<std::size_t>& cell) {
  Integer acc = 0;
  for (std::size_t t : cell) acc += m(s, t);
  return acc;
}

}  // namespace

EquitableCheck is_equitable(const IntMatrix& m, const Partition& p) {
  m.require_square("is_equitable");
  p.validate(m.rows());
  EquitableCheck out;
  const auto& cells = p.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = 0; j < cells.size(); ++j) {
      Integer first = row_sum(m, cells[i].front(), cells[j]);
      for (std::size_t k = 1; k < cells[i].size(); ++k) {
        if (row_sum(m, cells[i][k], cells[j]) != first) {
          out.equitable = false;
          out.cells = {i, j};
          out.vertices = {cells[i].front(), cells[i][k]};
          return out;
        }
      }
    }
  }
  return out;
}

IntMatrix quotient_matrix(const IntMatrix& m, const Partition& p) {
  EquitableCheck check = is_equitable(m, p);
  if (!check.equitable) {
    throw InvalidPartition("partition is not equitable: vertices " + std::to_string(check.vertices->first) + " and " +
                           std::to_string(check.vertices->second) + " of cell " + std::to_string(check.cells->first) +
                           " have different sums into cell " + std::to_string(check.cells->second));
  }
  const auto& cells = p.cells();
  IntMatrix q(cells.size(), cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = 0; j < cells.size(); ++j) q(i, j) = row_sum(m, cells[i].front(), cells[j]);
  }
  return q;
}

ContainmentReport eigenvalue_containment_check(const IntMatrix& m, const Partition& p) {
  ContainmentReport r;
  r.quotient_poly = char_poly(quotient_matrix(m, p));
  r.full_poly = char_poly(m);
  r.cofactor = divides(r.quotient_poly, r.full_poly);
  return r;
}

Partition coarsest_equitable_refinement(const IntMatrix& m, const Partition& initial) {
  m.require_square("coarsest_equitable_refinement");
  initial.validate(m.rows());
  const std::size_t n = m.rows();
  Partition current = initial.canonical();
  for (;;) {
    const auto& cells = current.cells();
    std::vector<std::size_t> cell_of(n);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (std::size_t x : cells[i]) cell_of[x] = i;
    }
    // The diagonal entry joins the signature so that Laplacian refinements do not
    // stop at the single cell, whose row sums are all zero.
    std::map<std::tuple<std::size_t, Integer, std::vector<Integer>>, std::vector<std::size_t>> groups;
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<Integer> sig(cells.size(), Integer(0));
      for (std::size_t t = 0; t < n; ++t) sig[cell_of[t]] += m(s, t);
      groups[{cell_of[s], m(s, s), std::move(sig)}].push_back(s);
    }
    if (groups.size() == cells.size()) return current;
    std::vector<std::vector<std::size_t>> next;
    next.reserve(groups.size());
    for (auto& [key, members] : groups) next.push_back(std::move(members));
    current = Partition(std::move(next)).canonical();
  }
}

}  // namespace lapint
