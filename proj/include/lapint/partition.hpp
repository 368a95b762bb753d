#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lapint/matrix.hpp"
#include "lapint/upoly.hpp"

namespace lapint {

struct InvalidPartition : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Ordered list of vertex cells. Text form: "0 | 1 | 2 3 4".
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::vector<std::size_t>> cells) : cells_(std::move(cells)) {}

  static Partition parse(std::string_view text);
  static Partition singletons(std::size_t n);
  static Partition whole(std::size_t n);

  const std::vector<std::vector<std::size_t>>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }

  /// Throws InvalidPartition unless the cells are nonempty, disjoint and cover 0..n-1.
  void validate(std::size_t n) const;

  /// Cells sorted internally and ordered by smallest member.
  Partition canonical() const;

  std::string to_string() const;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::vector<std::size_t>> cells_;
};

struct EquitableCheck {
  bool equitable = true;
  /// On failure: cells (i, j) and two vertices of cell i whose sums into cell j differ.
  std::optional<std::pair<std::size_t, std::size_t>> cells;
  std::optional<std::pair<std::size_t, std::size_t>> vertices;
};

EquitableCheck is_equitable(const IntMatrix& m, const Partition& p);

/// Entry (i, j) is the common row sum from cell i into cell j. Throws
/// InvalidPartition when p is not equitable.
IntMatrix quotient_matrix(const IntMatrix& m, const Partition& p);

struct ContainmentReport {
  UPoly quotient_poly;
  UPoly full_poly;
  /// full_poly / quotient_poly when the division is exact.
  std::optional<UPoly> cofactor;
  bool divides() const { return cofactor.has_value(); }
};

/// Certifies that every quotient eigenvalue is an eigenvalue of m by exact
/// divisibility of characteristic polynomials.
ContainmentReport eigenvalue_containment_check(const IntMatrix& m, const Partition& p);

/// Splits cells by diagonal entry and by their vectors of row sums into the
/// current cells until nothing changes. The result is equitable for m and for
/// m with its diagonal removed, refines `initial`, and lists cells by smallest member.
Partition coarsest_equitable_refinement(const IntMatrix& m, const Partition& initial);

}  // namespace lapint
