#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lapint/arith.hpp"
#include "lapint/upoly.hpp"

namespace lapint {

/// A real root located in (lo, hi], or exactly at lo when lo == hi.
struct IsolatingInterval {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;
};

/// Integer-root split of a polynomial:  p = lead * prod (x - r)^m * residual.
struct RootReport {
  std::vector<std::pair<Integer, unsigned>> integer_roots;  // ascending by root
  UPoly residual;                                           // no integer roots
  std::vector<IsolatingInterval> isolating_intervals;       // distinct real roots of residual

  unsigned integer_root_count() const;
  /// Rebuilds the input polynomial from the factors (monic-normalized input only).
  UPoly reconstruct() const;
};

/// Every integer root with its multiplicity. The residual is the monic cofactor.
/// Candidates are divisors of the lowest nonzero coefficient that lie inside a
/// root-magnitude bound. When `precision` is set the residual's real roots are
/// isolated and refined to that width.
RootReport integer_roots(const UPoly& p, const std::optional<Rational>& precision = std::nullopt);

/// Cheap test: do all roots of p lie in the integers?
bool splits_over_integers(const UPoly& p);

/// Upper bound on |root| for every complex root (Fujiwara), rounded up to an integer.
Integer root_bound(const UPoly& p);

/// p / gcd(p, p'), monic.
UPoly square_free_part(const UPoly& p);

/// Yun decomposition p = c * prod f_i^i with f_i square-free and pairwise coprime.
/// Only factors of positive degree are returned, paired with their multiplicity.
std::vector<std::pair<UPoly, unsigned>> square_free_decomposition(const UPoly& p);

/// Signed remainder sequence of p and p'. Scaled by positive constants, so signs
/// at any point match the textbook sequence.
std::vector<UPoly> sturm_sequence(const UPoly& p);

/// Number of distinct real roots of p in the half-open interval (a, b].
/// p need not be square-free; its square-free part is used. Throws if a >= b.
unsigned sturm_count(const UPoly& p, const Rational& a, const Rational& b);

/// Roots in (a, b] counted with multiplicity.
unsigned count_roots_with_multiplicity(const UPoly& p, const Rational& a, const Rational& b);

/// Roots in the open interval (a, b), distinct.
unsigned count_roots_open(const UPoly& p, const Rational& a, const Rational& b);

/// Counts roots of one fixed polynomial with multiplicity, reusing its Sturm
/// chains across queries.
class RootCounter {
 public:
  explicit RootCounter(const UPoly& p);
  /// Roots in (a, b] with multiplicity; throws if a >= b.
  unsigned count(const Rational& a, const Rational& b) const;
  /// Roots strictly greater than x, with multiplicity.
  unsigned count_above(const Rational& x) const;
  /// Roots less than or equal to x, with multiplicity.
  unsigned count_at_most(const Rational& x) const { return total_ - count_above(x); }
  unsigned multiplicity_at(const Rational& x) const;
  /// Number of real roots with multiplicity.
  unsigned total() const { return total_; }

 private:
  std::vector<std::pair<std::vector<UPoly>, unsigned>> chains_;
  Rational below_;
  unsigned total_ = 0;
};

/// Disjoint isolating intervals for the distinct real roots of p, ascending, each
/// of width <= precision. Integer roots are reported as exact point intervals.
std::vector<IsolatingInterval> isolate_roots(const UPoly& p, const Rational& precision);

/// Returns q / p when p divides q in Q[x]. Throws on p == 0.
std::optional<UPoly> divides(const UPoly& p, const UPoly& q);

/// A real root with multiplicity, placed exactly enough to be ordered against every
/// other root of the same polynomial and against every integer.
struct RealRoot {
  IsolatingInterval where;
  unsigned multiplicity = 1;

  bool is_integer() const { return where.exact() && where.lo.get_den() == 1; }
};

/// All real roots of p with multiplicity, ascending. Irrational roots are refined
/// until their interval has width <= precision and lies strictly between two
/// consecutive integers.
std::vector<RealRoot> real_roots(const UPoly& p, const Rational& precision);

}  // namespace lapint
