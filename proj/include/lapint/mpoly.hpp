#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lapint/arith.hpp"

namespace lapint {

/// Sparse multivariate polynomial with arbitrary-precision integer coefficients.
///
/// Variables are named symbols. Binary operations on polynomials over different
/// variable lists work over the union of both lists (left operand's order first),
/// so integer constants, which carry no variables, mix freely with anything.
/// Terms are kept in graded-lexicographic order, largest first, and zero
/// coefficients are never stored.
class MPoly {
 public:
  using Exponents = std::vector<unsigned>;

  struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, Integer, GrlexGreater>;

  MPoly() = default;
  MPoly(long constant);  // NOLINT(google-explicit-constructor): ring literals
  explicit MPoly(Integer constant);

  static MPoly variable(std::string name);

  /// Accepts sums of products of integers, single-letter variables (ASCII or λ),
  /// parentheses and non-negative integer powers. Juxtaposition multiplies:
  /// "(s^2+2st-1)λ^3" is valid.
  static MPoly parse(std::string_view text);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value; throws if the polynomial is not constant.
  Integer constant_value() const;

  /// Highest exponent of `var` appearing in any term (0 if absent).
  unsigned degree_in(std::string_view var) const;
  unsigned total_degree() const;

  /// Coefficient of var^k, as a polynomial in the remaining variables.
  MPoly coefficient(std::string_view var, unsigned k) const;

  /// Replaces variable `var` by the given polynomial.
  MPoly substitute(std::string_view var, const MPoly& value) const;

  /// Exact evaluation. Every variable with a nonzero exponent must be assigned.
  Rational evaluate(const std::map<std::string, Rational>& assignment) const;

  /// Partial evaluation at rational values is not closed over integer coefficients,
  /// so it is restricted to integer values.
  MPoly evaluate_partial(const std::map<std::string, Integer>& assignment) const;

  MPoly rename(std::string_view from, std::string_view to) const;

  /// Drops variables that appear in no term.
  MPoly compact() const;

  MPoly pow(unsigned e) const;

  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a);

  /// Semantic equality, independent of variable-list order.
  friend bool operator==(const MPoly& a, const MPoly& b);

  /// Canonical text form, e.g. "λ^2 - 2*λ*s + 1".
  std::string to_string() const;

 private:
  MPoly(std::vector<std::string> vars, TermMap terms);

  static std::vector<std::string> merged_variables(const std::vector<std::string>& a,
                                                   const std::vector<std::string>& b);
  MPoly embedded(const std::vector<std::string>& vars) const;
  int index_of(std::string_view var) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

}  // namespace lapint
