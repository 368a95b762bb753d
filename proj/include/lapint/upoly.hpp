#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "lapint/arith.hpp"
#include "lapint/mpoly.hpp"

namespace lapint {

/// Dense univariate polynomial over the rationals, coefficients in ascending order.
/// The coefficient vector never has a trailing zero; the zero polynomial is empty.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> ascending);
  static UPoly from_integers(const std::vector<Integer>& ascending);
  static UPoly constant(const Rational& c);
  /// x - r
  static UPoly linear_factor(const Rational& root);
  static UPoly monomial(unsigned degree, const Rational& c = 1);

  /// Throws std::invalid_argument if `p` has a variable other than `var`.
  static UPoly from_mpoly(const MPoly& p, std::string_view var = "λ");
  MPoly to_mpoly(const std::string& var = "λ") const;

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  /// Coefficient of x^k (zero beyond the degree).
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const;

  Rational evaluate(const Rational& x) const;
  int sign_at(const Rational& x) const { return sgn(evaluate(x)); }

  UPoly derivative() const;
  UPoly monic() const;
  bool has_integer_coefficients() const;
  /// Integer polynomial with the same roots: denominators cleared and content removed,
  /// positive leading coefficient.
  std::vector<Integer> primitive_integer() const;

  UPoly& operator+=(const UPoly& rhs);
  UPoly& operator-=(const UPoly& rhs);
  UPoly& operator*=(const UPoly& rhs);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator-(UPoly a);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly pow(unsigned e) const;

  /// Euclidean division; `divisor` must be nonzero.
  static std::pair<UPoly, UPoly> divmod(const UPoly& dividend, const UPoly& divisor);
  /// Monic gcd (zero if both are zero).
  static UPoly gcd(UPoly a, UPoly b);

  std::string to_string(const std::string& var = "λ") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const UPoly& p);

}  // namespace lapint
