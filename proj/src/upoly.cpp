#include "lapint/upoly.hpp"

#include <stdexcept>

namespace lapint {

UPoly::UPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

UPoly UPoly::from_integers(const std::vector<Integer>& ascending) {
  std::vector<Rational> c;
  c.reserve(ascending.size());
  for (const auto& z : ascending) c.emplace_back(z);
  return UPoly(std::move(c));
}

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::linear_factor(const Rational& root) { return UPoly({-root, Rational(1)}); }

UPoly UPoly::monomial(unsigned degree, const Rational& c) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::from_mpoly(const MPoly& p, std::string_view var) {
  const auto& vars = p.variables();
  int idx = -1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == var) idx = static_cast<int>(i);
  }
  std::vector<Rational> c;
  for (const auto& [exps, coeff] : p.terms()) {
    unsigned k = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (static_cast<int>(i) == idx) {
        k = exps[i];
      } else if (exps[i] != 0) {
        throw std::invalid_argument("polynomial is not univariate in " + std::string(var) + ": " +
                                    p.to_string());
      }
    }
    if (c.size() <= k) c.resize(k + 1, Rational(0));
    c[k] += Rational(coeff);
  }
  return UPoly(std::move(c));
}

MPoly UPoly::to_mpoly(const std::string& var) const {
  if (!has_integer_coefficients()) {
    throw std::domain_error("MPoly has integer coefficients; polynomial has fractions: " +
                            to_string(var));
  }
  MPoly x = MPoly::variable(var);
  MPoly out;
  MPoly power(1);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] != 0) out += MPoly(c_[k].get_num()) * power;
    if (k + 1 < c_.size()) power *= x;
  }
  return out;
}

const Rational& UPoly::leading() const {
  if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return c_.back();
}

Rational UPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return {};
  UPoly out = *this;
  Rational lead = c_.back();
  for (auto& q : out.c_) q /= lead;
  return out;
}

bool UPoly::has_integer_coefficients() const {
  for (const auto& q : c_) {
    if (q.get_den() != 1) return false;
  }
  return true;
}

std::vector<Integer> UPoly::primitive_integer() const {
  Integer lcm = 1;
  for (const auto& q : c_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(c_.size());
  Integer content = 0;
  for (const auto& q : c_) {
    Integer z = q.get_num() * (lcm / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    out.push_back(std::move(z));
  }
  if (content == 0) return out;
  if (out.back() < 0) content = -content;
  for (auto& z : out) z /= content;
  return out;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly& UPoly::operator+=(const UPoly& rhs) {
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Rational(0));
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& rhs) {
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Rational(0));
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& rhs) { return *this = *this * rhs; }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(c));
}

UPoly operator-(UPoly a) {
  for (auto& q : a.c_) q = -q;
  return a;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly result = constant(1);
  UPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& dividend, const UPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (dividend.degree() < divisor.degree()) return {UPoly(), dividend};
  std::vector<Rational> rem = dividend.c_;
  std::vector<Rational> quot(dividend.c_.size() - divisor.c_.size() + 1, Rational(0));
  const Rational& lead = divisor.c_.back();
  for (std::size_t i = quot.size(); i-- > 0;) {
    Rational f = rem[i + divisor.c_.size() - 1] / lead;
    quot[i] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < divisor.c_.size(); ++j) rem[i + j] -= f * divisor.c_[j];
  }
  rem.resize(divisor.c_.size() - 1);
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& q = c_[k];
    if (q == 0) continue;
    bool negative = q < 0;
    Rational mag = abs(q);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (mono.empty()) {
      out += lapint::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += lapint::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.to_string(); }

}  // namespace lapint
