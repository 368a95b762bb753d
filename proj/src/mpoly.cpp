#include "lapint/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lapint {

bool MPoly::GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da > db;
  return a > b;
}

MPoly::MPoly(long constant) : MPoly(Integer(constant)) {}

MPoly::MPoly(Integer constant) {
  if (constant != 0) terms_.emplace(Exponents{}, std::move(constant));
}

MPoly::MPoly(std::vector<std::string> vars, TermMap terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {}

MPoly MPoly::variable(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  TermMap terms;
  terms.emplace(Exponents{1}, Integer(1));
  return MPoly({std::move(name)}, std::move(terms));
}

bool MPoly::is_constant() const {
  for (const auto& [exps, coeff] : terms_) {
    for (unsigned e : exps) {
      if (e != 0) return false;
    }
  }
  return true;
}

Integer MPoly::constant_value() const {
  if (!is_constant()) throw std::domain_error("polynomial is not constant: " + to_string());
  return terms_.empty() ? Integer(0) : terms_.begin()->second;
}

int MPoly::index_of(std::string_view var) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == var) return static_cast<int>(i);
  }
  return -1;
}

unsigned MPoly::degree_in(std::string_view var) const {
  int idx = index_of(var);
  if (idx < 0) return 0;
  unsigned best = 0;
  for (const auto& [exps, coeff] : terms_) best = std::max(best, exps[idx]);
  return best;
}

unsigned MPoly::total_degree() const {
  // Grlex order puts the highest total degree first.
  if (terms_.empty()) return 0;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0u);
}

std::vector<std::string> MPoly::merged_variables(const std::vector<std::string>& a,
                                                 const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

MPoly MPoly::embedded(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<std::size_t> position(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it == vars.end()) throw std::logic_error("variable missing from embedding: " + vars_[i]);
    position[i] = static_cast<std::size_t>(it - vars.begin());
  }
  TermMap out;
  for (const auto& [exps, coeff] : terms_) {
    Exponents e(vars.size(), 0);
    for (std::size_t i = 0; i < exps.size(); ++i) e[position[i]] = exps[i];
    out.emplace(std::move(e), coeff);
  }
  return MPoly(vars, std::move(out));
}

MPoly MPoly::coefficient(std::string_view var, unsigned k) const {
  int idx = index_of(var);
  if (idx < 0) return k == 0 ? *this : MPoly();
  TermMap out;
  for (const auto& [exps, coeff] : terms_) {
    if (exps[idx] != k) continue;
    Exponents e = exps;
    e[idx] = 0;
    out.emplace(std::move(e), coeff);
  }
  return MPoly(vars_, std::move(out)).compact();
}

MPoly MPoly::substitute(std::string_view var, const MPoly& value) const {
  int idx = index_of(var);
  if (idx < 0) return *this;
  MPoly result;
  // Group by the exponent of `var` so each power of `value` is computed once.
  std::map<unsigned, TermMap> by_power;
  for (const auto& [exps, coeff] : terms_) {
    Exponents e = exps;
    unsigned k = e[idx];
    e[idx] = 0;
    by_power[k].emplace(std::move(e), coeff);
  }
  MPoly power(1);
  unsigned current = 0;
  for (auto& [k, terms] : by_power) {
    while (current < k) {
      power *= value;
      ++current;
    }
    result += MPoly(vars_, std::move(terms)) * power;
  }
  return result.compact();
}

Rational MPoly::evaluate(const std::map<std::string, Rational>& assignment) const {
  std::vector<const Rational*> values(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (auto it = assignment.find(vars_[i]); it != assignment.end()) values[i] = &it->second;
  }
  Rational total = 0;
  for (const auto& [exps, coeff] : terms_) {
    Rational term(coeff);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (values[i] == nullptr) {
        throw std::invalid_argument("no value assigned to variable '" + vars_[i] + "'");
      }
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), values[i]->get_num_mpz_t(), exps[i]);
      mpz_pow_ui(p.get_den_mpz_t(), values[i]->get_den_mpz_t(), exps[i]);
      term *= p;
    }
    total += term;
  }
  return total;
}

MPoly MPoly::evaluate_partial(const std::map<std::string, Integer>& assignment) const {
  MPoly result = *this;
  for (const auto& [name, value] : assignment) result = result.substitute(name, MPoly(value));
  return result;
}

MPoly MPoly::rename(std::string_view from, std::string_view to) const {
  int idx = index_of(from);
  if (idx < 0) return *this;
  if (index_of(to) >= 0) return substitute(from, variable(std::string(to)));
  MPoly out = *this;
  out.vars_[idx] = std::string(to);
  return out;
}

MPoly MPoly::compact() const {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [exps, coeff] : terms_) {
    for (std::size_t i = 0; i < exps.size(); ++i) used[i] = used[i] || exps[i] != 0;
  }
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return *this;
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) vars.push_back(vars_[i]);
  }
  TermMap out;
  for (const auto& [exps, coeff] : terms_) {
    Exponents e;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (used[i]) e.push_back(exps[i]);
    }
    out.emplace(std::move(e), coeff);
  }
  return MPoly(std::move(vars), std::move(out));
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  if (vars_ != rhs.vars_) {
    auto vars = merged_variables(vars_, rhs.vars_);
    *this = embedded(vars);
    MPoly r = rhs.embedded(vars);
    return *this += r;
  }
  for (const auto& [exps, coeff] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) { return *this += -rhs; }

MPoly& MPoly::operator*=(const MPoly& rhs) { return *this = *this * rhs; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  if (a.vars_ != b.vars_) {
    auto vars = MPoly::merged_variables(a.vars_, b.vars_);
    return a.embedded(vars) * b.embedded(vars);
  }
  MPoly::TermMap out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MPoly::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Integer c = ca * cb;
      auto [it, inserted] = out.try_emplace(std::move(e), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return MPoly(a.vars_, std::move(out));
}

MPoly operator-(const MPoly& a) {
  MPoly out = a;
  for (auto& [exps, coeff] : out.terms_) coeff = -coeff;
  return out;
}

bool operator==(const MPoly& a, const MPoly& b) { return (a - b).is_zero(); }

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exps, coeff] : terms_) {
    bool negative = coeff < 0;
    Integer mag = abs(coeff);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      factors.push_back(exps[i] == 1 ? vars_[i] : vars_[i] + "^" + std::to_string(exps[i]));
    }
    if (factors.empty() || mag != 1) factors.insert(factors.begin(), mag.get_str());
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  MPoly parse() {
    MPoly value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + " (" +
                                what + ") in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_factor_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    auto c = static_cast<unsigned char>(text_[pos_]);
    return std::isdigit(c) || std::isalpha(c) || c == '(' || c >= 0x80;
  }

  MPoly expression() {
    skip_space();
    bool negate = false;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    MPoly value = term();
    if (negate) value = -value;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) break;
      bool minus = text_[pos_] == '-';
      ++pos_;
      MPoly rhs = term();
      if (minus) {
        value -= rhs;
      } else {
        value += rhs;
      }
    }
    return value;
  }

  MPoly term() {
    MPoly value = factor();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        value *= factor();
      } else if (at_factor_start()) {
        value *= factor();
      } else {
        break;
      }
    }
    return value;
  }

  MPoly factor() {
    MPoly base = primary();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 4096) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MPoly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    auto c = static_cast<unsigned char>(text_[pos_]);
    if (c == '(') {
      ++pos_;
      MPoly inner = expression();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MPoly(Integer(std::string(text_.substr(start, pos_ - start)), 10));
    }
    if (std::isalpha(c)) {
      ++pos_;
      return MPoly::variable(std::string(1, static_cast<char>(c)));
    }
    if (c >= 0xC0) {
      // One UTF-8 encoded code point, e.g. λ.
      std::size_t start = pos_++;
      while (pos_ < text_.size() && (static_cast<unsigned char>(text_[pos_]) & 0xC0) == 0x80) ++pos_;
      return MPoly::variable(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly MPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace lapint
