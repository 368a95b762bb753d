#include "lapint/roots.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lapint {

namespace {

// Divides by a positive rational so coefficients become coprime integers;
// the sign of the polynomial at every point is unchanged.
UPoly positive_normalize(const UPoly& p) {
  if (p.is_zero()) return p;
  std::vector<Integer> z = p.primitive_integer();
  if (p.leading() < 0) {
    for (auto& c : z) c = -c;
  }
  return UPoly::from_integers(z);
}

// Synthetic division of an integer polynomial by (x - r); returns the remainder.
Integer synthetic_divide(std::vector<Integer>& ascending, const Integer& r) {
  std::size_t n = ascending.size();
  std::vector<Integer> quotient(n - 1);
  Integer carry = ascending[n - 1];
  for (std::size_t k = n - 1; k-- > 0;) {
    quotient[k] = carry;
    carry = ascending[k] + carry * r;
  }
  if (carry == 0) ascending = std::move(quotient);
  return carry;
}

Integer evaluate_integer(const std::vector<Integer>& ascending, const Integer& x) {
  Integer acc = 0;
  for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) acc = acc * x + *it;
  return acc;
}

class SturmChain {
 public:
  explicit SturmChain(const UPoly& square_free) : seq_(sturm_sequence(square_free)) {}

  unsigned variations(const Rational& x) const {
    unsigned changes = 0;
    int last = 0;
    for (const auto& q : seq_) {
      int s = q.sign_at(x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  unsigned count(const Rational& a, const Rational& b) const {
    return variations(a) - variations(b);
  }

  const UPoly& poly() const { return seq_.front(); }

 private:
  std::vector<UPoly> seq_;
};

// One step of bisection on an interval known to hold exactly one root of `chain`.
void halve(IsolatingInterval& iv, const SturmChain& chain) {
  if (iv.exact()) return;
  Rational mid = iv.midpoint();
  if (chain.poly().evaluate(mid) == 0) {
    iv.lo = iv.hi = mid;
  } else if (chain.count(iv.lo, mid) == 1) {
    iv.hi = mid;
  } else {
    iv.lo = mid;
  }
}

bool excludes_integers(const IsolatingInterval& iv) {
  return iv.exact() || floor(iv.hi) <= iv.lo;
}

void refine(IsolatingInterval& iv, const SturmChain& chain, const Rational& precision,
            bool avoid_integers) {
  if (!iv.exact() && chain.poly().evaluate(iv.hi) == 0) iv.lo = iv.hi;
  while (!iv.exact() && (iv.width() > precision || (avoid_integers && !excludes_integers(iv)))) {
    halve(iv, chain);
  }
}

// Disjoint isolating intervals for a square-free polynomial, ascending.
std::vector<IsolatingInterval> isolate_square_free(const SturmChain& chain) {
  std::vector<IsolatingInterval> out;
  if (chain.poly().degree() < 1) return out;
  Rational bound(root_bound(chain.poly()) + 1);
  std::vector<IsolatingInterval> stack{{-bound, bound}};
  while (!stack.empty()) {
    IsolatingInterval iv = stack.back();
    stack.pop_back();
    unsigned c = chain.count(iv.lo, iv.hi);
    if (c == 0) continue;
    if (c == 1) {
      out.push_back(iv);
      continue;
    }
    Rational mid = iv.midpoint();
    stack.push_back({mid, iv.hi});
    stack.push_back({iv.lo, mid});
  }
  std::sort(out.begin(), out.end(),
            [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
  return out;
}

bool ascending(const IsolatingInterval& a, const IsolatingInterval& b) {
  if (a.lo != b.lo) return a.lo < b.lo;
  return a.exact() && !b.exact();
}

bool overlaps(const IsolatingInterval& a, const IsolatingInterval& b) {
  if (a.exact() && b.exact()) return a.lo == b.lo;
  if (a.exact()) return b.lo < a.lo && a.lo <= b.hi;
  if (b.exact()) return a.lo < b.lo && b.lo <= a.hi;
  return a.lo < b.hi && b.lo < a.hi;
}

}  // namespace

unsigned RootReport::integer_root_count() const {
  unsigned total = 0;
  for (const auto& [r, m] : integer_roots) total += m;
  return total;
}

UPoly RootReport::reconstruct() const {
  UPoly out = residual;
  for (const auto& [r, m] : integer_roots) out *= UPoly::linear_factor(Rational(r)).pow(m);
  return out;
}

Integer root_bound(const UPoly& p) {
  if (p.degree() < 1) return 0;
  const int n = p.degree();
  Rational lead = abs(p.leading());
  Integer best = 0;
  for (int k = 1; k <= n; ++k) {
    Rational ratio = abs(p.coeff(static_cast<std::size_t>(n - k))) / lead;
    if (k == n) ratio /= 2;
    if (ratio == 0) continue;
    Integer target = ceil(ratio);
    Integer m;
    mpz_root(m.get_mpz_t(), target.get_mpz_t(), static_cast<unsigned long>(k));
    Integer mk;
    mpz_pow_ui(mk.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(k));
    if (mk < target) ++m;
    best = std::max(best, m);
  }
  return 2 * best;
}

RootReport integer_roots(const UPoly& p, const std::optional<Rational>& precision) {
  if (p.is_zero()) throw std::invalid_argument("integer_roots: zero polynomial");
  RootReport report;
  std::vector<Integer> z = p.primitive_integer();

  std::vector<std::pair<Integer, unsigned>> found;
  unsigned zero_mult = 0;
  while (z.size() > 1 && z.front() == 0) {
    z.erase(z.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) found.emplace_back(Integer(0), zero_mult);

  if (z.size() > 1) {
    const Integer bound = root_bound(UPoly::from_integers(z));
    const Integer c0 = abs(z.front());
    std::set<Integer> candidates;
    for (Integer d = 1; d <= bound && d * d <= c0; ++d) {
      if (!mpz_divisible_p(c0.get_mpz_t(), d.get_mpz_t())) continue;
      Integer e = c0 / d;
      for (const Integer& cand : {d, e}) {
        if (cand > bound) continue;
        if (evaluate_integer(z, cand) == 0) candidates.insert(cand);
        if (evaluate_integer(z, -cand) == 0) candidates.insert(-cand);
      }
    }
    for (const auto& r : candidates) {
      unsigned mult = 0;
      while (z.size() > 1 && synthetic_divide(z, r) == 0) ++mult;
      if (mult > 0) found.emplace_back(r, mult);
    }
  }
  std::sort(found.begin(), found.end());
  report.integer_roots = std::move(found);

  UPoly product = UPoly::constant(1);
  for (const auto& [r, m] : report.integer_roots) product *= UPoly::linear_factor(Rational(r)).pow(m);
  report.residual = UPoly::divmod(p, product).first;

  if (precision) {
    if (*precision <= 0) throw std::invalid_argument("precision must be positive");
    SturmChain chain(square_free_part(report.residual));
    report.isolating_intervals = isolate_square_free(chain);
    for (auto& iv : report.isolating_intervals) refine(iv, chain, *precision, true);
  }
  return report;
}

bool splits_over_integers(const UPoly& p) { return integer_roots(p).residual.degree() == 0; }

UPoly square_free_part(const UPoly& p) {
  if (p.degree() < 1) return p.is_zero() ? p : UPoly::constant(1);
  UPoly g = UPoly::gcd(p, p.derivative());
  return UPoly::divmod(p, g).first.monic();
}

std::vector<std::pair<UPoly, unsigned>> square_free_decomposition(const UPoly& p) {
  std::vector<std::pair<UPoly, unsigned>> out;
  if (p.degree() < 1) return out;
  UPoly f = p.monic();
  UPoly df = f.derivative();
  UPoly a = UPoly::gcd(f, df);
  UPoly b = UPoly::divmod(f, a).first;
  UPoly c = UPoly::divmod(df, a).first;
  UPoly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() >= 1) {
    UPoly g = UPoly::gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, i);
    b = UPoly::divmod(b, g).first;
    c = UPoly::divmod(d, g).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(positive_normalize(p));
  UPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(positive_normalize(d));
  for (;;) {
    UPoly r = UPoly::divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(positive_normalize(-r));
  }
  return seq;
}

unsigned sturm_count(const UPoly& p, const Rational& a, const Rational& b) {
  if (a >= b) throw std::invalid_argument("sturm_count: empty interval (a >= b)");
  if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
  UPoly sf = square_free_part(p);
  if (sf.degree() < 1) return 0;
  return SturmChain(sf).count(a, b);
}

unsigned count_roots_with_multiplicity(const UPoly& p, const Rational& a, const Rational& b) {
  if (a >= b) throw std::invalid_argument("count_roots_with_multiplicity: empty interval");
  unsigned total = 0;
  for (const auto& [factor, mult] : square_free_decomposition(p)) {
    total += mult * SturmChain(factor).count(a, b);
  }
  return total;
}

unsigned count_roots_open(const UPoly& p, const Rational& a, const Rational& b) {
  unsigned c = sturm_count(p, a, b);
  return p.evaluate(b) == 0 ? c - 1 : c;
}

RootCounter::RootCounter(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("RootCounter: zero polynomial");
  below_ = -Rational(root_bound(p) + 1);
  Rational above = -below_;
  for (const auto& [factor, mult] : square_free_decomposition(p)) {
    chains_.emplace_back(sturm_sequence(factor), mult);
  }
  total_ = count(below_, above);
}

namespace {

unsigned chain_variations(const std::vector<UPoly>& seq, const Rational& x) {
  unsigned changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

unsigned RootCounter::count(const Rational& a, const Rational& b) const {
  if (a >= b) throw std::invalid_argument("RootCounter::count: empty interval (a >= b)");
  unsigned total = 0;
  for (const auto& [seq, mult] : chains_) total += mult * (chain_variations(seq, a) - chain_variations(seq, b));
  return total;
}

unsigned RootCounter::count_above(const Rational& x) const {
  if (x < below_) return total_;
  Rational top = -below_;
  if (x >= top) return 0;
  return count(x, top);
}

unsigned RootCounter::multiplicity_at(const Rational& x) const {
  for (const auto& [seq, mult] : chains_) {
    if (seq.front().evaluate(x) == 0) return mult;
  }
  return 0;
}

std::vector<IsolatingInterval> isolate_roots(const UPoly& p, const Rational& precision) {
  RootReport report = integer_roots(p, precision);
  std::vector<IsolatingInterval> out = report.isolating_intervals;
  for (const auto& [r, m] : report.integer_roots) out.push_back({Rational(r), Rational(r)});
  std::sort(out.begin(), out.end(), ascending);
  return out;
}

std::optional<UPoly> divides(const UPoly& p, const UPoly& q) {
  if (p.is_zero()) throw std::invalid_argument("divides: zero divisor");
  auto [quot, rem] = UPoly::divmod(q, p);
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

std::vector<RealRoot> real_roots(const UPoly& p, const Rational& precision) {
  if (precision <= 0) throw std::invalid_argument("precision must be positive");
  RootReport report = integer_roots(p);

  struct Tracked {
    IsolatingInterval iv;
    unsigned mult;
    std::size_t chain;
  };
  std::vector<SturmChain> chains;
  std::vector<Tracked> roots;
  for (const auto& [factor, mult] : square_free_decomposition(report.residual)) {
    chains.emplace_back(factor);
  }
  {
    std::size_t idx = 0;
    for (const auto& [factor, mult] : square_free_decomposition(report.residual)) {
      for (auto iv : isolate_square_free(chains[idx])) {
        refine(iv, chains[idx], precision, true);
        roots.push_back({iv, mult, idx});
      }
      ++idx;
    }
  }
  // Roots of different square-free factors are distinct; shrink until disjoint.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        while (overlaps(roots[i].iv, roots[j].iv)) {
          halve(roots[i].iv, chains[roots[i].chain]);
          halve(roots[j].iv, chains[roots[j].chain]);
          changed = true;
        }
      }
    }
  }

  std::vector<RealRoot> out;
  for (const auto& [r, m] : report.integer_roots) out.push_back({{Rational(r), Rational(r)}, m});
  for (const auto& t : roots) out.push_back({t.iv, t.mult});
  std::sort(out.begin(), out.end(),
            [](const RealRoot& a, const RealRoot& b) { return ascending(a.where, b.where); });
  return out;
}

}  // namespace lapint
