#include <doctest.h>

#include <random>

#include "lapint/graph.hpp"
#include "lapint/mpoly.hpp"
#include "lapint/roots.hpp"
#include "lapint/spectral.hpp"
#include "lapint/upoly.hpp"

using namespace lapint;

namespace {

UPoly up(const char* text) { return UPoly::from_mpoly(MPoly::parse(text)); }

}  // namespace

TEST_CASE("rational parsing is decimal even with leading zeros") {
  CHECK(parse_rational("023") == 23);
  CHECK(parse_rational("0.23") == Rational(23, 100));
  CHECK(parse_rational("-7/14") == Rational(-1, 2));
  CHECK(parse_rational("1e-6") == pow10_inverse(6));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(to_decimal(Rational(1268, 1000), 2) == "1.27");
}

TEST_CASE("multivariate arithmetic") {
  const MPoly l = MPoly::variable("λ");
  CHECK((l - 1) * (l - 1) == MPoly::parse("λ^2 - 2λ + 1"));
  CHECK(MPoly::parse("λ^2-6λ+6").evaluate({{"λ", 1}}) == 1);
  CHECK(MPoly::parse("(s+t)^2") == MPoly::parse("s^2 + 2st + t^2"));
  CHECK(MPoly::parse("s^2-1").coefficient("s", 2) == 1);
  CHECK(MPoly::parse("λs - λ").substitute("λ", MPoly::parse("2")) == MPoly::parse("2s-2"));
  CHECK(MPoly::parse("2*s*t - 3").to_string() == "2*s*t - 3");
  CHECK(MPoly::parse("0").is_zero());
  CHECK_THROWS(MPoly::parse("s^"));
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-5, 5);
  auto random_poly = [&] {
    MPoly p;
    for (unsigned i = 0; i < 3; ++i) {
      for (unsigned j = 0; j + i < 3; ++j) {
        p += MPoly(c(rng)) * MPoly::variable("s").pow(i) * MPoly::variable("t").pow(j);
      }
    }
    return p;
  };
  for (int k = 0; k < 50; ++k) {
    const MPoly a = random_poly();
    const MPoly b = random_poly();
    std::map<std::string, Rational> at{{"s", Rational(c(rng), 3)}, {"t", Rational(c(rng), 2)}};
    for (auto& [name, value] : at) value.canonicalize();
    CHECK((a * b).evaluate(at) == a.evaluate(at) * b.evaluate(at));
    CHECK((a + b).evaluate(at) == a.evaluate(at) + b.evaluate(at));
  }
}

TEST_CASE("integer roots") {
  SUBCASE("L(P_3)") {
    const RootReport r = integer_roots(up("λ^3-4λ^2+3λ"));
    REQUIRE(r.integer_roots.size() == 3);
    CHECK(r.integer_roots[0].first == 0);
    CHECK(r.integer_roots[1].first == 1);
    CHECK(r.integer_roots[2].first == 3);
    CHECK(r.residual == UPoly::constant(1));
  }
  SUBCASE("quartic with a quadratic residual") {
    const RootReport r = integer_roots(up("λ^4-12λ^3+50λ^2-84λ+48"));
    REQUIRE(r.integer_roots.size() == 2);
    CHECK(r.integer_roots[0] == std::pair<Integer, unsigned>{2, 1});
    CHECK(r.integer_roots[1] == std::pair<Integer, unsigned>{4, 1});
    CHECK(r.residual == up("λ^2-6λ+6"));
  }
  SUBCASE("no real roots") {
    const RootReport r = integer_roots(up("λ^2+1"));
    CHECK(r.integer_roots.empty());
    CHECK(r.residual == up("λ^2+1"));
  }
  CHECK_THROWS(integer_roots(UPoly()));
}

TEST_CASE("integer roots recover random linear factors") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> root(-6, 9);
  std::uniform_int_distribution<int> count(1, 6);
  for (int k = 0; k < 60; ++k) {
    std::map<int, unsigned> expected;
    UPoly p = UPoly::constant(1);
    for (int i = count(rng); i > 0; --i) {
      const int r = root(rng);
      ++expected[r];
      p *= UPoly::linear_factor(r);
    }
    p *= up("λ^2+λ+1");
    const RootReport rep = integer_roots(p);
    std::map<int, unsigned> found;
    for (const auto& [r, m] : rep.integer_roots) found[static_cast<int>(r.get_si())] = m;
    CHECK(found == expected);
    CHECK(rep.residual == up("λ^2+λ+1"));
    CHECK(rep.reconstruct() == p);
  }
}

TEST_CASE("Sturm counting") {
  CHECK(sturm_count(up("λ^2-6λ+6"), 1, 2) == 1);
  CHECK(sturm_count(up("λ^2+1"), -10, 10) == 0);
  CHECK(sturm_count(characteristic_polynomial(path(7), MatrixKind::L), 0, 1) == 2);
  CHECK_THROWS(sturm_count(up("λ-1"), 2, 1));
  // Half-open: a root at the right end counts, at the left end it does not.
  CHECK(sturm_count(up("λ-1"), 0, 1) == 1);
  CHECK(sturm_count(up("λ-1"), 1, 2) == 0);
  CHECK(count_roots_with_multiplicity(up("(λ-2)^3(λ+1)"), 0, 5) == 3);
}

TEST_CASE("Sturm counts add over a subdivision") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-20, 20);
  for (int k = 0; k < 40; ++k) {
    std::vector<Rational> co;
    for (int i = 0; i < 6; ++i) co.emplace_back(c(rng));
    co.emplace_back(1);
    const UPoly p(co);
    const Rational a = -30;
    const Rational m(c(rng), 7);
    const Rational b = 30;
    CHECK(sturm_count(p, a, m) + sturm_count(p, m, b) == sturm_count(p, a, b));
  }
}

TEST_CASE("root isolation") {
  auto decimals = [](const UPoly& p) {
    std::vector<std::string> out;
    for (const auto& iv : isolate_roots(p, Rational(1, 100))) {
      CHECK(iv.width() <= Rational(1, 100));
      out.push_back(to_decimal(iv.midpoint(), 2));
    }
    return out;
  };
  CHECK(decimals(up("λ^2-6λ+6")) == std::vector<std::string>{"1.27", "4.73"});
  CHECK(decimals(up("λ^2-7λ+8")) == std::vector<std::string>{"1.44", "5.56"});
  const auto five = isolate_roots(up("λ-5"), Rational(1, 100));
  REQUIRE(five.size() == 1);
  CHECK(five[0].exact());
  CHECK(five[0].lo == 5);
}

TEST_CASE("divisibility") {
  auto q = divides(up("λ-1"), up("λ^2-1"));
  REQUIRE(q);
  CHECK(*q == up("λ+1"));
  CHECK(divides(up("λ^2-6λ"), characteristic_polynomial(star(6), MatrixKind::L)));
  CHECK_FALSE(divides(up("λ^2+1"), up("λ^3-4λ^2+3λ")));
  CHECK_THROWS(divides(UPoly(), up("λ")));
}

TEST_CASE("square-free decomposition") {
  const UPoly p = up("(λ-1)^3 (λ+2)^2 (λ^2+1)");
  UPoly rebuilt = UPoly::constant(1);
  for (const auto& [f, m] : square_free_decomposition(p)) rebuilt *= f.pow(m);
  CHECK(rebuilt.monic() == p.monic());
  CHECK(square_free_part(p) == up("(λ-1)(λ+2)(λ^2+1)"));
}
