#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "lapint/enumerator.hpp"
#include "lapint/family_config.hpp"
#include "lapint/matrix.hpp"
#include "lapint/proposition_cases.hpp"
#include "lapint/spectral.hpp"
#include "support.hpp"

using namespace lapint;

namespace {

UPoly up(const char* text) { return UPoly::from_mpoly(MPoly::parse(text)); }

}  // namespace

TEST_CASE("characteristic polynomials") {
  CHECK(char_poly(IntMatrix{{2}}) == up("λ-2"));
  const IntMatrix a3 = path_interior_block(3);
  CHECK(char_poly(a3) == up("λ^3-6λ^2+10λ-4"));
  const RootReport r = integer_roots(char_poly(a3));
  REQUIRE(r.integer_roots.size() == 1);
  CHECK(r.integer_roots[0].first == 2);
  CHECK(r.residual == up("λ^2-4λ+2"));
  CHECK_THROWS(char_poly(IntMatrix(2, 3)));
}

TEST_CASE("symbolic characteristic polynomial of a parametric quotient") {
  const PolyMatrix r = build_quotient(find_case("4.4"));
  CHECK(char_poly(r) == MPoly::parse("λ^6+(-2s-12)λ^5+(s^2+18s+55)λ^4+(-6s^2-56s-120)λ^3+(10s^2+70s+125)λ^2+(-4s^2-30s-50)λ"));
}

TEST_CASE("Berkowitz agrees with Gaussian elimination") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> lambda(-9, 9);
  for (int k = 0; k < 40; ++k) {
    const IntMatrix m = testing::random_symmetric(rng, 1 + k % 8, 4);
    const UPoly p = char_poly(m);
    CHECK(p.degree() == static_cast<int>(m.rows()));
    CHECK(p.leading() == 1);
    CHECK(p.coeff(m.rows() - 1) == -Rational(m.trace()));
    for (int i = 0; i < 5; ++i) {
      const Rational x(lambda(rng));
      CHECK(p.evaluate(x) == testing::char_poly_at(m, x));
    }
  }
}

TEST_CASE("principal submatrices") {
  const IntMatrix l = laplacian(realize(FamilyConfig::g2(false, {4, 5, 3}, {}, {})));
  const std::size_t hubs[] = {0, 1};
  const IntMatrix b = principal_submatrix(l, hubs);
  const IntMatrix blocks[] = {path_interior_block(2), path_interior_block(3), path_interior_block(1)};
  CHECK(b == block_diag<Integer>(blocks));
  CHECK(principal_submatrix(l, std::span<const std::size_t>{}) == l);
  std::vector<std::size_t> all_but_two;
  for (std::size_t i = 0; i < l.rows(); ++i) {
    if (i != 2) all_but_two.push_back(i);
  }
  const IntMatrix one = principal_submatrix(l, all_but_two);
  CHECK(one.rows() == 1);
  CHECK(one(0, 0) == l(2, 2));
  const std::size_t bad[] = {99};
  CHECK_THROWS(principal_submatrix(l, bad));
}

TEST_CASE("block assembly") {
  const IntMatrix a1[] = {path_interior_block(1)};
  CHECK(block_diag<Integer>(a1) == IntMatrix{{2}});
  const IntMatrix a2[] = {path_interior_block(2), path_interior_block(2)};
  CHECK(determinant(path_interior_block(2)) == 3);
  CHECK(determinant(block_diag<Integer>(a2)) == 9);

  const AssembledLaplacian asm3 = assemble_g2_laplacian(FamilyConfig::g2(true, {3, 3, 3}, {}, {}));
  CHECK(asm3.matrix(0, 0) == 4);
  CHECK(asm3.matrix(1, 1) == 4);
  CHECK(asm3.matrix(0, 1) == -1);
  const AssembledLaplacian plain = assemble_g2_laplacian(FamilyConfig::g2(false, {3, 3, 3}, {}, {}));
  CHECK(plain.matrix(0, 0) == 3);
  CHECK(plain.matrix(0, 1) == 0);
}

TEST_CASE("assembled Laplacian equals the Laplacian of the realized graph") {
  for (std::size_t n = 4; n <= 10; ++n) {
    for (Family f : {Family::G1, Family::G2}) {
      for (const FamilyConfig& cfg : enumerate_family(f, n)) CHECK(assemble_laplacian(cfg).matrix == laplacian(realize(cfg)));
    }
  }
}

TEST_CASE("Cauchy interlacing on random principal submatrices") {
  std::mt19937_64 rng(37);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 2 + k % 7;
    const IntMatrix m = testing::random_symmetric(rng, n, 3);
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(1 + k % (n - 1));
    CHECK(principal_interlacing_check(m, idx).holds);
  }
}
