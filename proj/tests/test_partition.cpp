#include <doctest.h>

#include "lapint/enumerator.hpp"
#include "lapint/partition.hpp"
#include "lapint/proposition_cases.hpp"
#include "lapint/spectral.hpp"

using namespace lapint;

TEST_CASE("partition text form") {
  const Partition p = Partition::parse("0 | 1 2 3 4 5");
  CHECK(p.size() == 2);
  CHECK(p.to_string() == "0 | 1 2 3 4 5");
  CHECK_NOTHROW(p.validate(6));
  CHECK_THROWS_AS(p.validate(7), InvalidPartition);
  CHECK_THROWS_AS(Partition::parse("0 1 | 1 2").validate(3), InvalidPartition);
  CHECK_THROWS_AS(Partition::parse("0 | | 1").validate(2), InvalidPartition);
  CHECK(Partition::parse("3 2 | 0 1").canonical().to_string() == "0 1 | 2 3");
}

TEST_CASE("equitable partitions") {
  const IntMatrix star_l = laplacian(star(6));
  CHECK(is_equitable(star_l, Partition::parse("0 | 1 2 3 4 5")).equitable);
  const IntMatrix p4 = laplacian(path(4));
  CHECK(is_equitable(p4, Partition::parse("0 3 | 1 2")).equitable);
  const EquitableCheck bad = is_equitable(p4, Partition::parse("0 1 | 2 3"));
  CHECK_FALSE(bad.equitable);
  REQUIRE(bad.cells);
  REQUIRE(bad.vertices);
}

TEST_CASE("quotient matrices") {
  const IntMatrix star_l = laplacian(star(6));
  CHECK(quotient_matrix(star_l, Partition::parse("0 | 1 2 3 4 5")) == IntMatrix{{5, -5}, {-1, 1}});
  CHECK(quotient_matrix(star_l, Partition::singletons(6)) == star_l);
  CHECK_THROWS_AS(quotient_matrix(laplacian(path(4)), Partition::parse("0 1 | 2 3")), InvalidPartition);

  const PropositionCase& c = find_case("4.4");
  const Params p{{"s", 3}};
  CHECK(quotient_matrix(laplacian(case_graph(c, p)), case_partition(c, p)) == build_quotient(c, p));
}

TEST_CASE("eigenvalue containment") {
  const ContainmentReport star_c = eigenvalue_containment_check(laplacian(star(6)), Partition::parse("0 | 1 2 3 4 5"));
  CHECK(star_c.quotient_poly == UPoly::from_mpoly(MPoly::parse("λ^2-6λ")));
  CHECK(star_c.divides());
  const ContainmentReport single = eigenvalue_containment_check(laplacian(cycle(5)), Partition::singletons(5));
  CHECK(single.quotient_poly == single.full_poly);
  CHECK(single.divides());

  const PropositionCase& c = find_case("4.5");
  const Params p{{"s", 2}};
  const Graph g = case_graph(c, p);
  // u, v, s middles and the five interior vertices of the long path.
  CHECK(g.order() == 9);
  const ContainmentReport r = eigenvalue_containment_check(laplacian(g), case_partition(c, p));
  CHECK(r.quotient_poly.degree() == 8);
  CHECK(r.divides());
}

TEST_CASE("coarsest equitable refinement") {
  CHECK(coarsest_equitable_refinement(laplacian(star(6)), Partition::whole(6)).to_string() == "0 | 1 2 3 4 5");
  CHECK(coarsest_equitable_refinement(laplacian(cycle(6)), Partition::whole(6)).size() == 1);

  const PropositionCase& c = find_case("4.4");
  const Params p{{"s", 4}};
  const Graph g = case_graph(c, p);
  std::vector<std::size_t> rest;
  for (std::size_t v = 2; v < g.order(); ++v) rest.push_back(v);
  const Partition seeded({{0}, {1}, rest});
  const Partition r = coarsest_equitable_refinement(laplacian(g), seeded);
  CHECK(r.size() <= 6);
  CHECK(is_equitable(laplacian(g), r).equitable);
}

TEST_CASE("refinement properties across enumerated graphs") {
  for (std::size_t n = 4; n <= 9; ++n) {
    for (Family f : {Family::G1, Family::G2}) {
      for (const FamilyConfig& cfg : enumerate_family(f, n)) {
        const Graph g = realize(cfg);
        const IntMatrix l = laplacian(g);
        std::vector<std::vector<std::size_t>> cells;
        std::vector<std::size_t> rest;
        const std::size_t hubs = f == Family::G1 ? 1 : 2;
        for (std::size_t v = 0; v < hubs; ++v) cells.push_back({v});
        for (std::size_t v = hubs; v < g.order(); ++v) rest.push_back(v);
        if (!rest.empty()) cells.push_back(rest);
        const Partition r = coarsest_equitable_refinement(l, Partition(cells));
        CHECK(is_equitable(l, r).equitable);
        CHECK(coarsest_equitable_refinement(l, r) == r);
        CHECK(eigenvalue_containment_check(l, r).divides());
        CHECK(quotient_matrix(l, Partition::singletons(g.order())) == l);
      }
    }
  }
}
