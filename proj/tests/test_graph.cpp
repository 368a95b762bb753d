#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "lapint/builder.hpp"
#include "lapint/canonical.hpp"
#include "lapint/connectivity.hpp"
#include "lapint/enumerator.hpp"
#include "lapint/family_config.hpp"
#include "lapint/graph.hpp"
#include "lapint/graph6.hpp"
#include "support.hpp"

using namespace lapint;

using Degrees = std::vector<std::size_t>;

TEST_CASE("paths") {
  CHECK(path(1).order() == 1);
  CHECK(path(1).size() == 0);
  CHECK(path(4).edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  const Degrees d = degree_sequence(path(7));
  CHECK(std::count(d.begin(), d.end(), 1u) == 2);
  CHECK_THROWS_AS(path(0), std::invalid_argument);
}

TEST_CASE("standard graphs") {
  const Graph s = star(6);
  CHECK(degree_sequence(s) == Degrees{5, 1, 1, 1, 1, 1});
  CHECK(complete_bipartite(2, 4).size() == 8);
  CHECK(cycle(3) == complete(3));
  CHECK_THROWS(cycle(2));
  CHECK_THROWS(complete_bipartite(0, 3));
  CHECK(complete(5).size() == 10);
  CHECK(empty_graph(4).size() == 0);
}

TEST_CASE("graph operations") {
  CHECK(join(complete(1), copies(complete(1), 5)) == star(6));
  const Graph prism = cartesian_product(complete(2), star(4));
  CHECK(prism.order() == 8);
  CHECK(prism.size() == 10);
  // Each K_2 vertex gains 3 neighbors from K_2 v 3K_1's other side plus its partner.
  CHECK(degree_sequence(join(complete(2), empty_graph(3))) == Degrees{4, 4, 2, 2, 2});
  const Graph u = disjoint_union(complete(1), complete(1));
  CHECK_FALSE(is_connected(u));
  CHECK(u.size() == 0);
}

TEST_CASE("operation invariants on random graphs") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 30; ++k) {
    const Graph g = testing::random_connected_graph(rng, 2 + k % 5, 0.4);
    const Graph h = testing::random_connected_graph(rng, 1 + k % 4, 0.5);
    CHECK(join(g, h).size() == g.size() + h.size() + g.order() * h.order());
    CHECK(disjoint_union(g, h).size() == g.size() + h.size());
    const Graph p = cartesian_product(g, h);
    for (Vertex a = 0; a < g.order(); ++a) {
      for (Vertex b = 0; b < h.order(); ++b) CHECK(p.degree(a * h.order() + b) == g.degree(a) + h.degree(b));
    }
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * g.size());
    for (const auto& [a, b] : g.edges()) {
      CHECK(g.adjacent(b, a));
      CHECK(a != b);
    }
  }
}

TEST_CASE("fireflies") {
  CHECK(isomorphic(firefly(0, 7, 0), star(8)));
  CHECK(isomorphic(firefly(0, 0, 1), path(3)));
  const Graph f = firefly(1, 1, 0);
  CHECK(f.order() == 4);
  CHECK(f.degree(0) == 3);
  CHECK(degree_sequence(firefly(2, 1, 1)) == Degrees{6, 2, 2, 2, 2, 2, 1, 1});
  CHECK_THROWS(firefly(0, 0, 0));
  CHECK(degree_sequence(gamma_101()) == Degrees{3, 3, 2, 2, 2, 2});
}

TEST_CASE("realize") {
  const Graph g = realize(FamilyConfig::g2(true, {3, 3}, {}, {}));
  CHECK(g.order() == 4);
  CHECK(degree_sequence(g) == Degrees{3, 3, 2, 2});
  CHECK(g.adjacent(0, 1));

  // Two paths between non-adjacent hubs give a 5-cycle, whose hubs have degree 2.
  CHECK_THROWS_AS(realize(FamilyConfig::g2(false, {3, 4}, {}, {})), std::invalid_argument);
  CHECK(family_membership(cycle(5)) == Membership::neither);

  HubSide side;
  side.cycles = {3, 3};
  side.pendants = {1, 1, 1};
  CHECK(isomorphic(realize(FamilyConfig::g1(side)), firefly(2, 3, 0)));
}

TEST_CASE("degree predicates and connectivity") {
  CHECK_FALSE(is_bipartite(cycle(5)));
  CHECK(is_bipartite(cycle(6)));
  CHECK(vertex_connectivity(cycle(5)) == 2);
  CHECK(vertex_connectivity(star(6)) == 1);
  CHECK(vertex_connectivity(complete_bipartite(2, 6)) == 2);
  CHECK(vertex_connectivity(complete(5)) == 4);
  CHECK(vertex_connectivity(disjoint_union(complete(2), complete(2))) == 0);
  CHECK(max_degree(star(5)) == 4);
  CHECK(min_degree(star(5)) == 1);
}

TEST_CASE("connectivity: subset search agrees with max-flow") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 60; ++k) {
    const Graph g = testing::random_connected_graph(rng, 3 + k % 8, 0.15 + 0.1 * (k % 6));
    CHECK(vertex_connectivity_exhaustive(g) == vertex_connectivity_flow(g));
  }
}

TEST_CASE("family membership") {
  CHECK(family_membership(firefly(1, 2, 0)) == Membership::G1);
  CHECK(family_membership(realize(FamilyConfig::g2(true, {3, 5}, {}, {}))) == Membership::G2_nonbipartite);
  CHECK(family_membership(cycle(8)) == Membership::neither);
  CHECK(family_membership(complete(5)) == Membership::neither);
}

TEST_CASE("realized configs round-trip through membership, decompose and builder") {
  for (std::size_t n = 4; n <= 9; ++n) {
    for (Family f : {Family::G1, Family::G2}) {
      for (const FamilyConfig& cfg : enumerate_family(f, n)) {
        const Graph g = realize(cfg);
        CHECK(g.order() == cfg.order());
        CHECK(is_connected(g));
        const Membership m = family_membership(g);
        CHECK((f == Family::G1 ? m == Membership::G1 : m != Membership::G1 && m != Membership::neither));
        auto back = decompose(g);
        REQUIRE(back);
        CHECK(*back == cfg);
        CHECK(parse_family_config(cfg.to_string()) == cfg);
        CHECK(build_graph(cfg.to_string()) == g);
      }
    }
  }
}

TEST_CASE("two-hub bipartiteness with odd-order paths depends on the hub edge") {
  for (std::size_t n = 4; n <= 10; ++n) {
    for (const FamilyConfig& cfg : enumerate_family(Family::G2, n)) {
      if (!cfg.u.cycles.empty() || !cfg.v.cycles.empty() || cfg.internal_paths.empty()) continue;
      bool all_odd = std::all_of(cfg.internal_paths.begin(), cfg.internal_paths.end(), [](auto p) { return p % 2 == 1; });
      if (all_odd) CHECK(is_bipartite(realize(cfg)) == !cfg.hub_edge);
    }
  }
}

TEST_CASE("graph6") {
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(to_graph6(complete(2)) == "A_");
  CHECK(to_graph6(path(4)) == "Ch");
  const Graph d = from_graph6("D?{");
  CHECK(d.order() == 5);
  CHECK(from_graph6(">>graph6<<Ch\n") == path(4));
  CHECK_THROWS(from_graph6("D?"));
  CHECK_THROWS(from_graph6("C~~"));
  std::mt19937_64 rng(23);
  for (int k = 0; k < 50; ++k) {
    const Graph g = testing::random_connected_graph(rng, 1 + k, 0.2);
    CHECK(from_graph6(to_graph6(g)) == g);
    CHECK(parse_edge_list(to_edge_list(g)) == g);
  }
}

TEST_CASE("builder") {
  CHECK(build_graph("star 6") == star(6));
  CHECK(build_graph("K1 x 3") == empty_graph(3));
  CHECK(isomorphic(build_graph("join(K 2, union(K1 x 7))"), join(complete(2), empty_graph(7))));
  CHECK(build_graph("firefly 2 3 0") == firefly(2, 3, 0));
  CHECK(build_graph("product(K2, star 4)") == cartesian_product(complete(2), star(4)));
  CHECK(build_graph("bipartite 2 3") == complete_bipartite(2, 3));
  CHECK(build_graph("g6 Ch") == path(4));
  CHECK(build_graph("gamma101") == gamma_101());
  CHECK(build_graph("g2 path-orders=3,5 hub-edge pendants-u=1").order() == 7);
  CHECK_THROWS_AS(build_graph("join(K 2"), BuilderError);
  CHECK_THROWS_AS(build_graph("wheel 5"), BuilderError);
  CHECK_THROWS_AS(build_graph("C 2"), BuilderError);
  CHECK_THROWS_AS(build_graph("g2 path-orders=3"), BuilderError);
}

TEST_CASE("canonical forms") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 60; ++k) {
    const Graph g = testing::random_connected_graph(rng, 2 + k % 12, 0.3);
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(relabel(g, perm)) == canonical_form(g));
  }
  CHECK_FALSE(isomorphic(path(4), star(4)));
  CHECK(isomorphic(cycle(4), complete_bipartite(2, 2)));
  // Same degree sequence, different graphs.
  CHECK_FALSE(isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3))));
}

TEST_CASE("small graph generation") {
  // Connected graphs on 1..7 vertices (OEIS A001349).
  const std::vector<std::size_t> counts{1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= 7; ++n) CHECK(generate_graphs(n, true).size() == counts[n - 1]);
  // All graphs on 5 vertices (A000088).
  CHECK(generate_graphs(5, false).size() == 34);
}
