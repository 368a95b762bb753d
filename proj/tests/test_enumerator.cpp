#include <doctest.h>

#include <set>

#include "lapint/canonical.hpp"
#include "lapint/connectivity.hpp"
#include "lapint/enumerator.hpp"
#include "lapint/graph6.hpp"
#include "lapint/spectral.hpp"

using namespace lapint;

TEST_CASE("enumeration edge cases") {
  CHECK(enumerate_family(Family::G1, 1).empty());
  CHECK(enumerate_family(Family::G1, 3).empty());
  CHECK(enumerate_family(Family::G2, 3).empty());
  CHECK(brute_force_oracle(Family::G1, 3).empty());
  CHECK(brute_force_oracle(Family::G2, 3).empty());
  CHECK_THROWS(brute_force_oracle(Family::G1, 9));
  CHECK(parse_family("g2") == Family::G2);
  CHECK_THROWS(parse_family("G3"));
}

TEST_CASE("one-hub graphs on four vertices") {
  std::set<std::string> got;
  for (const auto& cfg : enumerate_family(Family::G1, 4)) got.insert(canonical_form(realize(cfg)));
  const std::set<std::string> expected{canonical_form(firefly(1, 1, 0)), canonical_form(star(4))};
  CHECK(got == expected);
}

TEST_CASE("enumeration matches the brute-force oracle") {
  for (std::size_t n = 4; n <= 7; ++n) {
    for (Family f : {Family::G1, Family::G2}) {
      CAPTURE(n);
      std::set<std::string> mine;
      for (const auto& cfg : enumerate_family(f, n)) mine.insert(canonical_form(realize(cfg)));
      std::set<std::string> oracle;
      for (const Graph& g : brute_force_oracle(f, n)) oracle.insert(canonical_form(g));
      CHECK(mine == oracle);
    }
  }
}

TEST_CASE("enumeration lists each isomorphism class once") {
  for (std::size_t n = 4; n <= 11; ++n) {
    for (Family f : {Family::G1, Family::G2}) {
      const auto cfgs = enumerate_family(f, n);
      std::set<std::string> forms;
      for (const auto& cfg : cfgs) forms.insert(canonical_form(realize(cfg)));
      CHECK(forms.size() == cfgs.size());
    }
  }
}

TEST_CASE("theorem tags") {
  CHECK(theorem_tag(star(9)).tag == TheoremTag::star);
  CHECK(theorem_tag(complete_bipartite(2, 7)).tag == TheoremTag::complete_bip_2);
  CHECK(theorem_tag(join(complete(2), empty_graph(7))).tag == TheoremTag::join_two);
  const TagResult prism = theorem_tag(cartesian_product(complete(2), star(7)));
  CHECK(prism.tag == TheoremTag::prism_star);
  CHECK(prism.parameters == "m=6");
  const TagResult ff = theorem_tag(firefly(2, 2, 0));
  CHECK(ff.tag == TheoremTag::firefly_r_s_0);
  CHECK(ff.parameters == "r=2,s=2");
  CHECK(ff.conditions_met);
  const TagResult windmill = theorem_tag(firefly(4, 0, 0));
  CHECK(windmill.tag == TheoremTag::firefly_r_s_0);
  CHECK_FALSE(windmill.conditions_met);
  const Graph j = join(complete(1), disjoint_union(disjoint_union(empty_graph(2), complete(2)), star(3)));
  const TagResult jt = theorem_tag(j);
  CHECK(jt.tag == TheoremTag::join_one);
  CHECK(jt.parameters == "r=2,s=1,t=2");
  CHECK(jt.conditions_met);
  CHECK(theorem_tag(cycle(9)).tag == TheoremTag::none);
  CHECK(theorem_tag(path(9)).tag == TheoremTag::none);
}

TEST_CASE("tags agree with isomorphism to constructed family members") {
  for (std::size_t n = 9; n <= 11; ++n) {
    // First insertion wins, in the order theorem_tag tries the families.
    std::map<std::string, TheoremTag> listed;
    listed.emplace(canonical_form(star(n)), TheoremTag::star);
    listed.emplace(canonical_form(complete_bipartite(2, n - 2)), TheoremTag::complete_bip_2);
    listed.emplace(canonical_form(join(complete(2), empty_graph(n - 2))), TheoremTag::join_two);
    if (n % 2 == 0) listed.emplace(canonical_form(cartesian_product(complete(2), star(n / 2))), TheoremTag::prism_star);
    for (std::size_t r = 0; 2 * r + 1 <= n; ++r) {
      if (r + (n - 1 - 2 * r) > 0) listed.emplace(canonical_form(firefly(r, n - 1 - 2 * r, 0)), TheoremTag::firefly_r_s_0);
    }
    for (std::size_t t = 2; t + 2 <= n; ++t) {
      for (std::size_t s = 0; 2 * s + t + 2 <= n; ++s) {
        const std::size_t r = n - 2 - t - 2 * s;
        const Graph rest = disjoint_union(disjoint_union(empty_graph(r), copies(complete(2), s)), star(t + 1));
        listed.emplace(canonical_form(join(complete(1), rest)), TheoremTag::join_one);
      }
    }
    for (Family f : {Family::G1, Family::G2}) {
      for (const auto& cfg : enumerate_family(f, n)) {
        const Graph g = realize(cfg);
        auto it = listed.find(canonical_form(g));
        const TheoremTag expected = it == listed.end() ? TheoremTag::none : it->second;
        CAPTURE(cfg.to_string());
        CHECK(theorem_tag(g).tag == expected);
      }
    }
  }
}

TEST_CASE("theorem verification from order nine") {
  const TheoremReport r = verify_theorem(9, 10, 2);
  CHECK(r.structural_disagreements() == 0);
  // Integral graphs outside the list's side conditions: windmills F_{r,0,0} and
  // one-vertex joins with r + s < 2.
  for (const auto& v : r.verdicts) {
    if (v.literal_agreement) continue;
    CHECK(v.integral);
    CHECK_FALSE(v.tag.conditions_met);
    CHECK((v.tag.tag == TheoremTag::firefly_r_s_0 || v.tag.tag == TheoremTag::join_one));
  }
  CHECK(r.literal_disagreements() == 5);
}

TEST_CASE("small orders give a nonempty exception report") {
  const TheoremReport r = verify_theorem(4, 8, 2);
  CHECK(r.literal_disagreements() > 0);
  CHECK(r.summary.size() == 10);
}

TEST_CASE("results do not depend on the thread count") {
  const TheoremReport a = verify_theorem(7, 9, 1);
  const TheoremReport b = verify_theorem(7, 9, 4);
  REQUIRE(a.verdicts.size() == b.verdicts.size());
  for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
    CHECK(a.verdicts[i].graph6 == b.verdicts[i].graph6);
    CHECK(a.verdicts[i].integral == b.verdicts[i].integral);
  }
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(verify_theorem(9, 13), BudgetExceeded);
  CHECK_THROWS_AS(verify_theorem(9, 11, 1, 10), BudgetExceeded);
  CHECK_THROWS_AS(verify_theorem(10, 9), std::invalid_argument);
}

TEST_CASE("bipartite members at order nine: L and Q integrality coincide") {
  const TheoremReport r = verify_theorem(9, 9, 2);
  std::size_t bipartite = 0;
  for (const auto& v : r.verdicts) {
    if (!v.bipartite) continue;
    ++bipartite;
    CHECK(v.integral == is_Q_integral(from_graph6(v.graph6)));
    CHECK(v.structural_agreement);
  }
  CHECK(bipartite > 0);
}

TEST_CASE("integral non-bipartite two-hub graphs have a(G) = k(G)") {
  for (std::size_t n = 5; n <= 10; ++n) {
    for (const auto& cfg : enumerate_family(Family::G2, n)) {
      const Graph g = realize(cfg);
      if (is_bipartite(g) || !is_L_integral(g)) continue;
      CHECK(compare_algebraic_connectivity(g, vertex_connectivity(g)) == 0);
    }
  }
}

TEST_CASE("a long internal path rules out integrality") {
  std::size_t seen = 0;
  for (std::size_t n = 9; n <= 11; ++n) {
    for (const auto& cfg : enumerate_family(Family::G2, n)) {
      if (cfg.internal_paths.empty() || cfg.internal_paths.back() < 9) continue;
      ++seen;
      CHECK_FALSE(is_L_integral(realize(cfg)));
    }
  }
  CHECK(seen > 0);
}
