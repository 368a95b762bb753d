#include <doctest.h>

#include "lapint/report_json.hpp"

using namespace lapint;

TEST_CASE("spectrum report schema") {
  const Json j = to_json(spectrum(cycle(5), MatrixKind::L, Rational(1, 1000)));
  for (const char* key : {"graph6", "kind", "order", "char_poly", "integer_roots", "residual", "intervals",
                          "eigenvalues", "precision", "integral"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["kind"] == "L");
  CHECK(j["integral"] == false);
  CHECK(j["integer_roots"] == Json::array({Json::array({0, 1})}));
  CHECK(j["intervals"].size() == 2);
  CHECK(j["eigenvalues"][0][0] == "3.618");
  CHECK(j["eigenvalues"][0][1] == 2);
  CHECK(decimal_places(pow10_inverse(6)) == 6);
  CHECK(decimal_places(Rational(1, 3)) == 1);
}

TEST_CASE("matrices serialize row by row") {
  CHECK(to_json(IntMatrix{{1, -1}, {-1, 1}}).dump() == "[[1,-1],[-1,1]]");
  CHECK(to_json(Partition::parse("0 | 1 2")) == "0 | 1 2");
}

TEST_CASE("theorem summary table") {
  const TheoremReport r = verify_theorem(5, 6, 1);
  const std::string tsv = summary_tsv(r);
  CHECK(tsv.rfind("n\tfamily\tgraphs\tintegral\t", 0) == 0);
  CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 5);
  const Json v = to_json(r.verdicts.front());
  CHECK(v.contains("literal_agreement"));
  CHECK(v.contains("structural_agreement"));
}

TEST_CASE("case verdicts serialize") {
  const Json j = to_json(verify_case(find_case("4.4"), 4, 3));
  CHECK(j["case"] == "4.4");
  CHECK(j["ok"] == true);
  CHECK(j["sign_claims"].size() == 1);
}
