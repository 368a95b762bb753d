#include "lapint/report_json.hpp"

#include <sstream>

#include "lapint/canonical.hpp"
#include "lapint/connectivity.hpp"
#include "lapint/graph6.hpp"

namespace lapint {

namespace {

Json string_list(const std::vector<std::string>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x);
  return out;
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

}  // namespace

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).fits_slong_p()) {
        row.push_back(m(i, j).get_si());
      } else {
        row.push_back(m(i, j).get_str());
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const PolyMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const Params& p) {
  Json out = Json::object();
  for (const auto& [k, v] : p) out[k] = v;
  return out;
}

Json to_json(const Partition& p) { return p.to_string(); }

unsigned decimal_places(const Rational& precision) {
  unsigned d = 0;
  while (d < 60 && pow10_inverse(d) > precision) ++d;
  return d;
}

Json to_json(const SpectrumReport& r) {
  Json out;
  out["graph6"] = r.graph6;
  out["kind"] = to_string(r.kind);
  out["order"] = r.order;
  out["char_poly"] = r.char_poly.to_string();
  Json roots = Json::array();
  for (const auto& [root, mult] : r.roots.integer_roots) roots.push_back(Json::array({root.get_si(), mult}));
  out["integer_roots"] = std::move(roots);
  out["residual"] = r.roots.residual.to_string();
  Json intervals = Json::array();
  for (const auto& iv : r.roots.isolating_intervals) intervals.push_back(Json::array({to_string(iv.lo), to_string(iv.hi)}));
  out["intervals"] = std::move(intervals);
  const unsigned digits = decimal_places(r.precision);
  Json eig = Json::array();
  for (const auto& ev : r.eigenvalues) {
    std::string text = ev.is_integer() ? ev.where.lo.get_num().get_str() : to_decimal(ev.where.midpoint(), digits);
    eig.push_back(Json::array({text, ev.multiplicity}));
  }
  out["eigenvalues"] = std::move(eig);
  out["precision"] = to_string(r.precision);
  out["integral"] = r.integral;
  return out;
}

Json to_json(const KirklandReport& r) {
  Json out;
  out["connectivity"] = r.connectivity;
  out["a_equals_k"] = r.a_vs_k == 0;
  if (r.join_part) {
    out["join_part"] = *r.join_part;
  } else {
    out["join_part"] = nullptr;
  }
  out["join_part_condition"] = r.join_part_condition;
  out["consistent"] = r.consistent;
  return out;
}

Json to_json(const ClassificationVerdict& v) {
  Json out;
  out["graph6"] = v.graph6;
  out["config"] = v.config;
  out["n"] = v.n;
  out["family"] = to_string(v.family);
  out["bipartite"] = v.bipartite;
  out["integral"] = v.integral;
  out["tag"] = to_string(v.tag.tag);
  out["tag_parameters"] = v.tag.parameters;
  out["conditions_met"] = v.tag.conditions_met;
  out["literal_agreement"] = v.literal_agreement;
  out["structural_agreement"] = v.structural_agreement;
  return out;
}

Json to_json(const PolynomialReport& r) {
  Json out;
  out["case"] = r.case_id;
  out["computed"] = r.computed.to_string();
  out["verified"] = r.verified();
  out["explained"] = r.explained();
  out["corrected_matches_derived"] = r.corrected_matches_derived;
  Json diffs = Json::array();
  for (const auto& d : r.diffs) {
    diffs.push_back({{"power", d.power},
                     {"printed", d.printed.to_string()},
                     {"computed", d.computed.to_string()},
                     {"registered", d.registered}});
  }
  out["coefficient_diffs"] = std::move(diffs);
  Json mdiffs = Json::array();
  for (const auto& d : r.matrix_diffs) {
    mdiffs.push_back({{"row", d.row},
                      {"col", d.col},
                      {"printed", d.printed.to_string()},
                      {"derived", d.derived.to_string()},
                      {"registered", d.registered}});
  }
  out["matrix_diffs"] = std::move(mdiffs);
  return out;
}

Json to_json(const SignClaimReport& r) {
  Json out;
  out["case"] = r.case_id;
  if (!r.label.empty()) out["label"] = r.label;
  out["interval"] = Json::array({to_string(r.lo), to_string(r.hi)});
  out["grid_points"] = r.grid_points;
  out["excluded_points"] = r.excluded_points;
  out["holds"] = r.holds();
  Json fails = Json::array();
  for (const auto& f : r.sign_failures) {
    fails.push_back({{"params", to_json(f.params)}, {"at", to_string(f.at)}, {"value", to_string(f.value)}});
  }
  out["sign_failures"] = std::move(fails);
  Json sturm = Json::array();
  for (const auto& p : r.sturm_failures) sturm.push_back(to_json(p));
  out["sturm_failures"] = std::move(sturm);
  Json exprs = Json::array();
  for (const auto& e : r.expressions) {
    Json j;
    j["at"] = to_string(e.at);
    j["exact"] = e.exact;
    if (!e.printed.empty()) {
      j["printed"] = e.printed;
      j["approximate"] = e.approximate;
      j["matches"] = e.matches;
      if (!e.matches) j["registered"] = e.registered;
    }
    exprs.push_back(std::move(j));
  }
  out["values"] = std::move(exprs);
  return out;
}

Json to_json(const ClosedFormReport& r) {
  Json out;
  out["case"] = r.case_id;
  out["label"] = r.label;
  out["grid_points"] = r.grid_points;
  out["identity"] = optional_bool(r.identity);
  out["roots"] = optional_bool(r.roots);
  out["bracket"] = optional_bool(r.bracket);
  out["spectrum"] = optional_bool(r.spectrum);
  out["non_integral"] = r.non_integral;
  out["holds"] = r.holds();
  out["problems"] = string_list(r.problems);
  return out;
}

Json to_json(const CrossCheckReport& r) {
  Json out;
  out["params"] = to_json(r.params);
  out["in_family"] = r.in_family;
  out["realize_matches"] = r.realize_matches;
  out["equitable"] = r.equitable;
  out["quotient_matches"] = r.quotient_matches;
  out["divides"] = r.divides;
  out["integral"] = r.integral;
  out["ok"] = r.ok();
  return out;
}

Json to_json(const DirectCheckReport& r) {
  Json out;
  out["params"] = to_json(r.params);
  out["order"] = r.order;
  out["integral"] = r.integral;
  out["char_poly"] = r.char_poly;
  return out;
}

Json to_json(const CaseVerdict& v) {
  Json out;
  out["case"] = v.case_id;
  out["ok"] = v.ok();
  out["polynomial"] = to_json(v.polynomial);
  Json claims = Json::array();
  for (const auto& c : v.claims) claims.push_back(to_json(c));
  out["sign_claims"] = std::move(claims);
  Json forms = Json::array();
  for (const auto& f : v.closed_forms) forms.push_back(to_json(f));
  out["closed_forms"] = std::move(forms);
  Json cross = Json::array();
  for (const auto& c : v.cross_checks) cross.push_back(to_json(c));
  out["cross_checks"] = std::move(cross);
  Json direct = Json::array();
  for (const auto& d : v.direct) direct.push_back(to_json(d));
  out["direct_checks"] = std::move(direct);
  return out;
}

Json to_json(const SuspectedTypo& t) {
  Json out;
  out["case"] = t.case_id;
  switch (t.kind) {
    case TypoKind::coefficient:
      out["kind"] = "coefficient";
      out["power"] = *t.power;
      break;
    case TypoKind::matrix_entry: {
      out["kind"] = "matrix_entry";
      Json entries = Json::array();
      for (auto [i, j] : t.entries) entries.push_back(Json::array({i, j}));
      out["entries"] = std::move(entries);
      break;
    }
    case TypoKind::claim_value:
      out["kind"] = "claim_value";
      out["at"] = to_string(*t.at);
      break;
  }
  out["printed"] = t.printed;
  if (t.corrected) out["corrected"] = *t.corrected;
  out["note"] = t.note;
  return out;
}

Json to_json(const ErratumEntry& e) {
  Json out;
  out["source"] = e.source;
  out["kind"] = e.kind;
  out["location"] = e.location;
  out["printed"] = e.printed;
  out["computed"] = e.computed;
  out["confirmed"] = e.confirmed;
  out["note"] = e.note;
  return out;
}

Json classification_json(const Graph& g) {
  Json out;
  out["graph6"] = to_graph6(g);
  out["canonical"] = canonical_form(g);
  out["order"] = g.order();
  out["size"] = g.size();
  out["connected"] = is_connected(g);
  out["bipartite"] = is_bipartite(g);
  out["membership"] = to_string(family_membership(g));
  if (auto cfg = decompose(g)) {
    out["config"] = cfg->to_string();
  } else {
    out["config"] = nullptr;
  }
  out["L_integral"] = is_L_integral(g);
  out["Q_integral"] = is_Q_integral(g);
  const TagResult tag = theorem_tag(g);
  out["tag"] = to_string(tag.tag);
  out["tag_parameters"] = tag.parameters;
  out["conditions_met"] = tag.conditions_met;
  const bool complete_graph = g.size() * 2 == g.order() * (g.order() - (g.order() > 0));
  if (g.order() >= 2 && is_connected(g) && !complete_graph) {
    out["kirkland"] = to_json(kirkland_decomposition_check(g));
  } else {
    out["kirkland"] = nullptr;
  }
  return out;
}

Json quotient_json(const IntMatrix& m, const Partition& p) {
  const ContainmentReport c = eigenvalue_containment_check(m, p);
  Json out;
  out["partition"] = p.to_string();
  out["quotient"] = to_json(quotient_matrix(m, p));
  out["quotient_poly"] = c.quotient_poly.to_string();
  out["char_poly"] = c.full_poly.to_string();
  out["divides"] = c.divides();
  if (c.cofactor) {
    out["cofactor"] = c.cofactor->to_string();
  } else {
    out["cofactor"] = nullptr;
  }
  return out;
}

std::string summary_tsv(const TheoremReport& r) {
  std::ostringstream os;
  os << "n\tfamily\tgraphs\tintegral\tliteral_disagreements\tstructural_disagreements\n";
  for (const auto& row : r.summary) {
    os << row.n << "\t" << to_string(row.family) << "\t" << row.graphs << "\t" << row.integral << "\t"
       << row.literal_disagreements << "\t" << row.structural_disagreements << "\n";
  }
  return os.str();
}

}  // namespace lapint
