// Python bindings. Reports cross the boundary as plain dicts and lists built
// from the same JSON the command-line tool prints.

#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lapint/builder.hpp"
#include "lapint/canonical.hpp"
#include "lapint/enumerator.hpp"
#include "lapint/graph6.hpp"
#include "lapint/partition.hpp"
#include "lapint/proposition_cases.hpp"
#include "lapint/report_json.hpp"
#include "lapint/spectral.hpp"

namespace py = pybind11;
using namespace lapint;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Graph load(const std::optional<std::string>& g6, const std::optional<std::string>& builder) {
  if (g6.has_value() == builder.has_value()) throw std::invalid_argument("pass exactly one of g6= or builder=");
  return g6 ? from_graph6(*g6) : build_graph(*builder);
}

Partition load_partition(const std::string& text, std::size_t n) {
  Partition p = Partition::parse(text);
  p.validate(n);
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Laplacian spectra, equitable quotients and the two-hub graph families.";

  py::register_exception<InvalidPartition>(m, "InvalidPartition", PyExc_ValueError);
  py::register_exception<UnknownCase>(m, "UnknownCase", PyExc_KeyError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  const auto g6_arg = py::arg("g6") = py::none();
  const auto builder_arg = py::arg("builder") = py::none();

  m.def(
      "spectrum",
      [](std::optional<std::string> g6, std::optional<std::string> builder, const std::string& kind,
         const std::string& precision) {
        return to_py(to_json(spectrum(load(g6, builder), parse_kind(kind), parse_rational(precision))));
      },
      py::kw_only(), g6_arg, builder_arg, py::arg("kind") = "L", py::arg("precision") = "1/1000000");

  m.def(
      "classify",
      [](std::optional<std::string> g6, std::optional<std::string> builder) {
        return to_py(classification_json(load(g6, builder)));
      },
      py::kw_only(), g6_arg, builder_arg);

  m.def(
      "quotient",
      [](const std::string& partition, std::optional<std::string> g6, std::optional<std::string> builder,
         const std::string& kind) {
        const Graph g = load(g6, builder);
        const IntMatrix a = graph_matrix(g, parse_kind(kind));
        const Partition p = load_partition(partition, g.order());
        if (!is_equitable(a, p).equitable) throw InvalidPartition("partition is not equitable");
        return to_py(quotient_json(a, p));
      },
      py::arg("partition"), py::kw_only(), g6_arg, builder_arg, py::arg("kind") = "L");

  m.def(
      "refine",
      [](std::optional<std::string> g6, std::optional<std::string> builder, std::optional<std::string> partition,
         const std::string& kind) {
        const Graph g = load(g6, builder);
        const IntMatrix a = graph_matrix(g, parse_kind(kind));
        const Partition start = partition ? load_partition(*partition, g.order()) : Partition::whole(g.order());
        const Partition p = coarsest_equitable_refinement(a, start);
        Json j = quotient_json(a, p);
        j["cells"] = p.size();
        return to_py(j);
      },
      py::kw_only(), g6_arg, builder_arg, py::arg("partition") = py::none(), py::arg("kind") = "L");

  m.def(
      "graph6",
      [](const std::string& builder) { return to_graph6(build_graph(builder)); }, py::arg("builder"));

  m.def(
      "canonical_form",
      [](std::optional<std::string> g6, std::optional<std::string> builder) {
        return canonical_form(load(g6, builder));
      },
      py::kw_only(), g6_arg, builder_arg);

  m.def(
      "enumerate_family",
      [](const std::string& family, std::size_t n, std::size_t budget) {
        if (n > budget) throw BudgetExceeded("n = " + std::to_string(n) + " exceeds the budget " + std::to_string(budget));
        std::vector<std::string> out;
        for (const auto& cfg : enumerate_family(parse_family(family), n)) out.push_back(cfg.to_string());
        return out;
      },
      py::arg("family"), py::arg("n"), py::arg("budget") = kDefaultBudget);

  m.def(
      "verify_theorem",
      [](std::size_t n_min, std::size_t n_max, unsigned jobs, std::size_t budget) {
        TheoremReport r;
        {
          py::gil_scoped_release release;
          r = verify_theorem(n_min, n_max, jobs, budget);
        }
        Json out;
        out["summary_tsv"] = summary_tsv(r);
        out["literal_disagreements"] = r.literal_disagreements();
        out["structural_disagreements"] = r.structural_disagreements();
        Json verdicts = Json::array();
        for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
        out["verdicts"] = std::move(verdicts);
        return to_py(out);
      },
      py::arg("n_min"), py::arg("n_max"), py::arg("jobs") = 0, py::arg("budget") = kDefaultBudget);

  m.def("case_ids", [] {
    std::vector<std::string> ids;
    for (const auto& c : proposition_cases()) ids.push_back(c.id);
    return ids;
  });

  m.def(
      "verify_case",
      [](const std::string& id, long grid_max, long cross_max) {
        return to_py(to_json(verify_case(find_case(id), grid_max, cross_max)));
      },
      py::arg("case_id"), py::arg("grid_max") = 20, py::arg("cross_max") = 4);

  m.def("erratum_report", [] {
    Json out = Json::array();
    for (const auto& e : erratum_report()) out.push_back(to_json(e));
    return to_py(out);
  });
}
