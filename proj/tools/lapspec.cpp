// lapspec: command-line front end for the lapint library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lapint/builder.hpp"
#include "lapint/enumerator.hpp"
#include "lapint/graph6.hpp"
#include "lapint/partition.hpp"
#include "lapint/proposition_cases.hpp"
#include "lapint/report_json.hpp"
#include "lapint/spectral.hpp"

using namespace lapint;

namespace {

enum Exit { kOk = 0, kGeneral = 1, kParse = 2, kPartition = 3, kUnknownCase = 4, kBudget = 5 };

// Above this the enumeration stops being a desk-scale computation.
constexpr std::size_t kHardBudget = 16;

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Input {
  std::string g6;
  std::string builder;
  std::string file;
};

struct Common {
  std::string out;
  std::string precision = "1/1000000";
  unsigned jobs = 0;
};

void add_input(CLI::App* cmd, Input& in) {
  auto* g = cmd->add_option("--g6", in.g6, "graph6 string");
  auto* b = cmd->add_option("--builder", in.builder, "builder expression, e.g. \"join(K 2, E 7)\"");
  auto* f = cmd->add_option("--file", in.file, "file holding a graph6 line or an edge list");
  g->excludes(b, f);
  b->excludes(f);
}

bool looks_like_edge_list(const std::string& text) {
  return text.find_first_not_of("0123456789 \t\r\n") == std::string::npos;
}

Graph load_graph(const Input& in) {
  try {
    if (!in.g6.empty()) return from_graph6(in.g6);
    if (!in.builder.empty()) return build_graph(in.builder);
    if (!in.file.empty()) {
      std::ifstream is(in.file);
      if (!is) throw ParseError("cannot open " + in.file);
      std::stringstream ss;
      ss << is.rdbuf();
      const std::string text = ss.str();
      if (looks_like_edge_list(text)) return parse_edge_list(text);
      std::istringstream lines(text);
      std::string line;
      while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) return from_graph6(line);
      }
      throw ParseError(in.file + " holds no graph");
    }
  } catch (const BuilderError&) {
    throw;
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("no input graph: pass --g6, --builder or --file");
}

Rational load_precision(const std::string& text) {
  Rational p;
  try {
    p = parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("precision: ") + e.what());
  }
  if (p <= 0) throw ParseError("precision must be positive");
  return p;
}

std::size_t budget() {
  const char* env = std::getenv("LAPSPEC_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultBudget;
  std::size_t b = 0;
  try {
    std::size_t used = 0;
    b = std::stoul(env, &used);
    if (env[used] != '\0') throw std::invalid_argument(env);
  } catch (const std::exception&) {
    throw ParseError(std::string("LAPSPEC_BUDGET is not a nonnegative integer: ") + env);
  }
  if (b > kHardBudget) {
    throw BudgetExceeded("LAPSPEC_BUDGET " + std::to_string(b) + " exceeds the hard cap " + std::to_string(kHardBudget));
  }
  return b;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(c.out);
  if (!os) throw std::runtime_error("cannot write " + c.out);
  os << text;
}

std::string doc(const Json& j) { return j.dump(2) + "\n"; }

Partition load_partition(const std::string& text, std::size_t n) {
  Partition p;
  try {
    p = Partition::parse(text);
  } catch (const InvalidPartition&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InvalidPartition(e.what());
  }
  p.validate(n);
  return p;
}

ParamRange load_window(const std::string& s, const std::string& t) {
  ParamRange w;
  try {
    if (!s.empty()) w["s"] = parse_param_bounds(s);
    if (!t.empty()) w["t"] = parse_param_bounds(t);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return w;
}

Json family_case_json(const CaseVerdict& v, const ParamRange& window) {
  Json j = to_json(v);
  if (!window.empty()) {
    Json w = Json::object();
    for (const auto& [k, b] : window) {
      w[k] = Json::array({b.first, b.second ? Json(*b.second) : Json(nullptr)});
    }
    j["window"] = std::move(w);
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Laplacian spectra, quotient matrices and family enumeration"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--out", common.out, "write the result to this file instead of stdout");
  app.add_option("--jobs", common.jobs, "worker threads (0 = all cores)");

  Input in;
  std::string kind = "L";
  std::string partition;
  bool strict = false;

  auto* spectrum_cmd = app.add_subcommand("spectrum", "exact spectrum of L or Q");
  add_input(spectrum_cmd, in);
  spectrum_cmd->add_option("--kind", kind, "L or Q")->check(CLI::IsMember({"L", "Q", "l", "q"}));
  spectrum_cmd->add_option("--precision", common.precision, "interval width for irrational eigenvalues");

  auto* classify_cmd = app.add_subcommand("classify", "integrality, family membership and theorem tag");
  add_input(classify_cmd, in);

  auto* quotient_cmd = app.add_subcommand("quotient", "quotient matrix of an equitable partition");
  add_input(quotient_cmd, in);
  quotient_cmd->add_option("--partition", partition, "cells separated by '|', e.g. \"0 | 1 2 3\"")->required();
  quotient_cmd->add_option("--kind", kind, "L or Q")->check(CLI::IsMember({"L", "Q", "l", "q"}));

  auto* refine_cmd = app.add_subcommand("refine", "coarsest equitable refinement");
  add_input(refine_cmd, in);
  refine_cmd->add_option("--partition", partition, "starting partition (default: one cell)");
  refine_cmd->add_option("--kind", kind, "L or Q")->check(CLI::IsMember({"L", "Q", "l", "q"}));

  std::string case_id;
  std::string s_window;
  std::string t_window;
  long grid_max = 20;
  long cross_max = 4;
  auto* families_cmd = app.add_subcommand("families", "verify the parametric two-hub cases");
  families_cmd->add_option("--case", case_id, "case id, e.g. 4.4; all cases when omitted");
  families_cmd->add_option("--s", s_window, "window for s, e.g. 2..10");
  families_cmd->add_option("--t", t_window, "window for t");
  families_cmd->add_option("--grid-max", grid_max, "largest parameter value on the grid");
  families_cmd->add_option("--cross-max", cross_max, "largest parameter value for graph cross-checks");
  families_cmd->add_flag("--strict", strict, "exit 1 unless every case verifies");

  std::string family = "G1";
  std::size_t n = 0;
  std::string format = "config";
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list a family on n vertices");
  enumerate_cmd->add_option("--family", family, "G1 or G2")->required();
  enumerate_cmd->add_option("--n", n, "number of vertices")->required();
  enumerate_cmd->add_option("--format", format, "config, g6 or jsonl")
      ->check(CLI::IsMember({"config", "g6", "jsonl"}));

  std::size_t n_min = 9;
  std::size_t n_max = 12;
  std::string jsonl_path;
  std::string tsv_path;
  auto* theorem_cmd = app.add_subcommand("verify-theorem", "classify both families exhaustively");
  theorem_cmd->add_option("--min", n_min, "smallest order");
  theorem_cmd->add_option("--max,--max-n", n_max, "largest order (capped by LAPSPEC_BUDGET)");
  theorem_cmd->add_option("--jsonl", jsonl_path, "write every verdict as JSON lines");
  theorem_cmd->add_option("--tsv", tsv_path, "write the summary table");
  theorem_cmd->add_flag("--strict", strict, "exit 1 on any disagreement at n >= 9");

  auto* erratum_cmd = app.add_subcommand("erratum-report", "recheck every registered misprint");

  for (auto* cmd : app.get_subcommands({})) {
    cmd->add_option("--out", common.out, "write the result to this file instead of stdout");
    cmd->add_option("--jobs", common.jobs, "worker threads (0 = all cores)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (spectrum_cmd->parsed()) {
      const Graph g = load_graph(in);
      emit(common, doc(to_json(spectrum(g, parse_kind(kind), load_precision(common.precision)))));
    } else if (classify_cmd->parsed()) {
      emit(common, doc(classification_json(load_graph(in))));
    } else if (quotient_cmd->parsed()) {
      const Graph g = load_graph(in);
      const IntMatrix m = graph_matrix(g, parse_kind(kind));
      const Partition p = load_partition(partition, g.order());
      const EquitableCheck eq = is_equitable(m, p);
      if (!eq.equitable) {
        std::string where;
        if (eq.cells && eq.vertices) {
          where = ": vertices " + std::to_string(eq.vertices->first) + " and " + std::to_string(eq.vertices->second) +
                  " of cell " + std::to_string(eq.cells->first) + " differ on cell " + std::to_string(eq.cells->second);
        }
        throw InvalidPartition("partition is not equitable" + where);
      }
      emit(common, doc(quotient_json(m, p)));
    } else if (refine_cmd->parsed()) {
      const Graph g = load_graph(in);
      const IntMatrix m = graph_matrix(g, parse_kind(kind));
      const Partition start = partition.empty() ? Partition::whole(g.order()) : load_partition(partition, g.order());
      const Partition p = coarsest_equitable_refinement(m, start);
      Json j = quotient_json(m, p);
      j["cells"] = p.size();
      emit(common, doc(j));
    } else if (families_cmd->parsed()) {
      const ParamRange window = load_window(s_window, t_window);
      std::vector<CaseVerdict> verdicts;
      if (case_id.empty()) {
        verdicts = verify_all_cases(grid_max, cross_max, common.jobs, window);
      } else {
        verdicts.push_back(verify_case(find_case(case_id), grid_max, cross_max, window));
      }
      bool all_ok = true;
      Json out = Json::array();
      for (const auto& v : verdicts) {
        all_ok = all_ok && v.ok();
        out.push_back(family_case_json(v, window));
      }
      emit(common, doc(case_id.empty() ? out : out.at(0)));
      if (strict && !all_ok) return kGeneral;
    } else if (enumerate_cmd->parsed()) {
      Family f;
      try {
        f = parse_family(family);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
      const std::size_t cap = budget();
      if (n > cap) {
        throw BudgetExceeded("n " + std::to_string(n) + " exceeds the budget " + std::to_string(cap));
      }
      std::ostringstream os;
      for (const auto& cfg : enumerate_family(f, n)) {
        if (format == "config") {
          os << cfg.to_string() << "\n";
        } else if (format == "g6") {
          os << to_graph6(realize(cfg)) << "\n";
        } else {
          Json j;
          j["config"] = cfg.to_string();
          j["graph6"] = to_graph6(realize(cfg));
          os << j.dump() << "\n";
        }
      }
      emit(common, os.str());
    } else if (theorem_cmd->parsed()) {
      const TheoremReport r = verify_theorem(n_min, n_max, common.jobs, budget());
      if (!jsonl_path.empty()) {
        std::ofstream os(jsonl_path);
        if (!os) throw std::runtime_error("cannot write " + jsonl_path);
        for (const auto& v : r.verdicts) os << to_json(v).dump() << "\n";
      }
      if (!tsv_path.empty()) {
        std::ofstream os(tsv_path);
        if (!os) throw std::runtime_error("cannot write " + tsv_path);
        os << summary_tsv(r);
      }
      std::ostringstream os;
      os << summary_tsv(r);
      os << r.literal_disagreements() << " disagreements\n";
      os << r.structural_disagreements() << " disagreements ignoring the list's side conditions\n";
      for (const auto& v : r.verdicts) {
        if (!v.literal_agreement) {
          os << "disagreement\t" << v.n << "\t" << to_string(v.family) << "\t" << v.graph6 << "\t" << v.config
             << "\tintegral=" << v.integral << "\ttag=" << to_string(v.tag.tag) << "(" << v.tag.parameters << ")\n";
        }
      }
      emit(common, os.str());
      std::size_t late = 0;
      for (const auto& v : r.verdicts) late += v.n >= 9 && !v.literal_agreement;
      if (strict && late > 0) return kGeneral;
    } else if (erratum_cmd->parsed()) {
      Json out = Json::array();
      for (const auto& e : erratum_report()) out.push_back(to_json(e));
      emit(common, doc(out));
    }
  } catch (const BuilderError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const InvalidPartition& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPartition;
  } catch (const UnknownCase& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnknownCase;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGeneral;
  }
  return kOk;
}
