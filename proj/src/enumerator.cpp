#include "lapint/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <map>
#include <thread>

#include "lapint/graph6.hpp"
#include "lapint/spectral.hpp"

namespace lapint {

namespace {

using Parts = std::vector<std::size_t>;

// Multisets of integers >= lo summing to m, each sorted ascending.
void partitions_into(std::size_t m, std::size_t lo, Parts& cur, std::vector<Parts>& out) {
  if (m == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t p = lo; p <= m; ++p) {
    cur.push_back(p);
    partitions_into(m - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Parts> partitions(std::size_t m, std::size_t lo) {
  std::vector<Parts> out;
  Parts cur;
  partitions_into(m, lo, cur, out);
  return out;
}

// All hub sides using exactly `budget` non-hub vertices.
std::vector<HubSide> sides(std::size_t budget) {
  std::vector<HubSide> out;
  for (std::size_t a = 0; a <= budget; ++a) {
    for (const Parts& cyc : partitions(a, 2)) {
      for (const Parts& pen : partitions(budget - a, 1)) {
        HubSide s;
        for (std::size_t c : cyc) s.cycles.push_back(c + 1);
        s.pendants = pen;
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

std::vector<Vertex> of_degree(const Graph& g, std::size_t d) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == d) out.push_back(v);
  }
  return out;
}

bool is_star_graph(const Graph& g) { return g.order() >= 2 && g.size() == g.order() - 1 && max_degree(g) == g.order() - 1; }

bool is_join_two(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3 || g.size() != 2 * (n - 2) + 1) return false;
  std::size_t full = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) {
      ++full;
    } else if (g.degree(v) != 2) {
      return false;
    }
  }
  return full >= 2;
}

bool is_k2_n(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3 || g.size() != 2 * (n - 2)) return false;
  const auto cand = of_degree(g, n - 2);
  for (std::size_t i = 0; i < cand.size(); ++i) {
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      Vertex a = cand[i];
      Vertex b = cand[j];
      if (g.adjacent(a, b) || g.neighbors(a) != g.neighbors(b)) continue;
      bool rest_ok = true;
      for (Vertex x = 0; x < n && rest_ok; ++x) {
        if (x != a && x != b) rest_ok = g.degree(x) == 2;
      }
      if (rest_ok) return true;
    }
  }
  return false;
}

// K_2 x K_{1,m}: two adjacent centers, each with m private neighbors matched in pairs.
std::optional<std::size_t> prism_star_size(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 4 || n % 2 != 0) return std::nullopt;
  const std::size_t m = n / 2 - 1;
  if (g.size() != 3 * m + 1) return std::nullopt;
  const auto cand = of_degree(g, m + 1);
  for (Vertex c1 : cand) {
    for (Vertex c2 : cand) {
      if (c1 >= c2 || !g.adjacent(c1, c2)) continue;
      std::vector<int> side(n, -1);  // 0: attached to c1, 1: attached to c2
      side[c1] = side[c2] = 2;
      bool ok = true;
      for (Vertex x : g.neighbors(c1)) {
        if (x != c2) side[x] = 0;
      }
      for (Vertex x : g.neighbors(c2)) {
        if (x == c1) continue;
        if (side[x] != -1) ok = false;
        side[x] = 1;
      }
      for (Vertex x = 0; x < n && ok; ++x) {
        if (side[x] == 2) continue;
        if (side[x] == -1 || g.degree(x) != 2) {
          ok = false;
          break;
        }
        // The non-center neighbor sits on the other side.
        std::size_t other = 0;
        for (Vertex y : g.neighbors(x)) {
          if (side[y] == 1 - side[x]) ++other;
        }
        ok = other == 1;
      }
      if (ok) return m;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<FamilyConfig> enumerate_family(Family family, std::size_t n) {
  std::vector<FamilyConfig> out;
  if (family == Family::G1) {
    if (n < 2) return out;
    for (HubSide& s : sides(n - 1)) {
      FamilyConfig cfg = FamilyConfig::g1(std::move(s));
      if (cfg.is_valid()) out.push_back(std::move(cfg));
    }
    return out;
  }
  if (n < 2) return out;
  std::map<std::size_t, std::vector<HubSide>> side_cache;
  auto sides_of = [&](std::size_t b) -> const std::vector<HubSide>& {
    auto it = side_cache.find(b);
    if (it == side_cache.end()) it = side_cache.emplace(b, sides(b)).first;
    return it->second;
  };
  for (bool hub_edge : {false, true}) {
    for (std::size_t k = 0; k + 2 <= n; ++k) {
      for (const Parts& inner : partitions(k, 1)) {
        if (!hub_edge && inner.empty()) continue;
        Parts orders;
        for (std::size_t p : inner) orders.push_back(p + 2);
        const std::size_t rest = n - 2 - k;
        for (std::size_t a = 0; a <= rest; ++a) {
          for (const HubSide& su : sides_of(a)) {
            for (const HubSide& sv : sides_of(rest - a)) {
              if (sv < su) continue;
              FamilyConfig cfg = FamilyConfig::g2(hub_edge, orders, su, sv);
              if (cfg.hub_degree_u() < 3 || cfg.hub_degree_v() < 3) continue;
              out.push_back(std::move(cfg));
            }
          }
        }
      }
    }
  }
  return out;
}

const char* to_string(Family f) { return f == Family::G1 ? "G1" : "G2"; }

Family parse_family(const std::string& text) {
  std::string up;
  for (char ch : text) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  if (up == "G1") return Family::G1;
  if (up == "G2") return Family::G2;
  throw std::invalid_argument("unknown family '" + text + "' (expected G1 or G2)");
}

const char* to_string(TheoremTag t) {
  switch (t) {
    case TheoremTag::star: return "K_{1,n-1}";
    case TheoremTag::prism_star: return "K_2+K_{1,m}";
    case TheoremTag::complete_bip_2: return "K_{2,n-2}";
    case TheoremTag::firefly_r_s_0: return "F_{r,s,0}";
    case TheoremTag::join_one: return "K_1v(rK_1usK_2uK_{1,t})";
    case TheoremTag::join_two: return "K_2v(n-2)K_1";
    case TheoremTag::none: return "none";
  }
  return "none";
}

TagResult theorem_tag(const Graph& g) {
  const std::size_t n = g.order();
  if (is_star_graph(g)) return {TheoremTag::star, "n=" + std::to_string(n), true};
  if (is_join_two(g)) return {TheoremTag::join_two, "n=" + std::to_string(n), true};
  if (is_k2_n(g)) return {TheoremTag::complete_bip_2, "n=" + std::to_string(n), true};
  if (auto m = prism_star_size(g)) return {TheoremTag::prism_star, "m=" + std::to_string(*m), true};

  // One dominating hub; the rest splits into K_1s, K_2s and at most one star K_{1,t}, t >= 2.
  for (Vertex h : of_degree(g, n - 1)) {
    const Vertex hv[] = {h};
    const Graph rest = without_vertices(g, hv);
    std::size_t r = 0;
    std::size_t s = 0;
    std::size_t stars = 0;
    std::size_t t = 0;
    bool ok = true;
    for (const auto& comp : components(rest)) {
      if (comp.size() == 1) {
        ++r;
      } else if (comp.size() == 2) {
        ++s;
      } else {
        const Graph c = induced_subgraph(rest, comp);
        if (!is_star_graph(c)) {
          ok = false;
          break;
        }
        ++stars;
        t = comp.size() - 1;
      }
    }
    if (!ok || stars > 1) continue;
    if (stars == 0) {
      std::string params = "r=" + std::to_string(s) + ",s=" + std::to_string(r);
      return {TheoremTag::firefly_r_s_0, params, s >= 1 && r >= 1};
    }
    std::string params = "r=" + std::to_string(r) + ",s=" + std::to_string(s) + ",t=" + std::to_string(t);
    return {TheoremTag::join_one, params, r + s >= 2};
  }
  return {};
}

ClassificationVerdict classify_config(const FamilyConfig& cfg) {
  const Graph g = realize(cfg);
  ClassificationVerdict v;
  v.graph6 = to_graph6(g);
  v.config = cfg.to_string();
  v.n = g.order();
  v.family = cfg.family;
  v.bipartite = is_bipartite(g);
  v.integral = is_L_integral(g);
  v.tag = theorem_tag(g);
  const bool listed = v.tag.tag != TheoremTag::none;
  v.structural_agreement = v.integral == listed;
  v.literal_agreement = v.integral == (listed && v.tag.conditions_met);
  return v;
}

std::size_t TheoremReport::literal_disagreements() const {
  std::size_t k = 0;
  for (const auto& row : summary) k += row.literal_disagreements;
  return k;
}

std::size_t TheoremReport::structural_disagreements() const {
  std::size_t k = 0;
  for (const auto& row : summary) k += row.structural_disagreements;
  return k;
}

TheoremReport verify_theorem(std::size_t n_min, std::size_t n_max, unsigned jobs, std::size_t budget) {
  if (n_max > budget) {
    throw BudgetExceeded("n_max " + std::to_string(n_max) + " exceeds the budget " + std::to_string(budget));
  }
  if (n_min > n_max) throw std::invalid_argument("n_min must not exceed n_max");
  TheoremReport report;
  report.n_min = n_min;
  report.n_max = n_max;

  std::vector<FamilyConfig> work;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    for (Family f : {Family::G1, Family::G2}) {
      auto cfgs = enumerate_family(f, n);
      report.summary.push_back({n, f, cfgs.size(), 0, 0, 0});
      work.insert(work.end(), cfgs.begin(), cfgs.end());
    }
  }

  report.verdicts.resize(work.size());
  std::vector<std::exception_ptr> errors(work.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      try {
        report.verdicts[i] = classify_config(work[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::size_t i = 0;
  for (auto& row : report.summary) {
    for (std::size_t k = 0; k < row.graphs; ++k, ++i) {
      const auto& v = report.verdicts[i];
      row.integral += v.integral;
      row.literal_disagreements += !v.literal_agreement;
      row.structural_disagreements += !v.structural_agreement;
    }
  }
  return report;
}

}  // namespace lapint
