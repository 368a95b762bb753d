#include "lapint/family_config.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lapint {

namespace {

std::string join_sizes(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

void check_side(const HubSide& side, const char* hub) {
  for (std::size_t c : side.cycles) {
    if (c < 3) throw std::invalid_argument(std::string("cycle at ") + hub + " has length " + std::to_string(c) + " < 3");
  }
  for (std::size_t p : side.pendants) {
    if (p < 1) throw std::invalid_argument(std::string("pendant path at ") + hub + " is empty");
  }
}

struct Labeler {
  std::vector<Edge> edges;
  Vertex next = 0;

  Vertex fresh() { return next++; }

  void add_side(const HubSide& side, Vertex hub) {
    for (std::size_t c : side.cycles) {
      Vertex prev = hub;
      for (std::size_t i = 0; i + 1 < c; ++i) {
        Vertex x = fresh();
        edges.emplace_back(prev, x);
        prev = x;
      }
      edges.emplace_back(prev, hub);
    }
    for (std::size_t p : side.pendants) {
      Vertex prev = hub;
      for (std::size_t i = 0; i < p; ++i) {
        Vertex x = fresh();
        edges.emplace_back(prev, x);
        prev = x;
      }
    }
  }
};

}  // namespace

std::size_t HubSide::vertex_count() const {
  std::size_t n = std::accumulate(pendants.begin(), pendants.end(), std::size_t{0});
  for (std::size_t c : cycles) n += c - 1;
  return n;
}

FamilyConfig FamilyConfig::g1(HubSide hub) {
  FamilyConfig cfg;
  cfg.family = Family::G1;
  cfg.u = std::move(hub);
  return cfg;
}

FamilyConfig FamilyConfig::g2(bool hub_edge, std::vector<std::size_t> internal_paths, HubSide u, HubSide v) {
  FamilyConfig cfg;
  cfg.family = Family::G2;
  cfg.hub_edge = hub_edge;
  cfg.internal_paths = std::move(internal_paths);
  cfg.u = std::move(u);
  cfg.v = std::move(v);
  return cfg;
}

FamilyConfig FamilyConfig::normalized() const {
  FamilyConfig out = *this;
  auto sort_side = [](HubSide& s) {
    std::sort(s.cycles.begin(), s.cycles.end());
    std::sort(s.pendants.begin(), s.pendants.end());
  };
  std::sort(out.internal_paths.begin(), out.internal_paths.end());
  sort_side(out.u);
  sort_side(out.v);
  if (out.family == Family::G1) {
    out.hub_edge = false;
    out.internal_paths.clear();
    out.v = {};
  } else if (out.v < out.u) {
    std::swap(out.u, out.v);
  }
  return out;
}

std::size_t FamilyConfig::order() const {
  if (family == Family::G1) return 1 + u.vertex_count();
  std::size_t n = 2 + u.vertex_count() + v.vertex_count();
  for (std::size_t p : internal_paths) n += p - 2;
  return n;
}

std::size_t FamilyConfig::hub_degree_u() const {
  std::size_t d = u.degree_contribution();
  if (family == Family::G2) d += internal_paths.size() + (hub_edge ? 1 : 0);
  return d;
}

std::size_t FamilyConfig::hub_degree_v() const {
  if (family == Family::G1) return 0;
  return v.degree_contribution() + internal_paths.size() + (hub_edge ? 1 : 0);
}

void FamilyConfig::validate() const {
  check_side(u, "u");
  if (family == Family::G1) {
    if (hub_edge || !internal_paths.empty() || !v.cycles.empty() || !v.pendants.empty()) {
      throw std::invalid_argument("one-hub config has second-hub attachments");
    }
    if (hub_degree_u() < 3) throw std::invalid_argument("hub degree " + std::to_string(hub_degree_u()) + " < 3");
    return;
  }
  check_side(v, "v");
  for (std::size_t p : internal_paths) {
    if (p < 3) throw std::invalid_argument("internal path order " + std::to_string(p) + " < 3");
  }
  if (!hub_edge && internal_paths.empty()) throw std::invalid_argument("hubs are not connected");
  if (hub_degree_u() < 3) throw std::invalid_argument("hub u degree " + std::to_string(hub_degree_u()) + " < 3");
  if (hub_degree_v() < 3) throw std::invalid_argument("hub v degree " + std::to_string(hub_degree_v()) + " < 3");
}

bool FamilyConfig::is_valid() const {
  try {
    validate();
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::string FamilyConfig::to_string() const {
  std::ostringstream os;
  auto side = [&](const HubSide& s, const std::string& suffix) {
    if (!s.cycles.empty()) os << " cycles" << suffix << "=" << join_sizes(s.cycles);
    if (!s.pendants.empty()) os << " pendants" << suffix << "=" << join_sizes(s.pendants);
  };
  if (family == Family::G1) {
    os << "g1";
    side(u, "");
  } else {
    os << "g2";
    if (hub_edge) os << " hub-edge";
    if (!internal_paths.empty()) os << " path-orders=" << join_sizes(internal_paths);
    side(u, "-u");
    side(v, "-v");
  }
  return os.str();
}

Graph realize(const FamilyConfig& cfg) {
  cfg.validate();
  Labeler lab;
  if (cfg.family == Family::G1) {
    Vertex hub = lab.fresh();
    lab.add_side(cfg.u, hub);
    return Graph::from_edges(lab.next, lab.edges);
  }
  Vertex u = lab.fresh();
  Vertex v = lab.fresh();
  if (cfg.hub_edge) lab.edges.emplace_back(u, v);
  for (std::size_t p : cfg.internal_paths) {
    Vertex prev = u;
    for (std::size_t i = 0; i + 2 < p; ++i) {
      Vertex x = lab.fresh();
      lab.edges.emplace_back(prev, x);
      prev = x;
    }
    lab.edges.emplace_back(prev, v);
  }
  lab.add_side(cfg.u, u);
  lab.add_side(cfg.v, v);
  return Graph::from_edges(lab.next, lab.edges);
}

std::optional<FamilyConfig> decompose(const Graph& g) {
  std::vector<Vertex> hubs;
  for (Vertex x = 0; x < g.order(); ++x) {
    std::size_t d = g.degree(x);
    if (d >= 3) {
      hubs.push_back(x);
    } else if (d == 0) {
      return std::nullopt;
    }
  }
  if (hubs.empty() || hubs.size() > 2 || !is_connected(g)) return std::nullopt;

  std::vector<bool> is_hub(g.order(), false);
  for (Vertex h : hubs) is_hub[h] = true;
  Graph rest = without_vertices(g, hubs);
  std::vector<Vertex> original;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (!is_hub[x]) original.push_back(x);
  }

  FamilyConfig cfg;
  cfg.family = hubs.size() == 1 ? Family::G1 : Family::G2;
  cfg.hub_edge = hubs.size() == 2 && g.adjacent(hubs[0], hubs[1]);
  for (const auto& comp : components(rest)) {
    std::size_t to_u = 0;
    std::size_t to_v = 0;
    for (Vertex local : comp) {
      for (Vertex w : g.neighbors(original[local])) {
        if (w == hubs[0]) ++to_u;
        if (hubs.size() == 2 && w == hubs[1]) ++to_v;
      }
    }
    const std::size_t k = comp.size();
    if (to_u == 1 && to_v == 1) {
      cfg.internal_paths.push_back(k + 2);
    } else if (to_u == 2 && to_v == 0) {
      cfg.u.cycles.push_back(k + 1);
    } else if (to_u == 1 && to_v == 0) {
      cfg.u.pendants.push_back(k);
    } else if (to_u == 0 && to_v == 2) {
      cfg.v.cycles.push_back(k + 1);
    } else if (to_u == 0 && to_v == 1) {
      cfg.v.pendants.push_back(k);
    } else {
      return std::nullopt;
    }
  }
  return cfg.normalized();
}

Membership family_membership(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return Membership::neither;
  std::size_t hubs = 0;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (g.degree(x) >= 3) ++hubs;
  }
  if (hubs == 1) return Membership::G1;
  if (hubs == 2) return is_bipartite(g) ? Membership::G2 : Membership::G2_nonbipartite;
  return Membership::neither;
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::G1: return "G1";
    case Membership::G2: return "G2";
    case Membership::G2_nonbipartite: return "G2_nonbipartite";
    case Membership::neither: return "neither";
  }
  return "neither";
}

std::vector<std::size_t> AssembledLaplacian::offsets() const {
  std::vector<std::size_t> out;
  for (const auto& b : blocks) {
    if (b.offset > 0) out.push_back(b.offset);
  }
  return out;
}

AssembledLaplacian assemble_laplacian(const FamilyConfig& cfg) {
  cfg.validate();
  const std::size_t n = cfg.order();
  const std::size_t hubs = cfg.family == Family::G1 ? 1 : 2;
  AssembledLaplacian out;
  out.matrix = IntMatrix(n, n);
  IntMatrix& m = out.matrix;

  m(0, 0) = static_cast<long>(cfg.hub_degree_u());
  if (hubs == 2) {
    m(1, 1) = static_cast<long>(cfg.hub_degree_v());
    if (cfg.hub_edge) m(0, 1) = m(1, 0) = -1;
  }
  out.blocks.push_back({"hubs", 0, hubs});

  std::size_t at = hubs;
  auto place = [&](const IntMatrix& block, const std::string& name) {
    for (std::size_t i = 0; i < block.rows(); ++i) {
      for (std::size_t j = 0; j < block.cols(); ++j) m(at + i, at + j) = block(i, j);
    }
    out.blocks.push_back({name, at, block.rows()});
  };
  auto couple = [&](std::size_t hub, std::size_t row) { m(hub, row) = m(row, hub) = -1; };

  for (std::size_t p : cfg.internal_paths) {
    const std::size_t k = p - 2;
    place(path_interior_block(k), "internal P" + std::to_string(p));
    couple(0, at);
    couple(1, at + k - 1);
    at += k;
  }
  auto side = [&](const HubSide& s, std::size_t hub, const std::string& tag) {
    for (std::size_t c : s.cycles) {
      const std::size_t k = c - 1;
      place(path_interior_block(k), "cycle C" + std::to_string(c) + " at " + tag);
      couple(hub, at);
      couple(hub, at + k - 1);
      at += k;
    }
    for (std::size_t len : s.pendants) {
      IntMatrix block = path_interior_block(len);
      block(len - 1, len - 1) = 1;
      place(block, "pendant path of length " + std::to_string(len) + " at " + tag);
      couple(hub, at);
      at += len;
    }
  };
  side(cfg.u, 0, "u");
  if (hubs == 2) side(cfg.v, 1, "v");
  return out;
}

AssembledLaplacian assemble_g2_laplacian(const FamilyConfig& cfg) {
  if (cfg.family != Family::G2) throw std::invalid_argument("assemble_g2_laplacian: config has one hub");
  return assemble_laplacian(cfg);
}

}  // namespace lapint
