#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lapint/graph.hpp"
#include "lapint/matrix.hpp"

namespace lapint {

enum class Family { G1, G2 };

/// Attachments that hang off a single hub: cycles through the hub (length counts
/// the hub) and pendant paths (length counts the non-hub vertices).
struct HubSide {
  std::vector<std::size_t> cycles;
  std::vector<std::size_t> pendants;

  std::size_t vertex_count() const;
  std::size_t degree_contribution() const { return 2 * cycles.size() + pendants.size(); }
  friend auto operator<=>(const HubSide&, const HubSide&) = default;
};

/// Structural descriptor of a graph with one hub (G1) or two hubs (G2) of degree
/// at least 3, every other vertex having degree 1 or 2. Deleting the hubs leaves
/// disjoint paths; each path is an internal u-v path, a cycle through one hub, or
/// a pendant path at one hub.
struct FamilyConfig {
  Family family = Family::G1;
  bool hub_edge = false;                     // G2 only
  std::vector<std::size_t> internal_paths;   // G2 only; orders n_p >= 3 counting both hubs
  HubSide u;
  HubSide v;                                 // G2 only

  static FamilyConfig g1(HubSide hub);
  static FamilyConfig g2(bool hub_edge, std::vector<std::size_t> internal_paths, HubSide u, HubSide v);

  /// Sorted multisets; for G2 the hub sides are swapped so that u <= v.
  /// Two configs are isomorphic exactly when their normal forms are equal.
  FamilyConfig normalized() const;

  std::size_t order() const;
  std::size_t hub_degree_u() const;
  std::size_t hub_degree_v() const;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
  bool is_valid() const;

  /// Builder-language form, e.g. "g2 hub-edge path-orders=3,5 pendants-u=1".
  std::string to_string() const;

  friend auto operator<=>(const FamilyConfig&, const FamilyConfig&) = default;
};

/// Fixed labeling: hubs first (u = 0, then v = 1 for G2); internal paths in
/// stored order, each listed from the u end to the v end; then for each hub its
/// cycles followed by its pendant paths, walking away from the hub.
Graph realize(const FamilyConfig& cfg);

/// Recovers the normalized config of a family member, or nullopt.
std::optional<FamilyConfig> decompose(const Graph& g);

enum class Membership { G1, G2, G2_nonbipartite, neither };
Membership family_membership(const Graph& g);
const char* to_string(Membership m);

struct LaplacianBlock {
  std::string name;
  std::size_t offset = 0;
  std::size_t size = 0;
};

struct AssembledLaplacian {
  IntMatrix matrix;
  std::vector<LaplacianBlock> blocks;
  std::vector<std::size_t> offsets() const;
};

/// L(realize(cfg)) put together block by block from the hub block, the coupling
/// rows and the per-path interior blocks, without going through a Graph.
AssembledLaplacian assemble_laplacian(const FamilyConfig& cfg);

/// assemble_laplacian restricted to two-hub configs.
AssembledLaplacian assemble_g2_laplacian(const FamilyConfig& cfg);

}  // namespace lapint
