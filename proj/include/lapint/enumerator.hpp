#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lapint/family_config.hpp"
#include "lapint/graph.hpp"

namespace lapint {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Every member of the family on exactly n vertices, once per isomorphism class,
/// as normalized configs in a fixed order.
std::vector<FamilyConfig> enumerate_family(Family family, std::size_t n);

const char* to_string(Family f);
/// "G1" or "G2" (case-insensitive).
Family parse_family(const std::string& text);

/// The six graph families of the classification list.
enum class TheoremTag {
  star,              // K_{1,n-1}
  prism_star,        // K_2 + K_{1,m} (Cartesian product)
  complete_bip_2,    // K_{2,n-2}
  firefly_r_s_0,     // F_{r,s,0}
  join_one,          // K_1 v (r K_1 u s K_2 u K_{1,t})
  join_two,          // K_2 v (n-2) K_1
  none,
};

const char* to_string(TheoremTag t);

struct TagResult {
  TheoremTag tag = TheoremTag::none;
  /// Parameters found (r, s, t or m as applicable), rendered like "r=2,s=1".
  std::string parameters;
  /// Whether the list's side conditions hold: r, s >= 1 for F_{r,s,0};
  /// t >= 2 and r + s >= 2 for the one-vertex join. Always true for the others.
  bool conditions_met = true;
};

/// Recognizes the listed families by degree and neighborhood structure. A firefly
/// with s = 0 or a one-vertex join with r + s < 2 gets its structural tag with
/// conditions_met = false.
TagResult theorem_tag(const Graph& g);

struct ClassificationVerdict {
  std::string graph6;
  std::string config;
  std::size_t n = 0;
  Family family = Family::G1;
  bool bipartite = false;
  bool integral = false;
  TagResult tag;
  /// integral == (tag listed with its side conditions).
  bool literal_agreement = true;
  /// integral == (structural tag present), side conditions ignored.
  bool structural_agreement = true;
};

ClassificationVerdict classify_config(const FamilyConfig& cfg);

struct SummaryRow {
  std::size_t n = 0;
  Family family = Family::G1;
  std::size_t graphs = 0;
  std::size_t integral = 0;
  std::size_t literal_disagreements = 0;
  std::size_t structural_disagreements = 0;
};

struct TheoremReport {
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::vector<ClassificationVerdict> verdicts;  // by n, then family, then enumeration order
  std::vector<SummaryRow> summary;
  std::size_t literal_disagreements() const;
  std::size_t structural_disagreements() const;
};

/// Default cap on n_max.
inline constexpr std::size_t kDefaultBudget = 12;

/// Classifies every member of both families with n_min <= n <= n_max on up to
/// `jobs` threads (0 = hardware concurrency). Output order does not depend on jobs.
/// Throws BudgetExceeded when n_max > budget.
TheoremReport verify_theorem(std::size_t n_min, std::size_t n_max, unsigned jobs = 0,
                             std::size_t budget = kDefaultBudget);

}  // namespace lapint
