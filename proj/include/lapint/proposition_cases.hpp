#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lapint/arith.hpp"
#include "lapint/family_config.hpp"
#include "lapint/graph.hpp"
#include "lapint/matrix.hpp"
#include "lapint/mpoly.hpp"
#include "lapint/partition.hpp"
#include "lapint/spectral.hpp"

namespace lapint {

struct UnknownCase : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParameterOutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Parameter assignment such as {"s": 2, "t": 1}.
using Params = std::map<std::string, long>;

std::string to_string(const Params& p);

/// Inclusive bounds per parameter; an absent upper bound is unbounded.
using ParamRange = std::map<std::string, std::pair<long, std::optional<long>>>;

struct PointClaim {
  Rational at;
  int sign = 0;
  std::optional<std::string> printed;      // exact value as printed
  std::optional<std::string> approximate;  // decimal approximation as printed
};

struct SignClaim {
  std::string label;
  ParamRange range;
  std::vector<std::pair<Params, std::string>> exclude;  // point and reason
  std::vector<PointClaim> points;
  Rational lo;
  Rational hi;
};

struct ClosedForm {
  std::string label;
  Params fixed;
  ParamRange range;
  std::optional<std::string> printed_identity;
  std::vector<std::string> printed_roots;
  std::vector<std::pair<std::string, unsigned>> printed_spectrum;
  /// lower < sqrt(radicand) < upper
  std::optional<std::array<std::string, 3>> bracket;
};

/// Two hubs u, v (optionally adjacent) joined by s paths of order 3, t paths of
/// order 4 and at most one longer path. The quotient cells are u, v, the middles of
/// the order-3 paths, the first and second interior vertices of the order-4 paths,
/// then each interior vertex of the long path on its own.
struct PropositionCase {
  std::string id;
  std::vector<std::string> parameters;
  bool hub_adjacent = false;
  std::string p3;  // count of order-3 paths, "s" or "0"
  std::string p4;  // count of order-4 paths, "t" or "0"
  std::size_t long_path = 0;
  std::vector<std::vector<std::string>> printed_matrix;
  std::string printed_polynomial;
  std::map<std::string, std::string> variable_aliases;
  std::vector<SignClaim> claims;
  std::vector<Params> direct_checks;
  std::vector<ClosedForm> closed_forms;

  std::size_t dimension() const { return printed_matrix.size(); }
};

enum class TypoKind { coefficient, matrix_entry, claim_value };

struct SuspectedTypo {
  std::string case_id;
  TypoKind kind = TypoKind::coefficient;
  std::optional<unsigned> power;                                // coefficient
  std::vector<std::pair<std::size_t, std::size_t>> entries;     // matrix_entry
  std::optional<Rational> at;                                   // claim_value
  std::string printed;
  std::optional<std::string> corrected;
  std::string note;
};

/// A matrix block printed in the general setup rather than in one case.
struct PrintedBlock {
  enum class Kind { path_interior, coupling };
  std::string name;
  Kind kind = Kind::path_interior;
  std::size_t order = 0;       // path_interior: block order
  bool hub_adjacent = false;   // coupling
  std::size_t path_order = 0;  // coupling: order of the u-v path used to realize it
  std::vector<std::vector<std::string>> printed;  // coupling: a single entry
  std::string note;
};

const std::vector<PropositionCase>& proposition_cases();
const std::vector<SuspectedTypo>& suspected_typos();
const std::vector<PrintedBlock>& printed_blocks();
/// Throws UnknownCase.
const PropositionCase& find_case(std::string_view id);

/// verbatim reproduces the printed matrix; corrected applies registered matrix-entry typos.
enum class Transcription { verbatim, corrected };

PolyMatrix build_quotient(const PropositionCase& c, Transcription mode = Transcription::corrected);
/// Concrete instance. Throws ParameterOutOfRange unless every parameter is present and
/// nonnegative and both hubs have degree at least 3.
IntMatrix build_quotient(const PropositionCase& c, const Params& p,
                         Transcription mode = Transcription::corrected);

/// The symbolic quotient obtained from realized graphs alone: entries are fitted
/// from a few instances and confirmed on further ones.
PolyMatrix derive_quotient(const PropositionCase& c);

/// The case's graph, built directly with the realize() labeling. Checks nothing
/// about family membership, so small excluded instances can be inspected too.
Graph case_graph(const PropositionCase& c, const Params& p);
FamilyConfig case_config(const PropositionCase& c, const Params& p);
/// Quotient cells of the case's graph, empty cells dropped.
Partition case_partition(const PropositionCase& c, const Params& p);
/// Indices of the quotient rows whose cells are nonempty at p.
std::vector<std::size_t> live_cells(const PropositionCase& c, const Params& p);

struct CoefficientDiff {
  unsigned power = 0;
  MPoly printed;
  MPoly computed;
  bool registered = false;
};

struct MatrixDiff {
  std::size_t row = 0;
  std::size_t col = 0;
  MPoly printed;
  MPoly derived;
  bool registered = false;
};

struct PolynomialReport {
  std::string case_id;
  MPoly printed;
  MPoly computed;
  std::vector<CoefficientDiff> diffs;
  /// Printed matrix against the quotient derived from realized graphs.
  std::vector<MatrixDiff> matrix_diffs;
  /// The corrected transcription equals the derived quotient.
  bool corrected_matches_derived = false;

  bool verified() const { return diffs.empty() && matrix_diffs.empty(); }
  /// Every difference is on the suspected-typo list.
  bool explained() const;
};

PolynomialReport verify_printed_polynomial(const PropositionCase& c);

/// The characteristic polynomial of the corrected quotient, in λ, s and t.
MPoly case_polynomial(const PropositionCase& c);

struct ExpressionCheck {
  Rational at;
  std::string printed;
  /// Exact p(at) in the parameters, rendered with rational coefficients.
  std::string exact;
  /// The printed text is a decimal approximation, compared to two places.
  bool approximate = false;
  bool matches = true;
  bool registered = false;
};

struct SignFailure {
  Params params;
  Rational at;
  Rational value;
};

struct SignClaimReport {
  std::string case_id;
  std::string label;
  Rational lo;
  Rational hi;
  std::size_t grid_points = 0;
  std::size_t excluded_points = 0;
  std::vector<SignFailure> sign_failures;
  /// Grid points where no root was found strictly inside (lo, hi).
  std::vector<Params> sturm_failures;
  std::vector<ExpressionCheck> expressions;

  bool holds() const { return sign_failures.empty() && sturm_failures.empty(); }
};

/// Evaluates every claim at every grid point with parameters up to grid_max.
/// A nonempty window further restricts the parameters it names.
std::vector<SignClaimReport> verify_sign_claims(const PropositionCase& c, long grid_max = 20,
                                                const ParamRange& window = {});

struct ClosedFormReport {
  std::string case_id;
  std::string label;
  std::size_t grid_points = 0;
  std::optional<bool> identity;
  std::optional<bool> roots;
  std::optional<bool> bracket;
  std::optional<bool> spectrum;
  /// Every instance checked has a non-integer eigenvalue.
  bool non_integral = true;
  std::vector<std::string> problems;

  bool holds() const { return problems.empty(); }
};

ClosedFormReport closed_form_root_check(const PropositionCase& c, std::string_view label, long grid_max = 20);

struct CrossCheckReport {
  std::string case_id;
  Params params;
  bool in_family = false;
  /// case_graph equals realize(case_config) (only meaningful in the family).
  bool realize_matches = false;
  bool equitable = false;
  bool quotient_matches = false;
  bool divides = false;
  bool integral = false;

  bool ok() const { return equitable && quotient_matches && divides && (!in_family || realize_matches); }
};

CrossCheckReport cross_check_with_realization(const PropositionCase& c, const Params& p);

struct DirectCheckReport {
  Params params;
  std::size_t order = 0;
  bool integral = false;
  std::string char_poly;
};

std::vector<DirectCheckReport> run_direct_checks(const PropositionCase& c);

struct CaseVerdict {
  std::string case_id;
  PolynomialReport polynomial;
  std::vector<SignClaimReport> claims;
  std::vector<ClosedFormReport> closed_forms;
  std::vector<CrossCheckReport> cross_checks;
  std::vector<DirectCheckReport> direct;

  bool ok() const;
};

/// Everything for one case. Cross-checks run on the grid points up to cross_max.
CaseVerdict verify_case(const PropositionCase& c, long grid_max = 20, long cross_max = 4,
                        const ParamRange& window = {});

/// All cases, in registry order, computed on up to `jobs` threads.
std::vector<CaseVerdict> verify_all_cases(long grid_max = 20, long cross_max = 4, unsigned jobs = 0,
                                          const ParamRange& window = {});

/// One suspected misprint, confirmed or refuted by recomputation.
struct ErratumEntry {
  std::string source;    // case id or block name
  std::string kind;      // coefficient, matrix_entry, claim_value, path_interior, coupling
  std::string location;  // e.g. "power 1", "(2,3)", "p(1)"
  std::string printed;
  std::string computed;
  /// The recomputed value differs from the printed one.
  bool confirmed = false;
  std::string note;
};

/// Every registered typo and printed block, each checked against a fresh computation.
std::vector<ErratumEntry> erratum_report();

/// "2..10", "3" or "2.." (unbounded above).
std::pair<long, std::optional<long>> parse_param_bounds(std::string_view text);

}  // namespace lapint
