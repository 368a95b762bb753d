#pragma once

#include <string>

#include <json.hpp>

#include "lapint/enumerator.hpp"
#include "lapint/matrix.hpp"
#include "lapint/partition.hpp"
#include "lapint/proposition_cases.hpp"
#include "lapint/spectral.hpp"

namespace lapint {

using Json = nlohmann::ordered_json;

Json to_json(const IntMatrix& m);
Json to_json(const PolyMatrix& m);
Json to_json(const Params& p);
Json to_json(const Partition& p);

/// {graph6, kind, order, char_poly, integer_roots: [[root, mult]...], residual,
///  intervals: [[lo, hi]...], eigenvalues: [[decimal, mult]...], integral}
Json to_json(const SpectrumReport& r);
Json to_json(const KirklandReport& r);
Json to_json(const ClassificationVerdict& v);
Json to_json(const PolynomialReport& r);
Json to_json(const SignClaimReport& r);
Json to_json(const ClosedFormReport& r);
Json to_json(const CrossCheckReport& r);
Json to_json(const DirectCheckReport& r);
Json to_json(const CaseVerdict& v);
Json to_json(const SuspectedTypo& t);
Json to_json(const ErratumEntry& e);

/// Invariants, family membership, integrality, theorem tag and, for connected
/// non-complete graphs, the Kirkland check.
Json classification_json(const Graph& g);

/// Quotient of m by p with both characteristic polynomials and the cofactor.
Json quotient_json(const IntMatrix& m, const Partition& p);

/// Header plus one line per (n, family): n, family, graphs, integral,
/// literal and structural disagreement counts.
std::string summary_tsv(const TheoremReport& r);

/// Number of decimal places that resolves the given precision.
unsigned decimal_places(const Rational& precision);

}  // namespace lapint
