#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lapint/graph.hpp"
#include "lapint/matrix.hpp"
#include "lapint/roots.hpp"

namespace lapint {

enum class MatrixKind { L, Q };
const char* to_string(MatrixKind kind);
/// "L" or "Q" (case-insensitive); throws std::invalid_argument otherwise.
MatrixKind parse_kind(const std::string& text);

/// D - A.
IntMatrix laplacian(const Graph& g);
/// D + A.
IntMatrix signless_laplacian(const Graph& g);
IntMatrix graph_matrix(const Graph& g, MatrixKind kind);

UPoly characteristic_polynomial(const Graph& g, MatrixKind kind);

/// Exact spectrum: integer eigenvalues with multiplicity plus isolating intervals
/// for the roots of the integer-root-free residual.
struct SpectrumReport {
  std::string graph6;
  MatrixKind kind = MatrixKind::L;
  std::size_t order = 0;
  UPoly char_poly;
  RootReport roots;
  /// Every eigenvalue with multiplicity, descending.
  std::vector<RealRoot> eigenvalues;
  Rational precision;
  bool integral = false;
};

/// Default display precision 1/10^6.
SpectrumReport spectrum(const Graph& g, MatrixKind kind, const Rational& precision = pow10_inverse(6));

bool is_integral(const Graph& g, MatrixKind kind);
bool is_L_integral(const Graph& g);
bool is_Q_integral(const Graph& g);

/// Second-smallest Laplacian eigenvalue, exact when it is an integer and an
/// isolating interval otherwise.
RealRoot algebraic_connectivity(const Graph& g, const Rational& precision = pow10_inverse(6));

/// Sign of a(G) - x for rational x, decided by root counting alone.
int compare_algebraic_connectivity(const Graph& g, const Rational& x);

struct KirklandReport {
  std::size_t connectivity = 0;
  /// a(G) compared to k(G): -1 below, 0 equal. Never above.
  int a_vs_k = 0;
  /// Vertex set of G_b in a join G = G_a v G_b with |G_b| = k(G) and G_a disconnected.
  std::optional<std::vector<Vertex>> join_part;
  /// a(G_b) >= 2k - n for the join found (a(K_1) taken as 0).
  bool join_part_condition = false;
  /// The two sides of the criterion agree: a = k exactly when a qualifying join exists.
  bool consistent = false;
};

/// Decides whether a(G) = k(G) and searches for the join decomposition that the
/// equality characterizes. Rejects disconnected and complete graphs.
KirklandReport kirkland_decomposition_check(const Graph& g);

struct InterlacingReport {
  bool holds = true;
  std::size_t thresholds_checked = 0;
  /// First threshold at which a counting inequality failed.
  std::optional<Rational> witness;
};

/// With H = G minus r edges and eigenvalues in descending order,
/// mu_i(G) >= mu_i(H) >= mu_{i+r}(G). Checked in the equivalent counting form
/// N_H(>x) <= N_G(>x) <= N_H(>x) + r at every eigenvalue, every isolating
/// interval endpoint and a uniform grid of rational thresholds.
InterlacingReport edge_interlacing_check(const Graph& g, std::span<const Edge> removed);

/// Cauchy interlacing for a principal submatrix B (order m) of a symmetric
/// matrix A (order n): N_B(>x) <= N_A(>x) <= N_B(>x) + (n - m).
InterlacingReport principal_interlacing_check(const IntMatrix& a, std::span<const std::size_t> removed);

}  // namespace lapint
