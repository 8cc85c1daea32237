#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsep/linalg.hpp"

namespace qsep {

/// Single-qubit positive maps.
///   P         population-only decay: both populations -> their mean, coherences kept
///   T         transpose
///   H         reduction map, 1 Tr(s) - s
///   X         conjugation by the NOT gate
///   Identity
enum class MapKind { P, T, H, X, Identity };

std::string_view to_string(MapKind kind);

/// Which map acts on which qubit (1-based). Unlisted qubits get Identity.
struct MapSpec {
  std::vector<std::pair<int, MapKind>> assignments;

  static MapSpec single(int qubit, MapKind kind) { return MapSpec{{{qubit, kind}}}; }
  static MapSpec all(int n_qubits, MapKind kind);

  /// Throws std::invalid_argument on duplicate or out-of-range qubits.
  void validate(int n_qubits) const;

  bool operator==(const MapSpec&) const = default;
};

std::string to_string(const MapSpec& spec);

/// Entries of a 2x2 block in row-major order: {m00, m01, m10, m11}.
using Block2 = std::array<Complex, 4>;

/// Linear action of a single-qubit map on an arbitrary (not necessarily
/// Hermitian) 2x2 matrix.
Block2 apply_map(MapKind kind, const Block2& m);

HermitianOperator lambda_p(const HermitianOperator& sigma);
HermitianOperator lambda_t(const HermitianOperator& sigma);
HermitianOperator lambda_h(const HermitianOperator& sigma);
HermitianOperator lambda_x(const HermitianOperator& sigma);
HermitianOperator apply_single_qubit(MapKind kind, const HermitianOperator& sigma);

/// Applies `kind` to qubit k and the identity elsewhere, element by element.
/// For P this is: entries with equal k-bits become the mean of their two
/// k-partners, entries with different k-bits are untouched.
HermitianOperator apply_on_qubit(const HermitianOperator& rho, int k, MapKind kind);

/// Slow reference route for apply_on_qubit built from explicit injection
/// matrices and matrix products. Meant for cross-checks, not production use.
HermitianOperator apply_on_qubit_dense(const HermitianOperator& rho, int k, MapKind kind);

/// Composes apply_on_qubit over the spec's assignments in ascending qubit order.
HermitianOperator apply_product(const HermitianOperator& rho, const MapSpec& spec);

}  // namespace qsep
