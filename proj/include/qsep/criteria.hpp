#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "qsep/linalg.hpp"
#include "qsep/maps.hpp"

namespace qsep {

/// Margin below which an element is not considered to exceed its bound.
inline constexpr double kTolCrit = 1e-9;

/// Largest n for which the full off-diagonal scan is allowed.
inline constexpr int kMaxScanQubits = 8;

enum class Verdict { Inseparable, Inconclusive };
enum class Criterion { LZAntidiagonal, HammingOffDiagonal, MapNegativity };

std::string_view to_string(Verdict v);
std::string_view to_string(Criterion c);

/// Element (a, b) with a > b whose magnitude beats the product-state bound.
struct OffDiagonalWitness {
  std::size_t a = 0;
  std::size_t b = 0;
  Complex value;
  int hamming_distance = 0;
  double bound = 0.0;  // 1 / 2^hamming_distance

  double margin() const { return std::abs(value) - bound; }
};

/// Negative eigenvalue of a mapped operator with its eigenvector.
struct EigenWitness {
  double min_eigenvalue = 0.0;
  std::vector<Complex> eigenvector;
};

using Witness = std::variant<OffDiagonalWitness, EigenWitness>;

/// Outcome of a one-sided test. Inconclusive never claims separability.
struct DetectionReport {
  Verdict verdict = Verdict::Inconclusive;
  Criterion criterion = Criterion::HammingOffDiagonal;
  std::optional<Witness> witness;
  std::optional<MapSpec> spec_used;
  // Value the verdict was decided on even when inconclusive: best margin
  // for element scans, minimum eigenvalue for map tests.
  double statistic = 0.0;
};

/// Antidiagonal elements against (1/2)^n, for the split into single qubits.
DetectionReport lz_antidiagonal_check(const DensityOperator& rho);

/// Every off-diagonal element against 1/2^h(a,b). Limited to n <= kMaxScanQubits.
DetectionReport hamming_offdiagonal_check(const DensityOperator& rho);

/// Negative spectrum of the mapped operator.
DetectionReport map_negativity_check(const DensityOperator& rho, const MapSpec& spec,
                                     double tol_psd = kTolPsd);

/// <v|sigma|v> for v = |a> - (conj(s_ab)/|s_ab|) |b>. Throws when s_ab is zero.
double lemma2_witness_value(const HermitianOperator& sigma, std::size_t a, std::size_t b);

/// True iff all strictly-lower-triangle entries with |c| > kTolHerm share one
/// argument to within tol_arg radians. Zero entries are exempt.
bool equal_argument_check(const HermitianOperator& rho, double tol_arg);

/// Checks |(P^{(x)n}(rho))_ab| >= |rho_ab| / 2^(n - h(a,b)) within kTolCrit.
/// Requires equal_argument_check(rho, tol_arg) and a != b.
bool lemma1_bound_check(const HermitianOperator& rho, std::size_t a, std::size_t b,
                        double tol_arg = 1e-9);

}  // namespace qsep
