#include "qsep/criteria.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qsep {

std::string_view to_string(Verdict v) {
  return v == Verdict::Inseparable ? "Inseparable" : "Inconclusive";
}

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::LZAntidiagonal: return "LZAntidiagonal";
    case Criterion::HammingOffDiagonal: return "HammingOffDiagonal";
    case Criterion::MapNegativity: return "MapNegativity";
  }
  return "?";
}

namespace {

// Shared scan over strictly-lower-triangle elements. Keeps the largest
// margin; ties go to the first (a, b) in lexicographic order.
template <typename PairFilter>
DetectionReport scan_offdiagonal(const DensityOperator& rho, Criterion criterion, PairFilter keep) {
  const int n = rho.n_qubits();
  const std::size_t d = rho.dim();
  std::optional<OffDiagonalWitness> best;
  for (std::size_t a = 1; a < d; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (!keep(a, b)) continue;
      const int h = hamming(a, b, n);
      const double bound = std::ldexp(1.0, -h);
      const OffDiagonalWitness w{a, b, rho(a, b), h, bound};
      if (!best || w.margin() > best->margin()) best = w;
    }
  }
  DetectionReport report;
  report.criterion = criterion;
  report.statistic = best ? best->margin() : -std::numeric_limits<double>::infinity();
  if (best && best->margin() > kTolCrit) {
    report.verdict = Verdict::Inseparable;
    report.witness = *best;
  }
  return report;
}

}  // namespace

DetectionReport lz_antidiagonal_check(const DensityOperator& rho) {
  const std::size_t last = rho.dim() - 1;
  return scan_offdiagonal(rho, Criterion::LZAntidiagonal,
                          [last](std::size_t a, std::size_t b) { return a + b == last; });
}

DetectionReport hamming_offdiagonal_check(const DensityOperator& rho) {
  if (rho.n_qubits() > kMaxScanQubits) {
    throw std::invalid_argument("hamming_offdiagonal_check: dense scan is limited to " +
                                std::to_string(kMaxScanQubits) + " qubits");
  }
  return scan_offdiagonal(rho, Criterion::HammingOffDiagonal,
                          [](std::size_t, std::size_t) { return true; });
}

DetectionReport map_negativity_check(const DensityOperator& rho, const MapSpec& spec, double tol_psd) {
  const HermitianOperator mapped = apply_product(rho, spec);
  const EigenDecomposition eig = hermitian_eigen(mapped, true);

  DetectionReport report;
  report.criterion = Criterion::MapNegativity;
  report.spec_used = spec;
  report.statistic = eig.values.front();
  if (eig.values.front() < -tol_psd) {
    EigenWitness w{eig.values.front(), {}};
    w.eigenvector.reserve(mapped.dim());
    for (std::size_t k = 0; k < mapped.dim(); ++k) w.eigenvector.push_back(eig.vectors(k, 0));
    report.verdict = Verdict::Inseparable;
    report.witness = std::move(w);
  }
  return report;
}

double lemma2_witness_value(const HermitianOperator& sigma, std::size_t a, std::size_t b) {
  const std::size_t d = sigma.dim();
  if (a >= d || b >= d) throw std::out_of_range("lemma2_witness_value: index out of range");
  if (a == b) throw std::invalid_argument("lemma2_witness_value: a and b must differ");
  const Complex sab = sigma(a, b);
  if (sab == Complex{}) {
    throw std::invalid_argument("lemma2_witness_value: element is zero, witness undefined");
  }
  // v has two nonzero components: v_a = 1, v_b = -conj(s_ab)/|s_ab|.
  const Complex va = 1.0;
  const Complex vb = -std::conj(sab) / std::abs(sab);
  const Complex form = std::conj(va) * sigma(a, a) * va + std::conj(va) * sigma(a, b) * vb +
                       std::conj(vb) * sigma(b, a) * va + std::conj(vb) * sigma(b, b) * vb;
  return form.real();
}

bool equal_argument_check(const HermitianOperator& rho, double tol_arg) {
  std::optional<double> reference;
  for (std::size_t i = 1; i < rho.dim(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Complex c = rho(i, j);
      if (std::abs(c) <= kTolHerm) continue;
      const double arg = std::arg(c);
      if (!reference) {
        reference = arg;
        continue;
      }
      // Wrapped difference in (-pi, pi].
      const double diff = std::remainder(arg - *reference, 2.0 * std::numbers::pi);
      if (std::abs(diff) > tol_arg) return false;
    }
  }
  return true;
}

bool lemma1_bound_check(const HermitianOperator& rho, std::size_t a, std::size_t b, double tol_arg) {
  const std::size_t d = rho.dim();
  if (a >= d || b >= d) throw std::out_of_range("lemma1_bound_check: index out of range");
  if (a == b) throw std::invalid_argument("lemma1_bound_check: a and b must differ");
  if (!equal_argument_check(rho, tol_arg)) {
    throw std::invalid_argument("lemma1_bound_check: off-diagonal arguments are not all equal");
  }
  const int n = rho.n_qubits();
  const HermitianOperator mapped = apply_product(rho, MapSpec::all(n, MapKind::P));
  const double lower = std::abs(rho(a, b)) * std::ldexp(1.0, -(n - hamming(a, b, n)));
  return std::abs(mapped(a, b)) >= lower - kTolCrit;
}

}  // namespace qsep
