// Cyclic Jacobi diagonalisation of complex Hermitian matrices.
//
// Each rotation J = D R D^H zeroes one off-diagonal pair, where
// D = diag(1, e^{-i phi}) strips the phase of a_pq and R is the usual real
// Jacobi rotation for the resulting real symmetric 2x2 block.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qsep/linalg.hpp"

namespace qsep {
namespace {

double off_diagonal_norm2(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return s;
}

double frobenius_norm2(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& v : a.data()) s += std::norm(v);
  return s;
}

}  // namespace

EigenDecomposition hermitian_eigen(const HermitianOperator& op, bool want_vectors) {
  ComplexMatrix a = op.matrix();
  const std::size_t d = a.dim();
  ComplexMatrix v = want_vectors ? ComplexMatrix::identity(d) : ComplexMatrix{};

  const double total = frobenius_norm2(a);
  // Relative stopping threshold on the squared off-diagonal mass.
  const double eps = 1e-30 * std::max(total, 1e-300);

  int sweep = 0;
  for (; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_norm2(a) <= eps) break;
    for (std::size_t p = 0; p + 1 < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const Complex phase = apq / mag;  // e^{i phi}
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // J = [[c, s e^{i phi}], [-s e^{-i phi}, c]] on (p, q).
        const Complex jpq = s * phase;
        const Complex jqp = -s * std::conj(phase);

        // A <- A J (columns p, q).
        for (std::size_t k = 0; k < d; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * c + akq * jqp;
          a(k, q) = akp * jpq + akq * c;
        }
        // A <- J^H A (rows p, q).
        for (std::size_t k = 0; k < d; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;

        if (want_vectors) {
          for (std::size_t k = 0; k < d; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = vkp * c + vkq * jqp;
            v(k, q) = vkp * jpq + vkq * c;
          }
        }
      }
    }
  }
  if (sweep == kMaxJacobiSweeps && off_diagonal_norm2(a) > eps) {
    throw std::runtime_error("hermitian_eigen: no convergence after " +
                             std::to_string(kMaxJacobiSweeps) + " sweeps");
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out;
  out.values.reserve(d);
  for (auto i : order) out.values.push_back(a(i, i).real());
  if (want_vectors) {
    out.vectors = ComplexMatrix(d);
    for (std::size_t col = 0; col < d; ++col)
      for (std::size_t k = 0; k < d; ++k) out.vectors(k, col) = v(k, order[col]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const HermitianOperator& op) {
  return hermitian_eigen(op, false).values;
}

double min_eigenvalue(const HermitianOperator& op) { return hermitian_eigenvalues(op).front(); }

}  // namespace qsep
