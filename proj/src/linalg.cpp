#include "qsep/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qsep {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw std::invalid_argument("ComplexMatrix: expected " + std::to_string(dim_ * dim_) +
                                " entries, got " + std::to_string(data_.size()));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& v : data_) v *= scale;
  return *this;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matmul: dimension mismatch");
  const std::size_t d = a.dim();
  ComplexMatrix out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < d; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t ia = 0; ia < da; ++ia)
    for (std::size_t ja = 0; ja < da; ++ja) {
      const Complex s = a(ia, ja);
      for (std::size_t ib = 0; ib < db; ++ib)
        for (std::size_t jb = 0; jb < db; ++jb)
          out(ia * db + ib, ja * db + jb) = s * b(ib, jb);
    }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

std::optional<int> qubit_count_for_dim(std::size_t dim) {
  if (dim < 2 || !std::has_single_bit(dim)) return std::nullopt;
  return std::countr_zero(dim);
}

HermitianOperator::HermitianOperator(ComplexMatrix matrix, double tol) : matrix_(std::move(matrix)) {
  const auto n = qubit_count_for_dim(matrix_.dim());
  if (!n) {
    throw std::invalid_argument("HermitianOperator: dimension " + std::to_string(matrix_.dim()) +
                                " is not 2^n for n >= 1");
  }
  if (*n > kMaxQubits) {
    throw std::invalid_argument("HermitianOperator: " + std::to_string(*n) +
                                " qubits exceeds the cap of " + std::to_string(kMaxQubits));
  }
  n_qubits_ = *n;
  const std::size_t d = matrix_.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const Complex upper = matrix_(i, j);
      const Complex lower = matrix_(j, i);
      if (!std::isfinite(upper.real()) || !std::isfinite(upper.imag()) ||
          !std::isfinite(lower.real()) || !std::isfinite(lower.imag())) {
        throw std::invalid_argument("HermitianOperator: non-finite entry");
      }
      if (std::abs(upper - std::conj(lower)) > tol) {
        throw std::invalid_argument("HermitianOperator: entries (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") and (" + std::to_string(j) + "," +
                                    std::to_string(i) + ") are not conjugate");
      }
      const Complex h = 0.5 * (upper + std::conj(lower));
      matrix_(i, j) = h;
      matrix_(j, i) = std::conj(h);
    }
  }
}

HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b) {
  return HermitianOperator(a.matrix() + b.matrix());
}

HermitianOperator operator*(double scale, const HermitianOperator& a) {
  return HermitianOperator(a.matrix() * Complex(scale));
}

DensityOperator::DensityOperator(HermitianOperator op, double tol_psd) : op_(std::move(op)) {
  const double tr = op_.trace();
  if (std::abs(tr - 1.0) > kTolTrace) {
    throw std::invalid_argument("DensityOperator: trace " + std::to_string(tr) + " is not 1");
  }
  const double lo = min_eigenvalue(op_);
  if (lo < -tol_psd) {
    throw std::invalid_argument("DensityOperator: minimum eigenvalue " + std::to_string(lo) +
                                " is negative");
  }
}

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b) {
  return HermitianOperator(kron(a.matrix(), b.matrix()));
}

HermitianOperator partial_trace(const HermitianOperator& rho, int k) {
  const int n = rho.n_qubits();
  if (k < 1 || k > n) {
    throw std::out_of_range("partial_trace: qubit " + std::to_string(k) + " outside [1, " +
                            std::to_string(n) + "]");
  }
  if (n == 1) throw std::invalid_argument("partial_trace: cannot trace out the only qubit");
  // Bit position of qubit k counted from the least significant end.
  const int pos = n - k;
  const std::size_t low_mask = (std::size_t{1} << pos) - 1;
  const std::size_t out_dim = rho.dim() / 2;
  auto expand = [&](std::size_t idx, std::size_t bit) {
    return ((idx & ~low_mask) << 1) | (bit << pos) | (idx & low_mask);
  };
  ComplexMatrix out(out_dim);
  for (std::size_t i = 0; i < out_dim; ++i)
    for (std::size_t j = 0; j < out_dim; ++j)
      out(i, j) = rho(expand(i, 0), expand(j, 0)) + rho(expand(i, 1), expand(j, 1));
  return HermitianOperator(std::move(out));
}

int hamming(std::uint64_t a, std::uint64_t b, int n) {
  if (n < 1 || n > 63) throw std::out_of_range("hamming: qubit count out of range");
  const std::uint64_t limit = std::uint64_t{1} << n;
  if (a >= limit || b >= limit) {
    throw std::out_of_range("hamming: index outside [0, 2^" + std::to_string(n) + ")");
  }
  return std::popcount(a ^ b);
}

BlochVector bloch_from_density(const DensityOperator& sigma) {
  if (sigma.n_qubits() != 1) throw std::invalid_argument("bloch_from_density: not a single qubit");
  const Complex off = sigma(0, 1);
  return {off.real(), -off.imag(), 0.5 * (sigma(0, 0).real() - sigma(1, 1).real())};
}

DensityOperator density_from_bloch(const BlochVector& v) {
  const double r2 = v.x * v.x + v.y * v.y + v.z * v.z;
  if (!(r2 <= 0.25 + kTolPsd)) {
    throw std::invalid_argument("density_from_bloch: vector outside the radius-1/2 ball");
  }
  ComplexMatrix m(2);
  m(0, 0) = 0.5 + v.z;
  m(1, 1) = 0.5 - v.z;
  m(0, 1) = Complex(v.x, -v.y);
  m(1, 0) = Complex(v.x, v.y);
  return DensityOperator(HermitianOperator(std::move(m)));
}

}  // namespace qsep
