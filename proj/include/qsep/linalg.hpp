#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qsep {

using Complex = std::complex<double>;

// Numerical tolerances shared by every module. Quantities handled here are
// O(1), so these leave plenty of headroom in double precision.
inline constexpr double kTolHerm = 1e-12;
inline constexpr double kTolTrace = 1e-10;
inline constexpr double kTolPsd = 1e-9;
inline constexpr double kTolEig = 1e-10;

inline constexpr int kMaxQubits = 12;
inline constexpr int kMaxJacobiSweeps = 100;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }

  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> data() noexcept { return data_; }

  Complex trace() const;
  ComplexMatrix adjoint() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs += rhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs -= rhs;
  }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) { return rhs *= scale; }

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entry-wise absolute difference. Dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Returns n when dim == 2^n, nullopt otherwise.
std::optional<int> qubit_count_for_dim(std::size_t dim);

/// Hermitian 2^n x 2^n operator on n qubits. Qubit 1 is the most
/// significant bit of a basis index.
///
/// Construction checks Hermiticity within kTolHerm and then stores the exact
/// Hermitian part, so later arithmetic never sees a skew residue.
class HermitianOperator {
 public:
  explicit HermitianOperator(ComplexMatrix matrix, double tol = kTolHerm);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }
  Complex operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }
  double trace() const { return matrix_.trace().real(); }

 private:
  ComplexMatrix matrix_;
  int n_qubits_ = 0;
};

HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b);
HermitianOperator operator*(double scale, const HermitianOperator& a);

/// Positive-semidefinite, unit-trace Hermitian operator.
class DensityOperator {
 public:
  explicit DensityOperator(HermitianOperator op, double tol_psd = kTolPsd);

  const HermitianOperator& op() const noexcept { return op_; }
  const ComplexMatrix& matrix() const noexcept { return op_.matrix(); }
  int n_qubits() const noexcept { return op_.n_qubits(); }
  std::size_t dim() const noexcept { return op_.dim(); }
  Complex operator()(std::size_t i, std::size_t j) const { return op_(i, j); }

  operator const HermitianOperator&() const noexcept { return op_; }

 private:
  HermitianOperator op_;
};

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b);

/// Traces out qubit k (1-based, qubit 1 most significant).
HermitianOperator partial_trace(const HermitianOperator& rho, int k);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column j pairs with values[j]; empty if not requested
};

/// Cyclic complex Jacobi. Throws std::runtime_error when the sweep cap is hit.
EigenDecomposition hermitian_eigen(const HermitianOperator& op, bool want_vectors = true);
std::vector<double> hermitian_eigenvalues(const HermitianOperator& op);
double min_eigenvalue(const HermitianOperator& op);

/// Number of differing bits between a and b in their n-bit expansions.
int hamming(std::uint64_t a, std::uint64_t b, int n);

/// Single-qubit coordinates for rho = I/2 + x X + y Y + z Z; the ball has radius 1/2.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

BlochVector bloch_from_density(const DensityOperator& sigma);
DensityOperator density_from_bloch(const BlochVector& v);

}  // namespace qsep
