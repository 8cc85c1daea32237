#include "qsep/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qsep {
namespace {

DensityOperator projector(const std::vector<Complex>& psi) {
  const std::size_t d = psi.size();
  ComplexMatrix m(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = psi[i] * std::conj(psi[j]);
  return DensityOperator(HermitianOperator(std::move(m)));
}

void check_qubits(int n, const char* who) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument(std::string(who) + ": qubit count " + std::to_string(n) +
                                " outside [1, " + std::to_string(kMaxQubits) + "]");
  }
}

// Box-Muller on our own uniforms; std::normal_distribution is not portable.
double gaussian(Rng& rng) {
  const double u1 = 1.0 - rng.uniform();  // (0, 1]
  const double u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

BlochVector random_bloch(Rng& rng) {
  for (;;) {
    const BlochVector v{rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)};
    if (v.x * v.x + v.y * v.y + v.z * v.z <= 0.25) return v;
  }
}

DensityOperator horodecki_b(double b) {
  if (!(b > 0.0 && b < 1.0)) {
    throw std::invalid_argument("horodecki_b: b = " + std::to_string(b) + " outside (0, 1)");
  }
  const double norm = 1.0 / (7.0 * b + 1.0);
  const double hi = (1.0 + b) / 2.0;
  const double corner = std::sqrt(1.0 - b * b) / 2.0;
  ComplexMatrix m(8);
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = b;
  for (std::size_t i = 5; i < 7; ++i) m(i, i) = b;
  m(4, 4) = hi;
  m(7, 7) = hi;
  // b couples index i with i + 5 for i in {0, 1, 2}.
  m(0, 5) = m(5, 0) = b;
  m(1, 6) = m(6, 1) = b;
  m(2, 7) = m(7, 2) = b;
  m(4, 7) = m(7, 4) = corner;
  m *= norm;
  return DensityOperator(HermitianOperator(std::move(m)));
}

DensityOperator isotropic(const IsotropicParams& params) {
  const double s = params.s;
  if (!std::isfinite(s) || (s > -4.0 && s < 0.0)) {
    throw std::invalid_argument("isotropic: s = " + std::to_string(s) +
                                " must satisfy s <= -4 or s >= 0");
  }
  const double r = 1.0 / std::numbers::sqrt2;
  std::vector<Complex> phi(4);
  switch (params.bell) {
    case BellState::PhiPlus: phi[0] = r; phi[3] = r; break;
    case BellState::PhiMinus: phi[0] = r; phi[3] = -r; break;
    case BellState::PsiPlus: phi[1] = r; phi[2] = r; break;
    case BellState::PsiMinus: phi[1] = r; phi[2] = -r; break;
  }
  ComplexMatrix m(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = phi[i] * std::conj(phi[j]);
  for (std::size_t i = 0; i < 4; ++i) m(i, i) += s / 4.0;
  m *= 1.0 / (1.0 + s);
  return DensityOperator(HermitianOperator(std::move(m)));
}

DensityOperator pure_superposition(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("pure_superposition: p = " + std::to_string(p) + " outside (0, 1)");
  }
  return projector({std::sqrt(p), 0.0, 0.0, std::sqrt(1.0 - p)});
}

DensityOperator ghz(int n) {
  if (n < 2 || n > kMaxQubits) {
    throw std::invalid_argument("ghz: n = " + std::to_string(n) + " outside [2, " +
                                std::to_string(kMaxQubits) + "]");
  }
  std::vector<Complex> psi(std::size_t{1} << n);
  psi.front() = psi.back() = 1.0 / std::numbers::sqrt2;
  return projector(psi);
}

DensityOperator random_multiseparable(const MixtureSeed& seed) {
  check_qubits(seed.n, "random_multiseparable");
  if (seed.terms < 1) throw std::invalid_argument("random_multiseparable: terms must be >= 1");
  Rng rng(seed.rng_seed);

  std::vector<double> weights(static_cast<std::size_t>(seed.terms));
  double total = 0.0;
  for (auto& w : weights) {
    w = rng.uniform();
    total += w;
  }
  if (total == 0.0) {
    for (auto& w : weights) w = 1.0;
    total = static_cast<double>(weights.size());
  }

  const std::size_t d = std::size_t{1} << seed.n;
  ComplexMatrix mix(d);
  for (double w : weights) {
    ComplexMatrix term = density_from_bloch(random_bloch(rng)).matrix();
    for (int q = 1; q < seed.n; ++q) term = kron(term, density_from_bloch(random_bloch(rng)).matrix());
    mix += (w / total) * term;
  }
  return DensityOperator(HermitianOperator(std::move(mix)));
}

HermitianOperator random_hermitian_unit_trace(int n, Rng& rng) {
  check_qubits(n, "random_hermitian_unit_trace");
  const std::size_t d = std::size_t{1} << n;
  ComplexMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) {
    m(i, i) = rng.uniform(-1.0, 1.0);
    for (std::size_t j = 0; j < i; ++j) {
      m(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      m(j, i) = std::conj(m(i, j));
    }
  }
  const double shift = (1.0 - m.trace().real()) / static_cast<double>(d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) += shift;
  return HermitianOperator(std::move(m));
}

DensityOperator random_density(int n, int rank, Rng& rng) {
  check_qubits(n, "random_density");
  if (rank < 1) throw std::invalid_argument("random_density: rank must be >= 1");
  const std::size_t d = std::size_t{1} << n;
  ComplexMatrix m(d);
  for (int r = 0; r < rank; ++r) {
    std::vector<Complex> psi(d);
    double norm2 = 0.0;
    for (auto& a : psi) {
      a = Complex(gaussian(rng), gaussian(rng));
      norm2 += std::norm(a);
    }
    const double w = rng.uniform() / norm2;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) += w * psi[i] * std::conj(psi[j]);
  }
  m *= 1.0 / m.trace().real();
  return DensityOperator(HermitianOperator(std::move(m)));
}

DensityOperator random_equal_argument(int n, Rng& rng) {
  check_qubits(n, "random_equal_argument");
  const std::size_t d = std::size_t{1} << n;
  const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
  ComplexMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) {
    m(i, i) = rng.uniform();
    for (std::size_t j = 0; j < i; ++j) {
      // About a third of the couplings stay exactly zero.
      if (rng.uniform() < 1.0 / 3.0) continue;
      m(i, j) = rng.uniform() * phase;
      m(j, i) = std::conj(m(i, j));
    }
  }
  // Raising the diagonal leaves every argument alone and makes the matrix PSD.
  const double lo = min_eigenvalue(HermitianOperator(m));
  if (lo < 0.0) {
    for (std::size_t i = 0; i < d; ++i) m(i, i) -= lo;
  }
  m *= 1.0 / m.trace().real();
  return DensityOperator(HermitianOperator(std::move(m)));
}

}  // namespace qsep
