#pragma once

#include <cstdint>
#include <random>

#include "qsep/linalg.hpp"

namespace qsep {

/// Portable randomness: mt19937_64 has a standard-mandated output sequence,
/// and uniform doubles are taken from the top 53 bits, so a seed reproduces
/// the same states on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Uniform draw from the radius-1/2 Bloch ball by rejection sampling.
BlochVector random_bloch(Rng& rng);

/// 8x8 three-qubit state of Horodecki type, PPT across qubit 1, for 0 < b < 1.
DensityOperator horodecki_b(double b);

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

struct IsotropicParams {
  double s = 0.0;  // s <= -4 or s >= 0
  BellState bell = BellState::PhiPlus;
};

/// (|phi><phi| + s 1/4) / (1 + s)
DensityOperator isotropic(const IsotropicParams& params);

/// Projector onto sqrt(p)|00> + sqrt(1-p)|11>, 0 < p < 1.
DensityOperator pure_superposition(double p);

/// Projector onto (|0...0> + |1...1>)/sqrt(2), n >= 2.
DensityOperator ghz(int n);

struct MixtureSeed {
  int n = 2;
  int terms = 1;
  std::uint64_t rng_seed = 0;
};

/// sum_i p_i s_i^(1) (x) ... (x) s_i^(n) with weights from normalized
/// uniform(0,1) draws and every factor from random_bloch.
DensityOperator random_multiseparable(const MixtureSeed& seed);

/// Random Hermitian operator with unit trace and entries of order one. Not
/// positive in general.
HermitianOperator random_hermitian_unit_trace(int n, Rng& rng);

/// Random density operator (mixture of `rank` Haar-ish random pure states).
DensityOperator random_density(int n, int rank, Rng& rng);

/// Random density operator whose nonzero strictly-lower-triangle entries all
/// share one argument, drawn uniformly from [0, 2 pi).
DensityOperator random_equal_argument(int n, Rng& rng);

}  // namespace qsep
