// Independent reference computations used only by the tests. None of these
// call the code path they are compared against.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "qsep/linalg.hpp"
#include "qsep/maps.hpp"

namespace qsep::oracle {

/// Eigenvalues from the characteristic polynomial: Faddeev-LeVerrier for the
/// coefficients, Durand-Kerner for the roots. Only sensible for dim <= 4.
inline std::vector<double> charpoly_eigenvalues(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  if (n > 4) throw std::invalid_argument("charpoly oracle limited to dim <= 4");
  // p(x) = x^n + c[n-1] x^{n-1} + ... + c[0]
  std::vector<Complex> c(n + 1);
  c[n] = 1.0;
  ComplexMatrix m(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    ComplexMatrix next = matmul(a, m);
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = next;
    c[n - k] = -matmul(a, m).trace() / static_cast<double>(k);
  }
  auto eval = [&](Complex x) {
    Complex v = c[n];
    for (std::size_t i = n; i-- > 0;) v = v * x + c[i];
    return v;
  };
  std::vector<Complex> roots(n);
  const Complex seed(0.4, 0.9);
  for (std::size_t i = 0; i < n; ++i) roots[i] = std::pow(seed, static_cast<double>(i));
  for (int iter = 0; iter < 2000; ++iter) {
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex denom = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) denom *= roots[i] - roots[j];
      if (std::abs(denom) == 0.0) denom = 1e-14;
      const Complex step = eval(roots[i]) / denom;
      roots[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15) break;
  }
  // Newton polish on the real axis.
  std::vector<double> out;
  for (auto r : roots) {
    double x = r.real();
    for (int it = 0; it < 5; ++it) {
      Complex v = c[n], dv = 0.0;
      for (std::size_t i = n; i-- > 0;) {
        dv = dv * x + v;
        v = v * x + c[i];
      }
      if (std::abs(dv) < 1e-14) break;
      x -= (v / dv).real();
    }
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Image of |x><y| under each single-qubit map, written out directly.
inline ComplexMatrix basis_image(MapKind kind, std::size_t x, std::size_t y) {
  ComplexMatrix out(2);
  switch (kind) {
    case MapKind::P:
      if (x == y) {
        out(0, 0) = 0.5;
        out(1, 1) = 0.5;
      } else {
        out(x, y) = 1.0;
      }
      break;
    case MapKind::T: out(y, x) = 1.0; break;
    case MapKind::H:
      if (x == y) {
        out(1 - x, 1 - x) = 1.0;
      } else {
        out(x, y) = -1.0;
      }
      break;
    case MapKind::X: out(1 - x, 1 - y) = 1.0; break;
    case MapKind::Identity: out(x, y) = 1.0; break;
  }
  return out;
}

/// (I (x) map_k (x) I)(rho) = sum_{x,y} (I (x) map(|x><y|) (x) I) restricted
/// through explicit basis-vector projections. O(d^4); fine for n <= 4.
inline ComplexMatrix dense_apply(const ComplexMatrix& rho, int n, int k, MapKind kind) {
  const std::size_t d = rho.dim();
  const std::size_t shift = static_cast<std::size_t>(n - k);
  ComplexMatrix out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t x = (i >> shift) & 1U;
      const std::size_t y = (j >> shift) & 1U;
      const ComplexMatrix img = basis_image(kind, x, y);
      const std::size_t i_rest = i & ~(std::size_t{1} << shift);
      const std::size_t j_rest = j & ~(std::size_t{1} << shift);
      for (std::size_t u = 0; u < 2; ++u)
        for (std::size_t v = 0; v < 2; ++v) {
          const Complex w = img(u, v);
          if (w == Complex{}) continue;
          out(i_rest | (u << shift), j_rest | (v << shift)) += w * rho(i, j);
        }
    }
  return out;
}

/// (I (x) P_k)(rho) assembled from Tr_k(rho) plus the untouched k-coherences.
inline ComplexMatrix p_from_partial_trace(const HermitianOperator& rho, int k) {
  const int n = rho.n_qubits();
  const HermitianOperator reduced = partial_trace(rho, k);
  const std::size_t pos = static_cast<std::size_t>(n - k);
  const std::size_t low = (std::size_t{1} << pos) - 1;
  auto insert = [&](std::size_t idx, std::size_t bit) {
    return ((idx & ~low) << 1) | (bit << pos) | (idx & low);
  };
  ComplexMatrix out(rho.dim());
  for (std::size_t r = 0; r < reduced.dim(); ++r)
    for (std::size_t s = 0; s < reduced.dim(); ++s) {
      const Complex half = 0.5 * reduced(r, s);
      out(insert(r, 0), insert(s, 0)) = half;
      out(insert(r, 1), insert(s, 1)) = half;
      out(insert(r, 0), insert(s, 1)) = rho(insert(r, 0), insert(s, 1));
      out(insert(r, 1), insert(s, 0)) = rho(insert(r, 1), insert(s, 0));
    }
  return out;
}

/// Bit count by repeated halving, independent of std::popcount.
inline int naive_hamming(std::size_t a, std::size_t b, int n) {
  int h = 0;
  for (int i = 0; i < n; ++i) {
    if ((a % 2) != (b % 2)) ++h;
    a /= 2;
    b /= 2;
  }
  return h;
}

}  // namespace qsep::oracle
