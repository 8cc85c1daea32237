#include "qsep/maps.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsep {

std::string_view to_string(MapKind kind) {
  switch (kind) {
    case MapKind::P: return "P";
    case MapKind::T: return "T";
    case MapKind::H: return "H";
    case MapKind::X: return "X";
    case MapKind::Identity: return "Identity";
  }
  return "?";
}

MapSpec MapSpec::all(int n_qubits, MapKind kind) {
  MapSpec spec;
  for (int q = 1; q <= n_qubits; ++q) spec.assignments.emplace_back(q, kind);
  return spec;
}

void MapSpec::validate(int n_qubits) const {
  std::vector<bool> seen(static_cast<std::size_t>(std::max(n_qubits, 0)) + 1, false);
  for (const auto& [q, kind] : assignments) {
    if (q < 1 || q > n_qubits) {
      throw std::invalid_argument("map spec: qubit " + std::to_string(q) + " outside [1, " +
                                  std::to_string(n_qubits) + "]");
    }
    if (seen[q]) throw std::invalid_argument("map spec: qubit " + std::to_string(q) + " listed twice");
    seen[q] = true;
  }
}

std::string to_string(const MapSpec& spec) {
  std::string out;
  for (const auto& [q, kind] : spec.assignments) {
    if (!out.empty()) out += ',';
    out += std::to_string(q);
    out += ':';
    out += to_string(kind);
  }
  return out;
}

Block2 apply_map(MapKind kind, const Block2& m) {
  switch (kind) {
    case MapKind::P: {
      const Complex mean = 0.5 * (m[0] + m[3]);
      return {mean, m[1], m[2], mean};
    }
    case MapKind::T: return {m[0], m[2], m[1], m[3]};
    case MapKind::H: return {m[3], -m[1], -m[2], m[0]};
    case MapKind::X: return {m[3], m[2], m[1], m[0]};
    case MapKind::Identity: return m;
  }
  throw std::logic_error("apply_map: unknown kind");
}

HermitianOperator apply_single_qubit(MapKind kind, const HermitianOperator& sigma) {
  if (sigma.n_qubits() != 1) {
    throw std::invalid_argument("single-qubit map applied to a " +
                                std::to_string(sigma.n_qubits()) + "-qubit operator");
  }
  const Block2 out = apply_map(kind, {sigma(0, 0), sigma(0, 1), sigma(1, 0), sigma(1, 1)});
  return HermitianOperator(ComplexMatrix(2, {out.begin(), out.end()}));
}

HermitianOperator lambda_p(const HermitianOperator& sigma) { return apply_single_qubit(MapKind::P, sigma); }
HermitianOperator lambda_t(const HermitianOperator& sigma) { return apply_single_qubit(MapKind::T, sigma); }
HermitianOperator lambda_h(const HermitianOperator& sigma) { return apply_single_qubit(MapKind::H, sigma); }
HermitianOperator lambda_x(const HermitianOperator& sigma) { return apply_single_qubit(MapKind::X, sigma); }

namespace {

void check_qubit(const HermitianOperator& rho, int k) {
  if (k < 1 || k > rho.n_qubits()) {
    throw std::out_of_range("qubit " + std::to_string(k) + " outside [1, " +
                            std::to_string(rho.n_qubits()) + "]");
  }
}

}  // namespace

HermitianOperator apply_on_qubit(const HermitianOperator& rho, int k, MapKind kind) {
  check_qubit(rho, k);
  if (kind == MapKind::Identity) return rho;

  const std::size_t d = rho.dim();
  const std::size_t bit = std::size_t{1} << (rho.n_qubits() - k);
  const ComplexMatrix& in = rho.matrix();
  ComplexMatrix out(d);
  // Visit each (row, col) pair whose k-bits are both zero; the four entries
  // reached by toggling those bits form the 2x2 block the map acts on.
  for (std::size_t i = 0; i < d; ++i) {
    if (i & bit) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (j & bit) continue;
      const Block2 r = apply_map(kind, {in(i, j), in(i, j | bit), in(i | bit, j), in(i | bit, j | bit)});
      out(i, j) = r[0];
      out(i, j | bit) = r[1];
      out(i | bit, j) = r[2];
      out(i | bit, j | bit) = r[3];
    }
  }
  return HermitianOperator(std::move(out));
}

HermitianOperator apply_on_qubit_dense(const HermitianOperator& rho, int k, MapKind kind) {
  check_qubit(rho, k);
  const int n = rho.n_qubits();
  const std::size_t left = std::size_t{1} << (k - 1);
  const std::size_t right = std::size_t{1} << (n - k);
  const std::size_t d = rho.dim();

  // inject[x] = I_left (x) |x> (x) I_right as a d x d/2 matrix, stored padded
  // to d x d so the square matmul helper can be reused.
  auto injection = [&](std::size_t x) {
    ComplexMatrix ket(2);
    ket(x, 0) = 1.0;
    return kron(kron(ComplexMatrix::identity(left), ket), ComplexMatrix::identity(right));
  };
  const std::array<ComplexMatrix, 2> inject{injection(0), injection(1)};

  ComplexMatrix out(d);
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) {
      // Block of rho between qubit-k states x and y, embedded back on the |0><0| slot.
      const ComplexMatrix block = matmul(matmul(inject[x].adjoint(), rho.matrix()), inject[y]);
      Block2 unit{};
      unit[2 * x + y] = 1.0;
      const Block2 image = apply_map(kind, unit);
      for (std::size_t u = 0; u < 2; ++u)
        for (std::size_t v = 0; v < 2; ++v) {
          const Complex w = image[2 * u + v];
          if (w == Complex{}) continue;
          out += w * matmul(matmul(inject[u], block), inject[v].adjoint());
        }
    }
  }
  return HermitianOperator(std::move(out));
}

HermitianOperator apply_product(const HermitianOperator& rho, const MapSpec& spec) {
  spec.validate(rho.n_qubits());
  auto ordered = spec.assignments;
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  HermitianOperator result = rho;
  for (const auto& [q, kind] : ordered) result = apply_on_qubit(result, q, kind);
  return result;
}

}  // namespace qsep
