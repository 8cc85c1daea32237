#include "qsep/reproduce.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qsep/criteria.hpp"
#include "qsep/io.hpp"
#include "qsep/maps.hpp"
#include "qsep/states.hpp"

namespace qsep {
namespace {

constexpr double kTolSpectrum = 1e-10;
constexpr double kTolIdentity = 1e-12;

std::string fmt(double v) { return format_number(v); }

std::string fmt_list(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v[i]);
    out += buf;
  }
  return out + "]";
}

double max_sorted_diff(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

std::vector<double> shifted(std::vector<double> v, double by) {
  for (auto& x : v) x += by;
  return v;
}

std::string bell_name(BellState s) {
  switch (s) {
    case BellState::PhiPlus: return "phi+";
    case BellState::PhiMinus: return "phi-";
    case BellState::PsiPlus: return "psi+";
    case BellState::PsiMinus: return "psi-";
  }
  return "?";
}

std::string label(const char* prefix, double v) {
  std::ostringstream out;
  out << prefix << v;
  return out.str();
}

void horodecki_rows(const ReproduceOptions& opt, std::vector<CheckRow>& rows) {
  const double threshold = (std::sqrt(57.0) - 7.0) / 4.0;
  for (double b : {0.10, 0.13, 0.137, 0.14, 0.2}) {
    const auto report = hamming_offdiagonal_check(horodecki_b(b));
    const bool expect = b < threshold;
    const bool got = report.verdict == Verdict::Inseparable;
    bool witness_ok = !got;
    std::string computed = std::string(to_string(report.verdict));
    if (got) {
      const auto& w = std::get<OffDiagonalWitness>(*report.witness);
      witness_ok = w.a == 7 && w.b == 4 && w.bound == 0.25;
      computed += " (" + std::to_string(w.a) + "," + std::to_string(w.b) + ") |c|=" +
                  fmt(std::abs(w.value) + opt.perturbation);
    }
    rows.push_back({label("horodecki.threshold b=", b), computed,
                    std::string(expect ? "Inseparable (7,4) bound 1/4" : "Inconclusive") +
                        " [b vs (sqrt57-7)/4]",
                    got == expect && witness_ok});
  }

  // Exact crossing of |<7|rho_b|4>| with 1/4.
  const double root = (4.0 * std::sqrt(13.0) - 7.0) / 53.0;
  const double at_root = std::abs(horodecki_b(root)(7, 4)) + opt.perturbation;
  rows.push_back({"horodecki.element-at-root b=(4sqrt13-7)/53", fmt(at_root), "0.25",
                  std::abs(at_root - 0.25) <= kTolIdentity});

  for (double b : {0.1, 0.5, 0.9}) {
    const double lo = min_eigenvalue(apply_on_qubit(horodecki_b(b).op(), 1, MapKind::T)) + opt.perturbation;
    rows.push_back({label("horodecki.ppt-qubit1 b=", b), fmt(lo), ">= -1e-9", lo >= -1e-9});
  }
}

void isotropic_rows(const ReproduceOptions& opt, std::vector<CheckRow>& rows) {
  for (double s : {0.0, 0.5, 1.0, 1.5, 2.0, 5.0}) {
    for (auto bell : {BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus, BellState::PsiMinus}) {
      const auto rho = isotropic({s, bell});
      const double den = 4.0 * s + 4.0;
      const std::string tag = label("s=", s) + " " + bell_name(bell);

      const auto p_eigs = shifted(hermitian_eigenvalues(apply_on_qubit(rho.op(), 2, MapKind::P)), opt.perturbation);
      const std::vector<double> p_expect{(s - 1.0) / den, (s + 3.0) / den, 0.25, 0.25};
      const bool p_verdict = (map_negativity_check(rho, MapSpec::single(2, MapKind::P)).verdict ==
                              Verdict::Inseparable) == (s < 1.0);
      rows.push_back({"isotropic.IxP " + tag, fmt_list(p_eigs), fmt_list(p_expect),
                      max_sorted_diff(p_eigs, p_expect) <= kTolSpectrum && p_verdict});

      const auto t_eigs = shifted(hermitian_eigenvalues(apply_on_qubit(rho.op(), 2, MapKind::T)), opt.perturbation);
      const double hi = (s + 2.0) / den;
      const std::vector<double> t_expect{(s - 2.0) / den, hi, hi, hi};
      const bool t_verdict = (map_negativity_check(rho, MapSpec::single(2, MapKind::T)).verdict ==
                              Verdict::Inseparable) == (s < 2.0);
      rows.push_back({"isotropic.IxT " + tag, fmt_list(t_eigs), fmt_list(t_expect),
                      max_sorted_diff(t_eigs, t_expect) <= kTolSpectrum && t_verdict});
    }
  }
}

void pure_rows(const ReproduceOptions& opt, std::vector<CheckRow>& rows) {
  const double lo_edge = 0.5 - std::sqrt(3.0) / 4.0;
  const double hi_edge = 0.5 + std::sqrt(3.0) / 4.0;
  for (double p : {0.05, 0.067, 0.1, 0.5, 0.9, 0.933, 0.95}) {
    const auto rho = pure_superposition(p);

    const auto one = shifted(hermitian_eigenvalues(apply_on_qubit(rho.op(), 2, MapKind::P)), opt.perturbation);
    const double r1 = std::sqrt(-12.0 * p * p + 12.0 * p + 1.0) / 4.0;
    const std::vector<double> one_expect{p / 2.0, (1.0 - p) / 2.0, 0.25 - r1, 0.25 + r1};
    rows.push_back({label("pure.IxP p=", p), fmt_list(one), fmt_list(one_expect),
                    max_sorted_diff(one, one_expect) <= kTolSpectrum});

    const auto both = shifted(hermitian_eigenvalues(apply_product(rho.op(), MapSpec::all(2, MapKind::P))),
                              opt.perturbation);
    const double r2 = std::sqrt(p - p * p);
    const std::vector<double> both_expect{0.25, 0.25, 0.25 - r2, 0.25 + r2};
    const bool negative = map_negativity_check(rho, MapSpec::all(2, MapKind::P)).verdict == Verdict::Inseparable;
    const bool inside = p > lo_edge && p < hi_edge;
    rows.push_back({label("pure.PxP p=", p), fmt_list(both),
                    fmt_list(both_expect) + (inside ? " negative" : " nonnegative"),
                    max_sorted_diff(both, both_expect) <= kTolSpectrum && negative == inside});
  }
}

void soundness_rows(const ReproduceOptions& opt, std::vector<CheckRow>& rows) {
  for (int n : {2, 3, 4}) {
    std::vector<MapSpec> specs;
    for (int q = 1; q <= n; ++q) {
      specs.push_back(MapSpec::single(q, MapKind::P));
      specs.push_back(MapSpec::single(q, MapKind::T));
    }
    specs.push_back(MapSpec::all(n, MapKind::P));

    Rng seeds(opt.seed + static_cast<std::uint64_t>(n));
    int failures = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < opt.soundness_states; ++i) {
      const int terms = 1 + static_cast<int>(seeds.next_u64() % 8);
      const auto rho = random_multiseparable({n, terms, seeds.next_u64()});
      bool ok = lz_antidiagonal_check(rho).verdict == Verdict::Inconclusive &&
                hamming_offdiagonal_check(rho).verdict == Verdict::Inconclusive;
      for (const auto& spec : specs) {
        const auto report = map_negativity_check(rho, spec);
        worst = std::min(worst, report.statistic);
        ok = ok && report.verdict == Verdict::Inconclusive && report.statistic >= -1e-9;
      }
      if (!ok) ++failures;
    }
    rows.push_back({"soundness n=" + std::to_string(n),
                    std::to_string(failures) + " flagged of " + std::to_string(opt.soundness_states) +
                        ", worst min eig " + fmt(worst + opt.perturbation),
                    "0 flagged, min eig >= -1e-9", failures == 0 && worst + opt.perturbation >= -1e-9});
  }
}

void identity_rows(const ReproduceOptions& opt, std::vector<CheckRow>& rows) {
  Rng rng(opt.seed ^ 0x5eedULL);

  double decomposition = 0.0;
  for (int i = 0; i < opt.decomposition_states; ++i) {
    const auto rho = random_hermitian_unit_trace(2, rng);
    const auto lhs = apply_on_qubit(rho, 2, MapKind::P);
    const auto flipped = apply_on_qubit(apply_on_qubit(rho, 2, MapKind::T), 2, MapKind::X);
    const auto rhs = 0.5 * (rho + flipped);
    decomposition = std::max(decomposition, max_abs_diff(lhs.matrix(), rhs.matrix()));
  }
  decomposition += opt.perturbation;
  rows.push_back({"decomposition IxP = (rho + (IxX)(IxT)rho)/2", "max dev " + fmt(decomposition),
                  "<= 1e-12", decomposition <= kTolIdentity});

  double equivalence = 0.0;
  for (int n : {2, 3, 4}) {
    for (int i = 0; i < opt.equivalence_states; ++i) {
      const auto rho = random_hermitian_unit_trace(n, rng);
      for (int k = 1; k <= n; ++k)
        for (auto kind : {MapKind::P, MapKind::T, MapKind::H, MapKind::X, MapKind::Identity})
          equivalence = std::max(equivalence, max_abs_diff(apply_on_qubit(rho, k, kind).matrix(),
                                                           apply_on_qubit_dense(rho, k, kind).matrix()));
    }
  }
  equivalence += opt.perturbation;
  rows.push_back({"element-wise map = dense construction", "max dev " + fmt(equivalence), "<= 1e-12",
                  equivalence <= kTolIdentity});

  int lemma1_failures = 0;
  for (int i = 0; i < opt.lemma1_states; ++i) {
    const auto rho = random_equal_argument(3, rng);
    for (std::size_t a = 1; a < 8; ++a)
      for (std::size_t b = 0; b < a; ++b)
        if (!lemma1_bound_check(rho, a, b)) ++lemma1_failures;
  }
  rows.push_back({"element-bound n=3", std::to_string(lemma1_failures) + " violations", "0",
                  lemma1_failures == 0});

  double lemma2_dev = 0.0;
  int sign_mismatch = 0, negatives = 0, checked = 0;
  for (int i = 0; i < opt.lemma1_states; ++i) {
    const int n = 2 + i % 2;
    const DensityOperator rho = (i % 3 == 0) ? random_equal_argument(n, rng) : random_density(n, 1 + i % 2, rng);
    const auto sigma = apply_product(rho.op(), MapSpec::all(n, MapKind::P));
    const double diag = std::ldexp(1.0, -n);
    for (std::size_t a = 1; a < sigma.dim(); ++a)
      for (std::size_t b = 0; b < a; ++b) {
        const double mag = std::abs(sigma(a, b));
        if (mag == 0.0) continue;
        const double value = lemma2_witness_value(sigma, a, b);
        lemma2_dev = std::max(lemma2_dev, std::abs(value - 2.0 * (diag - mag)));
        if ((value < 0.0) != (mag > diag)) ++sign_mismatch;
        if (value < 0.0) ++negatives;
        ++checked;
      }
  }
  lemma2_dev += opt.perturbation;
  rows.push_back({"two-element witness = 2(1/2^n - |s_ab|)",
                  "max dev " + fmt(lemma2_dev) + ", sign mismatches " + std::to_string(sign_mismatch) +
                      " (" + std::to_string(negatives) + " negative of " + std::to_string(checked) + ")",
                  "<= 1e-12, 0 mismatches", lemma2_dev <= kTolIdentity && sign_mismatch == 0});

  double bloch = 0.0;
  for (int i = 0; i < opt.bloch_states; ++i) {
    const BlochVector v = random_bloch(rng);
    const auto sigma = density_from_bloch(v);
    const BlochVector w = bloch_from_density(DensityOperator(lambda_p(sigma.op())));
    bloch = std::max({bloch, std::abs(w.x - v.x), std::abs(w.y - v.y), std::abs(w.z)});
  }
  bloch += opt.perturbation;
  rows.push_back({"bloch projection (x,y,z) -> (x,y,0)", "max dev " + fmt(bloch), "<= 1e-12",
                  bloch <= kTolIdentity});
}

}  // namespace

std::vector<CheckRow> run_reproduction(const ReproduceOptions& options) {
  std::vector<CheckRow> rows;
  horodecki_rows(options, rows);
  isotropic_rows(options, rows);
  pure_rows(options, rows);
  soundness_rows(options, rows);
  identity_rows(options, rows);
  return rows;
}

std::string render_table(const std::vector<CheckRow>& rows) {
  std::size_t id_w = 2, comp_w = 8;
  for (const auto& r : rows) {
    id_w = std::max(id_w, r.id.size());
    comp_w = std::max(comp_w, r.computed.size());
  }
  std::ostringstream out;
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - std::min(w, s.size()), ' '); };
  out << "RESULT  " << pad("ID", id_w) << "  " << pad("COMPUTED", comp_w) << "  EXPECTED\n";
  std::size_t failed = 0;
  for (const auto& r : rows) {
    out << (r.pass ? "PASS    " : "FAIL    ") << pad(r.id, id_w) << "  " << pad(r.computed, comp_w) << "  "
        << r.expected << '\n';
    if (!r.pass) ++failed;
  }
  out << rows.size() - failed << "/" << rows.size() << " checks passed\n";
  return out.str();
}

}  // namespace qsep
