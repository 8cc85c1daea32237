// qsep: command-line front end for the inseparability checks.
//
// Exit codes: 0 success / inseparability detected, 1 inconclusive (or a
// failed reproduction check), 2 error.

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsep/criteria.hpp"
#include "qsep/io.hpp"
#include "qsep/maps.hpp"
#include "qsep/reproduce.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconclusive = 1;
constexpr int kExitError = 2;

void emit(const qsep::OperatorFile& file, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << qsep::to_json_text(file);
  } else {
    qsep::save_operator(file, out_path);
  }
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, std::string> params;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("parameter '" + item + "' is not key=value");
    }
    params[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return params;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Detect n-qubit n-partite inseparability of density operators"};
  app.require_subcommand(1);

  double tol_psd = qsep::kTolPsd;
  app.add_option("--tol", tol_psd, "Negativity tolerance for map tests (exploration only)")
      ->check(CLI::PositiveNumber);

  std::string out_path;

  auto* gen = app.add_subcommand("gen", "Generate a fixture state");
  std::string family;
  std::vector<std::string> gen_params;
  gen->add_option("family", family, "horodecki-b | isotropic | pure-p | ghz | random-msep")->required();
  gen->add_option("params", gen_params, "key=value parameters");
  gen->add_option("--out", out_path, "Output file (default: stdout)");

  auto* apply = app.add_subcommand("apply", "Apply a product map and report trace and min eigenvalue");
  std::string in_path;
  std::string spec_text;
  apply->add_option("input", in_path, "Operator file")->required();
  auto* apply_spec_pos = apply->add_option("SPEC", spec_text, "Map spec, e.g. 1:P,2:T or all:P");
  apply->add_option("--spec", spec_text, "Map spec")->excludes(apply_spec_pos);
  apply->add_option("--out", out_path, "Output file (default: stdout)");

  auto* detect = app.add_subcommand("detect", "Run one inseparability criterion");
  std::string method;
  detect->add_option("input", in_path, "Operator file")->required();
  detect->add_option("method", method, "lz | hamming | map")
      ->required()
      ->check(CLI::IsMember({"lz", "hamming", "map"}));
  detect->add_option("--spec", spec_text, "Map spec (required for method map)");

  auto* eigs = app.add_subcommand("eigs", "Print eigenvalues in ascending order");
  eigs->add_option("input", in_path, "Operator file")->required();

  auto* reproduce = app.add_subcommand("reproduce", "Recompute every closed-form result and print a table");
  double perturbation = 0.0;
  reproduce->add_option("--perturb", perturbation, "Shift computed values (harness self-test)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (gen->parsed()) {
      emit(qsep::generate_family(family, parse_params(gen_params)), out_path);
      return kExitOk;
    }

    if (apply->parsed()) {
      if (spec_text.empty()) throw std::invalid_argument("apply needs a map spec");
      const auto input = qsep::load_operator(in_path);
      const auto spec = qsep::parse_map_spec(spec_text, input.op.n_qubits());
      qsep::OperatorFile mapped{qsep::apply_product(input.op, spec), input.meta};
      mapped.meta["applied"] = qsep::to_string(spec);
      const double lo = qsep::min_eigenvalue(mapped.op);
      if (!out_path.empty()) emit(mapped, out_path);
      std::cout << "trace: " << qsep::format_number(mapped.op.trace()) << '\n';
      std::cout << "min_eigenvalue: " << qsep::format_number(lo) << '\n';
      return kExitOk;
    }

    if (detect->parsed()) {
      const auto input = qsep::load_operator(in_path);
      const qsep::DensityOperator rho(input.op);
      qsep::DetectionReport report;
      if (method == "map") {
        if (spec_text.empty()) throw std::invalid_argument("method map requires --spec");
        report = qsep::map_negativity_check(rho, qsep::parse_map_spec(spec_text, rho.n_qubits()), tol_psd);
      } else {
        if (!spec_text.empty()) throw std::invalid_argument("--spec is only valid with method map");
        report = method == "lz" ? qsep::lz_antidiagonal_check(rho) : qsep::hamming_offdiagonal_check(rho);
      }
      std::cout << qsep::render_report(report);
      return report.verdict == qsep::Verdict::Inseparable ? kExitOk : kExitInconclusive;
    }

    if (eigs->parsed()) {
      const auto input = qsep::load_operator(in_path);
      for (double v : qsep::hermitian_eigenvalues(input.op)) std::cout << qsep::format_number(v) << '\n';
      return kExitOk;
    }

    if (reproduce->parsed()) {
      qsep::ReproduceOptions options;
      options.perturbation = perturbation;
      const auto rows = qsep::run_reproduction(options);
      std::cout << qsep::render_table(rows);
      const bool all_pass = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass; });
      return all_pass ? kExitOk : kExitInconclusive;
    }
  } catch (const std::exception& e) {
    std::cerr << "qsep: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
