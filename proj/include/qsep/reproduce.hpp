#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qsep {

/// One line of the reproduction report: a computed quantity next to its
/// closed-form (or structural) expectation.
struct CheckRow {
  std::string id;
  std::string computed;
  std::string expected;
  bool pass = false;
};

struct ReproduceOptions {
  // Test hook: shifts every computed closed-form value by this amount.
  double perturbation = 0.0;
  std::uint64_t seed = 20080501;
  int soundness_states = 1000;
  int decomposition_states = 1000;
  int equivalence_states = 200;
  int lemma1_states = 500;
  int bloch_states = 1000;
};

std::vector<CheckRow> run_reproduction(const ReproduceOptions& options = {});

/// Fixed-width PASS/FAIL table.
std::string render_table(const std::vector<CheckRow>& rows);

}  // namespace qsep
