#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "seaweed/spec.hpp"

namespace seaweed {

struct SweepOptions {
  AlgebraType algebra = AlgebraType::A;
  int n_min = 1;
  int n_max = 4;
  bool oracle = true;
  int trials = 5;
  std::uint64_t seed = 0;
  unsigned workers = 0;  // 0: hardware concurrency
};

struct SweepMismatch {
  std::string spec;
  std::string check;  // "oracle", "closed_form", "classifier", "delta"
  int combinatorial = 0;
  std::optional<int> closed_form;
  std::optional<int> oracle;
  std::string detail;
};

/// Result of checking a single spec.
struct SpecCheck {
  int combinatorial = 0;
  std::optional<int> closed_form;
  std::string closed_form_rule;
  std::optional<int> oracle;
  bool frobenius = false;
  std::string justification;
  std::vector<SweepMismatch> mismatches;
};

/// Compares the meander index with the closed form (when one applies), the
/// oracle (when `oracle`), the classifier verdict and rule, and for type-D
/// xi certificates the delta read off the associated type-A meander.
SpecCheck check_spec(const SeaweedSpec& spec, bool oracle, int trials, std::uint64_t seed);

struct SweepReport {
  AlgebraType algebra = AlgebraType::A;
  int n_min = 1;
  int n_max = 1;
  long specs_checked = 0;
  long closed_form_checked = 0;
  long rule_checked = 0;
  long oracle_checked = 0;
  std::vector<SweepMismatch> mismatches;  // sorted by (spec, check)
  std::map<int, long> spec_counts;        // per n
  std::map<int, long> frobenius_counts;   // per n
  double elapsed_seconds = 0;
};

class BudgetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// SEAWEED_MAX_N, or 10 when unset or unparsable.
int sweep_budget();

/// Throws BudgetError when n_max exceeds sweep_budget().
SweepReport run_sweep(const SweepOptions& options);

/// The "seaweed.sweep/1" document. Elapsed time is included only when `with_timing`.
nlohmann::ordered_json sweep_json(const SweepReport& report, bool with_timing = true);

}  // namespace seaweed
