#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opineq/registry.hpp"

namespace opineq {

struct CampaignConfig {
  std::uint64_t seed = 20240601;
  int trials_per_check = 200;
  std::vector<int> dims{2, 3, 4, 6, 8};
  std::vector<SchattenP> p_grid{SchattenP(1.0), SchattenP(1.5), SchattenP(2.0),
                                SchattenP(3.0), SchattenP(4.0), SchattenP::inf()};
  std::vector<std::pair<double, double>> alpha_t_grid = default_alpha_t_grid();
  double tol_rel = kDefaultTolRel;
  std::string output_path;
  /// Empty means every registered family.
  std::vector<std::string> families;
  /// Dumps kept per check id.
  int max_counterexamples = 10;

  static std::vector<std::pair<double, double>> default_alpha_t_grid();
  GridSpec grid() const;
  /// Throws BadConfig when an invariant is broken.
  void validate() const;
};

struct CheckAggregate {
  std::string check_id;
  std::string family;
  long evaluated = 0;
  long pass = 0;
  long fail = 0;
  long indeterminate = 0;
  double min_slack = 0.0;
  /// max over reports of (lhs - rhs) / max(1, |lhs|, |rhs|); negative when every report has room
  double max_rel_violation = 0.0;
};

struct Counterexample {
  std::string family;
  std::string check_id;
  int dim = 0;
  int trial = 0;
  std::uint64_t trial_seed = 0;
  TrialInputs inputs;
  /// Empty when the failure is an error raised by the family.
  std::optional<BoundReport> report;
  std::string error;
};

struct CampaignResult {
  CampaignConfig config;
  std::vector<CheckAggregate> aggregates;  // sorted by check_id
  std::vector<Counterexample> counterexamples;
  long total_reports = 0;
  long failures = 0;
  long indeterminate = 0;
  long errors = 0;
  double wall_seconds = 0.0;  // not part of the payload

  bool all_hold() const { return failures == 0 && errors == 0; }
};

enum class ExecutionPolicy { Serial, Parallel };

CampaignResult run_campaign(const CampaignConfig& config, ExecutionPolicy policy = ExecutionPolicy::Parallel,
                            const Registry& registry = default_registry());

/// Re-evaluates a dumped counterexample through the public checks and returns the
/// matching report, judged at the config tolerance.
std::optional<BoundReport> replay(const Counterexample& cx, const CampaignConfig& config,
                                  const Registry& registry = default_registry());

double relative_violation(const BoundReport& r);

}  // namespace opineq
