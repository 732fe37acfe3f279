#include "opineq/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>

namespace opineq {

std::vector<std::pair<double, double>> CampaignConfig::default_alpha_t_grid() {
  std::vector<std::pair<double, double>> g;
  for (double a : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) g.emplace_back(a, t);
  }
  return g;
}

GridSpec CampaignConfig::grid() const { return GridSpec{p_grid, alpha_t_grid}; }

void CampaignConfig::validate() const {
  if (trials_per_check < 1) raise(ErrorKind::BadConfig, "trials_per_check must be at least 1");
  if (dims.empty()) raise(ErrorKind::BadConfig, "dims must be nonempty");
  for (int d : dims) {
    if (d < 2) raise(ErrorKind::BadConfig, "every dimension must be at least 2");
  }
  if (!(tol_rel > 0.0) || !std::isfinite(tol_rel)) raise(ErrorKind::BadConfig, "tol_rel must be positive");
  if (p_grid.empty()) raise(ErrorKind::BadConfig, "p_grid must be nonempty");
  for (const auto& [a, t] : alpha_t_grid) {
    if (!(a >= 0.0 && a <= 1.0 && t >= 0.0 && t <= 1.0)) {
      raise(ErrorKind::BadConfig, "alpha_t_grid entries must lie in [0, 1]");
    }
  }
  if (max_counterexamples < 0) raise(ErrorKind::BadConfig, "max_counterexamples must be non-negative");
}

double relative_violation(const BoundReport& r) {
  const double scale = std::max({1.0, std::abs(r.lhs), std::abs(r.rhs)});
  switch (r.relation) {
    case Relation::LessEqual: return (r.lhs - r.rhs) / scale;
    case Relation::Equal: return std::abs(r.lhs - r.rhs) / scale;
    case Relation::Agree: return r.holds ? 0.0 : 1.0;
  }
  return 0.0;
}

namespace {

struct Task {
  std::size_t family;
  int dim;
  int trial;
};

struct TaskOutput {
  std::map<std::string, CheckAggregate> aggregates;
  std::vector<Counterexample> counterexamples;
  long reports = 0;
  long failures = 0;
  long indeterminate = 0;
  long errors = 0;
};

void absorb(CheckAggregate& into, const CheckAggregate& from) {
  if (into.evaluated == 0) {
    into = from;
    return;
  }
  into.evaluated += from.evaluated;
  into.pass += from.pass;
  into.fail += from.fail;
  into.indeterminate += from.indeterminate;
  into.min_slack = std::min(into.min_slack, from.min_slack);
  into.max_rel_violation = std::max(into.max_rel_violation, from.max_rel_violation);
}

TaskOutput run_task(const CheckFamily& fam, const Task& task, const CampaignConfig& cfg, const GridSpec& grid) {
  TaskOutput out;
  const std::uint64_t seed = trial_seed(cfg.seed, fam.name, task.dim, task.trial);
  Rng rng(seed);
  TrialInputs inputs;
  auto record_error = [&](const std::string& msg) {
    const std::string id = fam.name + "/error";
    CheckAggregate& agg = out.aggregates[id];
    agg.check_id = id;
    agg.family = fam.name;
    agg.evaluated += 1;
    agg.fail += 1;
    agg.min_slack = -std::numeric_limits<double>::infinity();
    agg.max_rel_violation = std::numeric_limits<double>::infinity();
    out.errors += 1;
    Counterexample cx;
    cx.family = fam.name;
    cx.check_id = id;
    cx.dim = task.dim;
    cx.trial = task.trial;
    cx.trial_seed = seed;
    cx.inputs = inputs;
    cx.error = msg;
    out.counterexamples.push_back(std::move(cx));
  };
  Reports reports;
  try {
    inputs = fam.generate(task.dim, task.trial, rng);
    reports = fam.evaluate(inputs, grid);
  } catch (const std::exception& e) {
    record_error(e.what());
    return out;
  }
  std::map<std::string, int> dumped;
  for (BoundReport& r : reports) {
    judge(r, cfg.tol_rel);
    ++out.reports;
    CheckAggregate& agg = out.aggregates[r.check_id];
    const double viol = relative_violation(r);
    if (agg.evaluated == 0) {
      agg.check_id = r.check_id;
      agg.family = fam.name;
      agg.min_slack = r.slack;
      agg.max_rel_violation = viol;
    } else {
      agg.min_slack = std::min(agg.min_slack, r.slack);
      agg.max_rel_violation = std::max(agg.max_rel_violation, viol);
    }
    agg.evaluated += 1;
    if (r.indeterminate) {
      agg.indeterminate += 1;
      ++out.indeterminate;
    } else if (r.holds) {
      agg.pass += 1;
    } else {
      agg.fail += 1;
      ++out.failures;
      if (dumped[r.check_id]++ < cfg.max_counterexamples) {
        Counterexample cx;
        cx.family = fam.name;
        cx.check_id = r.check_id;
        cx.dim = task.dim;
        cx.trial = task.trial;
        cx.trial_seed = seed;
        cx.inputs = inputs;
        cx.report = r;
        out.counterexamples.push_back(std::move(cx));
      }
    }
  }
  return out;
}

}  // namespace

CampaignResult run_campaign(const CampaignConfig& config, ExecutionPolicy policy, const Registry& registry) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::size_t> selected;
  if (config.families.empty()) {
    for (std::size_t i = 0; i < registry.size(); ++i) selected.push_back(i);
  } else {
    for (const std::string& name : config.families) {
      const CheckFamily* f = find_family(registry, name);
      if (!f) raise(ErrorKind::BadConfig, "unknown family '" + name + "'");
      selected.push_back(static_cast<std::size_t>(f - registry.data()));
    }
  }
  std::vector<Task> tasks;
  for (std::size_t f : selected) {
    for (int d : config.dims) {
      for (int t = 0; t < config.trials_per_check; ++t) tasks.push_back({f, d, t});
    }
  }
  const GridSpec grid = config.grid();
  std::vector<TaskOutput> outputs(tasks.size());
  const long count = static_cast<long>(tasks.size());
  if (policy == ExecutionPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
      outputs[i] = run_task(registry[tasks[i].family], tasks[i], config, grid);
    }
  } else {
    for (long i = 0; i < count; ++i) outputs[i] = run_task(registry[tasks[i].family], tasks[i], config, grid);
  }

  // merge in task order so the payload does not depend on scheduling
  CampaignResult result;
  result.config = config;
  std::map<std::string, CheckAggregate> merged;
  std::map<std::string, int> kept;
  for (TaskOutput& o : outputs) {
    for (const auto& [id, agg] : o.aggregates) absorb(merged[id], agg);
    for (Counterexample& cx : o.counterexamples) {
      if (kept[cx.check_id]++ < std::max(1, config.max_counterexamples)) {
        result.counterexamples.push_back(std::move(cx));
      }
    }
    result.total_reports += o.reports;
    result.failures += o.failures;
    result.indeterminate += o.indeterminate;
    result.errors += o.errors;
  }
  for (auto& [id, agg] : merged) result.aggregates.push_back(std::move(agg));
  result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::optional<BoundReport> replay(const Counterexample& cx, const CampaignConfig& config, const Registry& registry) {
  const CheckFamily* fam = find_family(registry, cx.family);
  if (!fam) raise(ErrorKind::BadConfig, "unknown family '" + cx.family + "'");
  if (!cx.report) return std::nullopt;
  Reports reports = fam->evaluate(cx.inputs, config.grid());
  for (BoundReport& r : reports) {
    if (r.check_id == cx.check_id && r.params == cx.report->params) {
      judge(r, config.tol_rel);
      return r;
    }
  }
  return std::nullopt;
}

}  // namespace opineq
