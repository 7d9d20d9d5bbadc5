#include "pseudocore/experiments.hpp"

#include <algorithm>
#include <ostream>

#include "pseudocore/errors.hpp"
#include "pseudocore/format.hpp"
#include "pseudocore/parallel.hpp"
#include "pseudocore/rng.hpp"

namespace pseudocore {
namespace {

void validate(const ExperimentConfig& cfg) {
  if (cfg.algorithms.empty()) throw PreconditionError("experiment needs at least one algorithm");
  if (cfg.k_max < 2) throw PreconditionError("k_max must be at least 2");
  if (cfg.targets.empty()) throw PreconditionError("experiment needs a nonempty target set");
}

AlgorithmSummary summarize(Algorithm algorithm, std::vector<InstanceOutcome> outcomes,
                           int k_max) {
  AlgorithmSummary summary;
  summary.algorithm = algorithm;
  summary.instances = outcomes.size();

  std::vector<std::size_t> steps;
  for (const auto& o : outcomes) {
    switch (o.status) {
      case WalkStatus::Reached:
        ++summary.reached;
        steps.push_back(o.numsteps);
        break;
      case WalkStatus::Stuck:
        ++summary.stuck;
        break;
      case WalkStatus::StepCapExceeded:
        ++summary.step_cap;
        break;
    }
  }
  std::sort(steps.begin(), steps.end());

  summary.cdf.assign(static_cast<std::size_t>(k_max - 1), 0.0);
  if (!steps.empty()) {
    const auto total = static_cast<double>(steps.size());
    for (int k = 2; k <= k_max; ++k) {
      const auto within = std::upper_bound(steps.begin(), steps.end(),
                                           static_cast<std::size_t>(k)) - steps.begin();
      summary.cdf[static_cast<std::size_t>(k - 2)] = static_cast<double>(within) / total;
    }
    double sum = 0.0;
    for (std::size_t s : steps) sum += static_cast<double>(s);
    summary.mean_steps = sum / total;
    const std::size_t mid = steps.size() / 2;
    summary.median_steps = steps.size() % 2 == 1
                               ? static_cast<double>(steps[mid])
                               : (static_cast<double>(steps[mid - 1]) +
                                  static_cast<double>(steps[mid])) / 2.0;
  }
  summary.outcomes = std::move(outcomes);
  return summary;
}

nlohmann::json optional_json(const std::optional<double>& value) {
  return value ? nlohmann::json(*value) : nlohmann::json();
}

}  // namespace

double AlgorithmSummary::cdf_at(int k) const {
  if (k < 2 || cdf.empty()) return 0.0;
  const auto index = std::min<std::size_t>(static_cast<std::size_t>(k - 2), cdf.size() - 1);
  return cdf[index];
}

const AlgorithmSummary* CdfReport::find(Algorithm algorithm) const {
  for (const auto& summary : algorithms) {
    if (summary.algorithm == algorithm) return &summary;
  }
  return nullptr;
}

std::vector<NodeId> enumerate_instances(const Graph& g, const ShellAssignment& assignment,
                                        const TargetSet& targets, bool exclude_adjacent) {
  if (g.num_nodes() != assignment.num_nodes()) {
    throw PreconditionError("shell assignment does not match graph");
  }
  std::vector<NodeId> instances;
  if (targets.contains(kPeripheryShell)) return instances;
  for (NodeId u : assignment.nodes_in(kPeripheryShell)) {
    if (exclude_adjacent) {
      const auto nbrs = g.neighbors(u);
      const bool touches = std::any_of(nbrs.begin(), nbrs.end(), [&](NodeId v) {
        return targets.contains(assignment.shell(v));
      });
      if (touches) continue;
    }
    instances.push_back(u);
  }
  return instances;
}

std::vector<NodeId> limit_instances(std::vector<NodeId> instances, const ExperimentConfig& cfg) {
  if (!cfg.sample_limit || *cfg.sample_limit >= instances.size()) return instances;
  // Partial Fisher-Yates.
  Rng rng(derive_seed(cfg.master_seed, SeedStream::Sampling, 0));
  const std::size_t keep = *cfg.sample_limit;
  for (std::size_t i = 0; i < keep; ++i) {
    const std::size_t j = i + rng.uniform_index(instances.size() - i);
    std::swap(instances[i], instances[j]);
  }
  instances.resize(keep);
  std::sort(instances.begin(), instances.end());
  return instances;
}

CdfReport run_experiment_on(const Graph& g, const ShellAssignment& assignment,
                            const ExperimentConfig& cfg, std::vector<NodeId> instances) {
  validate(cfg);
  if (instances.empty()) {
    throw EmptyInstanceSet("no periphery instances remain after filtering");
  }

  const std::size_t per_algorithm = instances.size();
  std::vector<std::vector<InstanceOutcome>> outcomes(
      cfg.algorithms.size(), std::vector<InstanceOutcome>(per_algorithm));
  parallel_for(cfg.algorithms.size() * per_algorithm, cfg.threads, [&](std::size_t job) {
    const std::size_t a = job / per_algorithm;
    const std::size_t i = job % per_algorithm;
    WalkConfig walk;
    walk.algorithm = cfg.algorithms[a];
    walk.targets = cfg.targets;
    walk.max_steps = cfg.max_steps;
    walk.seed = derive_seed(cfg.master_seed, SeedStream::Walk, instances[i]);
    const WalkResult result = run_walk(g, assignment, instances[i], walk);
    outcomes[a][i] = {result.numsteps, result.status};
  });

  CdfReport report;
  report.k_max = cfg.k_max;
  report.targets = cfg.targets;
  for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
    report.algorithms.push_back(summarize(cfg.algorithms[a], std::move(outcomes[a]), cfg.k_max));
  }
  report.instances = std::move(instances);
  return report;
}

CdfReport run_experiment(const Graph& g, const ShellAssignment& assignment,
                         const ExperimentConfig& cfg) {
  validate(cfg);
  auto instances = enumerate_instances(g, assignment, cfg.targets, cfg.exclude_adjacent);
  return run_experiment_on(g, assignment, cfg, limit_instances(std::move(instances), cfg));
}

TargetSet pseudo_core_targets(const ShellProfile& profile) {
  std::vector<ShellIndex> shells(profile.pseudo_core_indices);
  if (profile.core_index >= 0) shells.push_back(profile.core_index);
  return TargetSet(std::move(shells));
}

TargetComparison compare_targets(const Graph& g, const ShellAssignment& assignment,
                                 const ExperimentConfig& base, const TargetSet& pseudo_targets) {
  validate(base);
  TargetComparison comparison;
  if (pseudo_targets.empty()) {
    comparison.reason = "no pseudo-core shells detected";
    return comparison;
  }

  ExperimentConfig pseudo_cfg = base;
  pseudo_cfg.targets = pseudo_targets.united_with(base.targets);
  auto instances = limit_instances(
      enumerate_instances(g, assignment, pseudo_cfg.targets, base.exclude_adjacent), base);

  comparison.core = run_experiment_on(g, assignment, base, instances);
  comparison.pseudo = run_experiment_on(g, assignment, pseudo_cfg, std::move(instances));
  comparison.applicable = true;
  for (std::size_t a = 0; a < base.algorithms.size(); ++a) {
    const auto& core_mean = comparison.core.algorithms[a].mean_steps;
    const auto& pseudo_mean = comparison.pseudo.algorithms[a].mean_steps;
    AlgorithmRatio ratio{base.algorithms[a], std::nullopt};
    if (core_mean && pseudo_mean && *pseudo_mean > 0.0) {
      ratio.core_over_pseudo = *core_mean / *pseudo_mean;
    }
    comparison.ratios.push_back(ratio);
  }
  return comparison;
}

void write_cdf_csv(const CdfReport& report, std::ostream& out) {
  out << 'k';
  for (const auto& s : report.algorithms) out << ',' << short_name(s.algorithm);
  out << '\n';
  for (int k = 2; k <= report.k_max; ++k) {
    out << k;
    for (const auto& s : report.algorithms) out << ',' << format_fixed(s.cdf_at(k));
    out << '\n';
  }
}

void write_cdf_gnuplot(const CdfReport& report, std::ostream& out) {
  out << "# P(R <= k) over walks that reached the target set\n# k";
  for (const auto& s : report.algorithms) out << ' ' << short_name(s.algorithm);
  out << '\n';
  for (int k = 2; k <= report.k_max; ++k) {
    out << k;
    for (const auto& s : report.algorithms) out << ' ' << format_fixed(s.cdf_at(k));
    out << '\n';
  }
}

void write_outcomes_csv(const Graph& g, const CdfReport& report, std::ostream& out) {
  out << "instance_label,algorithm,status,numsteps\n";
  for (std::size_t i = 0; i < report.instances.size(); ++i) {
    for (const auto& s : report.algorithms) {
      const auto& o = s.outcomes[i];
      out << g.label(report.instances[i]) << ',' << short_name(s.algorithm) << ','
          << to_string(o.status) << ',' << o.numsteps << '\n';
    }
  }
}

nlohmann::json cdf_json(const CdfReport& report) {
  nlohmann::json algorithms = nlohmann::json::array();
  for (const auto& s : report.algorithms) {
    algorithms.push_back({
        {"algorithm", short_name(s.algorithm)},
        {"instances", s.instances},
        {"reached", s.reached},
        {"stuck", s.stuck},
        {"step_cap", s.step_cap},
        {"mean_steps", optional_json(s.mean_steps)},
        {"median_steps", optional_json(s.median_steps)},
        {"cdf", s.cdf},
    });
  }
  return {
      {"k_min", 2},
      {"k_max", report.k_max},
      {"targets", std::vector<ShellIndex>(report.targets.values().begin(),
                                          report.targets.values().end())},
      {"instance_count", report.instances.size()},
      {"algorithms", std::move(algorithms)},
  };
}

nlohmann::json comparison_json(const TargetComparison& comparison) {
  if (!comparison.applicable) {
    return {{"applicable", false}, {"reason", comparison.reason}};
  }
  nlohmann::json ratios = nlohmann::json::object();
  for (const auto& r : comparison.ratios) {
    ratios[std::string(short_name(r.algorithm))] = optional_json(r.core_over_pseudo);
  }
  return {
      {"applicable", true},
      {"core", cdf_json(comparison.core)},
      {"pseudo", cdf_json(comparison.pseudo)},
      {"mean_step_ratio_core_over_pseudo", std::move(ratios)},
  };
}

}  // namespace pseudocore
