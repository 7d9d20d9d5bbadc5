#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pseudocore/decomposition.hpp"
#include "pseudocore/graph.hpp"
#include "pseudocore/pathfinding.hpp"
#include "pseudocore/shell_metrics.hpp"

namespace pseudocore {

/// Periphery shell from which every walk instance starts.
inline constexpr ShellIndex kPeripheryShell = 1;

struct ExperimentConfig {
  std::vector<Algorithm> algorithms{Algorithm::RandomWalk, Algorithm::DegreeHillClimb,
                                    Algorithm::ShellHillClimb,
                                    Algorithm::ShellDegreeHillClimb};
  TargetSet targets;
  bool exclude_adjacent = true;  ///< drop starts that touch a target shell
  int k_max = 15;
  std::uint64_t master_seed = 0;
  std::optional<std::size_t> sample_limit;
  std::size_t max_steps = 0;  ///< 0 means the graph order n
  unsigned threads = 1;
};

struct InstanceOutcome {
  std::size_t numsteps = 0;
  WalkStatus status = WalkStatus::Stuck;

  bool operator==(const InstanceOutcome&) const = default;
};

struct AlgorithmSummary {
  Algorithm algorithm = Algorithm::RandomWalk;
  std::size_t instances = 0;
  std::size_t reached = 0;
  std::size_t stuck = 0;
  std::size_t step_cap = 0;
  /// cdf[k - 2] = P(R <= k) over Reached walks, for k = 2..k_max.
  std::vector<double> cdf;
  std::optional<double> mean_steps;    ///< over Reached walks
  std::optional<double> median_steps;  ///< over Reached walks
  std::vector<InstanceOutcome> outcomes;  ///< parallel to CdfReport::instances

  /// P(R <= k); 0 below k = 2, the last tabulated value above k_max.
  double cdf_at(int k) const;

  bool operator==(const AlgorithmSummary&) const = default;
};

struct CdfReport {
  int k_max = 15;
  TargetSet targets;
  std::vector<NodeId> instances;
  std::vector<AlgorithmSummary> algorithms;

  const AlgorithmSummary* find(Algorithm algorithm) const;
  bool operator==(const CdfReport&) const = default;
};

/// Shell-1 nodes in ascending id order, minus (when exclude_adjacent) those
/// with a neighbour in a target shell. Shell-1 nodes that are themselves
/// targets are never instances.
std::vector<NodeId> enumerate_instances(const Graph& g, const ShellAssignment& assignment,
                                        const TargetSet& targets, bool exclude_adjacent);

/// Applies cfg.sample_limit: a seeded uniform subset, returned sorted.
std::vector<NodeId> limit_instances(std::vector<NodeId> instances,
                                    const ExperimentConfig& cfg);

/// Runs every algorithm once per instance. The walk from instance node u uses
/// seed derive_seed(master_seed, Walk, u) for every algorithm, so results
/// are paired across algorithms and independent of cfg.threads.
///
/// Throws EmptyInstanceSet when filtering leaves nothing to run.
CdfReport run_experiment(const Graph& g, const ShellAssignment& assignment,
                         const ExperimentConfig& cfg);

/// run_experiment over an explicit instance list.
CdfReport run_experiment_on(const Graph& g, const ShellAssignment& assignment,
                            const ExperimentConfig& cfg, std::vector<NodeId> instances);

/// Pseudo-core shells together with the core.
TargetSet pseudo_core_targets(const ShellProfile& profile);

struct AlgorithmRatio {
  Algorithm algorithm = Algorithm::RandomWalk;
  std::optional<double> core_over_pseudo;  ///< mean steps ratio; nullopt if undefined
};

struct TargetComparison {
  bool applicable = false;
  std::string reason;  ///< why the comparison was skipped
  CdfReport core;
  CdfReport pseudo;
  std::vector<AlgorithmRatio> ratios;
};

/// Evaluates the same instances against base.targets and against
/// pseudo_targets united with base.targets. Instances are filtered against
/// adjacency to either target set. An empty pseudo_targets yields a report
/// with applicable == false.
TargetComparison compare_targets(const Graph& g, const ShellAssignment& assignment,
                                 const ExperimentConfig& base, const TargetSet& pseudo_targets);

/// k,<alg>,<alg>,... with one row per k = 2..k_max.
void write_cdf_csv(const CdfReport& report, std::ostream& out);
/// Whitespace-separated columns with a '#' header, plottable as-is.
void write_cdf_gnuplot(const CdfReport& report, std::ostream& out);
/// instance_label,algorithm,status,numsteps for every walk.
void write_outcomes_csv(const Graph& g, const CdfReport& report, std::ostream& out);
nlohmann::json cdf_json(const CdfReport& report);
nlohmann::json comparison_json(const TargetComparison& comparison);

}  // namespace pseudocore
