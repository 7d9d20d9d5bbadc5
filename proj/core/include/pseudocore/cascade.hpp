#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "pseudocore/decomposition.hpp"
#include "pseudocore/graph.hpp"
#include "pseudocore/rng.hpp"

namespace pseudocore {

struct CascadeConfig {
  double p_infect = 0.05;  ///< per-edge activation probability, in [0, 1]
  std::uint64_t seed = 0;
  std::optional<std::size_t> max_iterations;
  bool record_infected_set = false;
};

struct CascadeResult {
  std::size_t infected_count = 0;
  std::size_t iterations = 0;  ///< rounds run, including the final one that infected nobody
  std::optional<std::vector<NodeId>> infected_set;  ///< sorted, when requested

  bool operator==(const CascadeResult&) const = default;
};

/// Independent cascade with synchronous rounds. Every node infected in round
/// t gets exactly one chance, in round t + 1, to infect each still-healthy
/// neighbour with probability p_infect. Stops after the first round that
/// infects nobody, or after max_iterations rounds.
///
/// Duplicate seeds are ignored. Throws PreconditionError for an empty seed
/// set, unknown seeds, or p_infect outside [0, 1].
CascadeResult run_independent_cascade(const Graph& g, std::span<const NodeId> seeds,
                                      const CascadeConfig& cfg);

/// Same process drawing from a caller-owned generator (cfg.seed unused).
CascadeResult run_independent_cascade(const Graph& g, std::span<const NodeId> seeds,
                                      const CascadeConfig& cfg, Rng& rng);

struct CascadeStats {
  double mean = 0.0;
  double std = 0.0;  ///< sample standard deviation; 0 for a single sample
  std::size_t samples = 0;
};

/// Cascading power of a shell: `samples` single-seed cascades, each seeded
/// with a node drawn uniformly (with replacement) from the shell. Sample i
/// draws from its own generator seeded by derive_seed(cfg.seed, Cascade, i),
/// so the result does not depend on `threads`.
///
/// Returns nullopt for an empty shell.
std::optional<CascadeStats> cascading_power(const Graph& g, const ShellAssignment& assignment,
                                            ShellIndex shell, std::size_t samples,
                                            const CascadeConfig& cfg, unsigned threads = 1);

struct ShellCascade {
  ShellIndex shell = 0;
  std::size_t nodes = 0;
  CascadeStats stats;
};

/// cascading_power for every nonempty shell, in increasing shell order.
std::vector<ShellCascade> cascading_power_by_shell(const Graph& g,
                                                   const ShellAssignment& assignment,
                                                   std::size_t samples, const CascadeConfig& cfg,
                                                   unsigned threads = 1);

/// CSV with header shell_index,n_nodes,mean,std,samples,p_infect.
void write_cascade_csv(std::span<const ShellCascade> rows, double p_infect, std::ostream& out);

}  // namespace pseudocore
