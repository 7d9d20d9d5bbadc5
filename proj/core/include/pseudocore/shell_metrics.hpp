#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pseudocore/cascade.hpp"
#include "pseudocore/decomposition.hpp"
#include "pseudocore/graph.hpp"

namespace pseudocore {

/// (shell index, node count) for every nonempty shell, increasing shell order.
std::vector<std::pair<ShellIndex, std::size_t>> shell_node_distribution(
    const ShellAssignment& assignment);

/// Number of edges with both endpoints in `shell`.
std::size_t intra_shell_edge_count(const Graph& g, const ShellAssignment& assignment,
                                   ShellIndex shell);

/// |E(S)| / C(|V(S)|, 2) for the subgraph induced by the shell; 0 for a
/// singleton shell. Throws PreconditionError for an empty shell.
double shell_density(const Graph& g, const ShellAssignment& assignment, ShellIndex shell);

/// An edge climbing from a lower shell to a higher one, owned by its lower
/// endpoint `from`.
struct TeleportationEdge {
  NodeId from = 0;
  NodeId to = 0;
  ShellIndex height = 0;  ///< shell(to) - shell(from), always >= 1
};

class TeleportationEdgeSet {
 public:
  TeleportationEdgeSet() = default;
  TeleportationEdgeSet(const Graph& g, const ShellAssignment& assignment);

  /// Edges leaving `shell` upwards, ordered by (from, to).
  std::span<const TeleportationEdge> outgoing(ShellIndex shell) const;
  std::size_t count(ShellIndex shell) const { return outgoing(shell).size(); }
  long long height_sum(ShellIndex shell) const;
  std::size_t total() const noexcept;

 private:
  std::vector<std::vector<TeleportationEdge>> by_shell_;
};

/// Leakage power of a shell S with m = |V(S)| nodes in a graph of n nodes:
///
///     kappa * t * (sum of teleportation heights) / (m * (n - m))
///
/// where t is the number of teleportation edges leaving S. Returns nullopt
/// when the shell spans the whole graph (n == m). Throws PreconditionError
/// for an empty shell.
std::optional<double> leakage_power(const Graph& g, const ShellAssignment& assignment,
                                    ShellIndex shell, double kappa = 1.0);
std::optional<double> leakage_power(const TeleportationEdgeSet& edges,
                                    const ShellAssignment& assignment, ShellIndex shell,
                                    double kappa = 1.0);

struct ShellRecord {
  ShellIndex shell = 0;
  std::size_t node_count = 0;
  std::size_t intra_edge_count = 0;
  double density = 0.0;
  std::optional<CascadeStats> cascade;
  std::optional<double> leakage_power;  ///< nullopt when undefined
};

struct ShellProfile {
  std::size_t n = 0;
  std::size_t m = 0;
  ShellIndex core_index = -1;
  std::vector<ShellRecord> shells;  ///< nonempty shells only, increasing index
  std::vector<ShellIndex> pseudo_core_indices;
  double theta = 0.9;
  double kappa = 1.0;
  double p_infect = 0.0;
  std::size_t samples = 0;

  const ShellRecord* find(ShellIndex shell) const;
};

struct ProfileOptions {
  bool with_cascade = true;
  CascadeConfig cascade;
  std::size_t samples = 200;
  double kappa = 1.0;
  double theta = 0.9;
  unsigned threads = 1;
};

/// Computes every per-shell record, and, when cascades are enabled, the
/// pseudo-core set at opts.theta.
ShellProfile build_shell_profile(const Graph& g, const ShellAssignment& assignment,
                                 const ProfileOptions& opts = {});

/// Non-core shells whose mean cascade reaches theta times the core's. theta
/// must lie in (0, 1]. Throws PreconditionError when any shell lacks cascade
/// statistics.
std::vector<ShellIndex> detect_pseudo_cores(const ShellProfile& profile, double theta);

/// One row per shell: shell_index,node_count,intra_edge_count,density,
/// cascade_mean,cascade_std,cascade_samples,leakage_power. Missing values are
/// left empty.
void write_profile_csv(const ShellProfile& profile, std::ostream& out);
nlohmann::json profile_json(const ShellProfile& profile);

}  // namespace pseudocore
