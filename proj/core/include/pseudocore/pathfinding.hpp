#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "pseudocore/decomposition.hpp"
#include "pseudocore/graph.hpp"

namespace pseudocore {

enum class Algorithm {
  RandomWalk,            ///< uniform choice among unvisited neighbours
  DegreeHillClimb,       ///< highest-degree unvisited neighbour
  ShellHillClimb,        ///< SH: climb shells, random move on a plateau
  ShellDegreeHillClimb,  ///< SA: climb shells, highest-degree move on a plateau
};

/// Short names used on the command line and in reports: rw, dhc, sh, sa.
std::string_view short_name(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);

enum class WalkStatus { Reached, Stuck, StepCapExceeded };
std::string_view to_string(WalkStatus status);

struct WalkConfig {
  Algorithm algorithm = Algorithm::ShellHillClimb;
  TargetSet targets;
  std::size_t max_steps = 0;  ///< 0 means the graph order n
  std::uint64_t seed = 0;
};

struct WalkResult {
  NodeId start = 0;
  std::size_t numsteps = 0;
  WalkStatus status = WalkStatus::Stuck;
  std::vector<NodeId> path;  ///< visited nodes in order, starting with `start`

  bool operator==(const WalkResult&) const = default;
};

/// Walks from `start` without revisiting nodes until it steps onto a node
/// whose shell is in cfg.targets (Reached), runs out of unvisited neighbours
/// (Stuck), or has made cfg.max_steps moves (StepCapExceeded). Argmax ties go
/// to the smallest internal id.
///
/// Throws PreconditionError when start is unknown, already in a target shell,
/// or cfg.targets is empty.
WalkResult run_walk(const Graph& g, const ShellAssignment& assignment, NodeId start,
                    const WalkConfig& cfg);

// Fixed-algorithm entry points; cfg.algorithm is ignored.
WalkResult random_walk(const Graph& g, const ShellAssignment& assignment, NodeId start,
                       WalkConfig cfg);
WalkResult degree_hill_climb(const Graph& g, const ShellAssignment& assignment, NodeId start,
                             WalkConfig cfg);
WalkResult shell_hill_climb(const Graph& g, const ShellAssignment& assignment, NodeId start,
                            WalkConfig cfg);
WalkResult shell_degree_hill_climb(const Graph& g, const ShellAssignment& assignment,
                                   NodeId start, WalkConfig cfg);

/// "step,node_label,shell" CSV for one walk.
void write_walk_trace(const Graph& g, const ShellAssignment& assignment, const WalkResult& walk,
                      std::ostream& out);

}  // namespace pseudocore
