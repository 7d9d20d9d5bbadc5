#include "pseudocore/pathfinding.hpp"

#include <array>
#include <ostream>

#include "pseudocore/errors.hpp"
#include "pseudocore/rng.hpp"

namespace pseudocore {
namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 4> kNames{{
    {Algorithm::RandomWalk, "rw"},
    {Algorithm::DegreeHillClimb, "dhc"},
    {Algorithm::ShellHillClimb, "sh"},
    {Algorithm::ShellDegreeHillClimb, "sa"},
}};

// Argmax of key over candidates; candidates are in ascending id order, so a
// strict comparison keeps the smallest id on ties.
template <typename Key>
NodeId argmax(const std::vector<NodeId>& candidates, Key key) {
  NodeId best = candidates.front();
  auto best_key = key(best);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const auto k = key(candidates[i]);
    if (k > best_key) {
      best = candidates[i];
      best_key = k;
    }
  }
  return best;
}

}  // namespace

std::string_view short_name(Algorithm algorithm) {
  for (const auto& [a, name] : kNames) {
    if (a == algorithm) return name;
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const auto& [a, n] : kNames) {
    if (n == name) return a;
  }
  return std::nullopt;
}

std::string_view to_string(WalkStatus status) {
  switch (status) {
    case WalkStatus::Reached:
      return "reached";
    case WalkStatus::Stuck:
      return "stuck";
    case WalkStatus::StepCapExceeded:
      return "step_cap";
  }
  return "?";
}

WalkResult run_walk(const Graph& g, const ShellAssignment& assignment, NodeId start,
                    const WalkConfig& cfg) {
  if (g.num_nodes() != assignment.num_nodes()) {
    throw PreconditionError("shell assignment does not match graph");
  }
  if (!g.contains(start)) throw PreconditionError("unknown start node " + std::to_string(start));
  if (cfg.targets.empty()) throw PreconditionError("walk needs a nonempty target set");
  if (is_target(assignment, start, cfg.targets)) {
    throw PreconditionError("start node " + g.label(start) + " already lies in a target shell");
  }
  const std::size_t max_steps = cfg.max_steps == 0 ? g.num_nodes() : cfg.max_steps;

  Rng rng(cfg.seed);
  std::vector<bool> visited(g.num_nodes(), false);
  std::vector<NodeId> candidates;
  auto shell_of = [&](NodeId u) { return assignment.shell(u); };
  auto degree_of = [&](NodeId u) { return g.degree(u); };

  WalkResult result;
  result.start = start;
  result.path.push_back(start);
  visited[start] = true;
  NodeId current = start;

  while (!is_target(assignment, current, cfg.targets)) {
    if (result.numsteps >= max_steps) {
      result.status = WalkStatus::StepCapExceeded;
      return result;
    }
    candidates.clear();
    for (NodeId v : g.neighbors(current)) {
      if (!visited[v]) candidates.push_back(v);
    }
    if (candidates.empty()) {
      result.status = WalkStatus::Stuck;
      return result;
    }

    NodeId next = candidates.front();
    switch (cfg.algorithm) {
      case Algorithm::RandomWalk:
        next = candidates[rng.uniform_index(candidates.size())];
        break;
      case Algorithm::DegreeHillClimb:
        next = argmax(candidates, degree_of);
        break;
      case Algorithm::ShellHillClimb:
      case Algorithm::ShellDegreeHillClimb: {
        const NodeId climb = argmax(candidates, shell_of);
        if (shell_of(climb) > shell_of(current)) {
          next = climb;
        } else if (cfg.algorithm == Algorithm::ShellHillClimb) {
          next = candidates[rng.uniform_index(candidates.size())];
        } else {
          next = argmax(candidates, degree_of);
        }
        break;
      }
    }

    visited[next] = true;
    result.path.push_back(next);
    ++result.numsteps;
    current = next;
  }
  result.status = WalkStatus::Reached;
  return result;
}

WalkResult random_walk(const Graph& g, const ShellAssignment& assignment, NodeId start,
                       WalkConfig cfg) {
  cfg.algorithm = Algorithm::RandomWalk;
  return run_walk(g, assignment, start, cfg);
}

WalkResult degree_hill_climb(const Graph& g, const ShellAssignment& assignment, NodeId start,
                             WalkConfig cfg) {
  cfg.algorithm = Algorithm::DegreeHillClimb;
  return run_walk(g, assignment, start, cfg);
}

WalkResult shell_hill_climb(const Graph& g, const ShellAssignment& assignment, NodeId start,
                            WalkConfig cfg) {
  cfg.algorithm = Algorithm::ShellHillClimb;
  return run_walk(g, assignment, start, cfg);
}

WalkResult shell_degree_hill_climb(const Graph& g, const ShellAssignment& assignment,
                                   NodeId start, WalkConfig cfg) {
  cfg.algorithm = Algorithm::ShellDegreeHillClimb;
  return run_walk(g, assignment, start, cfg);
}

void write_walk_trace(const Graph& g, const ShellAssignment& assignment, const WalkResult& walk,
                      std::ostream& out) {
  out << "step,node_label,shell\n";
  for (std::size_t i = 0; i < walk.path.size(); ++i) {
    out << i << ',' << g.label(walk.path[i]) << ',' << assignment.shell(walk.path[i]) << '\n';
  }
}

}  // namespace pseudocore
