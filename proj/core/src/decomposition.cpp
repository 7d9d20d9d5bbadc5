#include "pseudocore/decomposition.hpp"

#include <algorithm>
#include <ostream>

#include "pseudocore/errors.hpp"

namespace pseudocore {

ShellAssignment::ShellAssignment(std::vector<ShellIndex> shell_of_node)
    : shell_(std::move(shell_of_node)) {
  for (ShellIndex s : shell_) {
    if (s < 0) throw PreconditionError("negative shell index");
    core_index_ = std::max(core_index_, s);
  }
  members_.resize(static_cast<std::size_t>(core_index_ + 1));
  for (std::size_t u = 0; u < shell_.size(); ++u) {
    members_[static_cast<std::size_t>(shell_[u])].push_back(static_cast<NodeId>(u));
  }
}

ShellIndex ShellAssignment::shell(NodeId u) const {
  if (u >= shell_.size()) throw PreconditionError("unknown node id " + std::to_string(u));
  return shell_[u];
}

std::span<const NodeId> ShellAssignment::nodes_in(ShellIndex s) const {
  if (s < 0 || s > core_index_) return {};
  return members_[static_cast<std::size_t>(s)];
}

TargetSet::TargetSet(std::initializer_list<ShellIndex> shells)
    : TargetSet(std::vector<ShellIndex>(shells)) {}

TargetSet::TargetSet(std::vector<ShellIndex> shells) : shells_(std::move(shells)) {
  std::sort(shells_.begin(), shells_.end());
  shells_.erase(std::unique(shells_.begin(), shells_.end()), shells_.end());
}

TargetSet TargetSet::core_of(const ShellAssignment& assignment) {
  if (assignment.core_index() < 0) throw PreconditionError("empty shell assignment");
  return TargetSet{assignment.core_index()};
}

bool TargetSet::contains(ShellIndex s) const {
  return std::binary_search(shells_.begin(), shells_.end(), s);
}

TargetSet TargetSet::united_with(const TargetSet& other) const {
  std::vector<ShellIndex> merged(shells_);
  merged.insert(merged.end(), other.shells_.begin(), other.shells_.end());
  return TargetSet(std::move(merged));
}

ShellAssignment k_shell_decompose(const Graph& g) {
  // Batagelj-Zaversnik: nodes kept in an array sorted by current degree, with
  // bin_start[d] marking where degree-d nodes begin.
  const std::size_t n = g.num_nodes();
  if (n == 0) return ShellAssignment{};

  std::vector<std::size_t> degree(n);
  std::size_t max_degree = 0;
  for (NodeId u = 0; u < n; ++u) {
    degree[u] = g.degree(u);
    max_degree = std::max(max_degree, degree[u]);
  }

  std::vector<std::size_t> bin_start(max_degree + 1, 0);
  for (std::size_t d : degree) ++bin_start[d];
  std::size_t offset = 0;
  for (auto& count : bin_start) {
    const std::size_t size = count;
    count = offset;
    offset += size;
  }

  std::vector<NodeId> order(n);
  std::vector<std::size_t> position(n);
  {
    std::vector<std::size_t> fill(bin_start);
    for (NodeId u = 0; u < n; ++u) {
      position[u] = fill[degree[u]]++;
      order[position[u]] = u;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const NodeId u = order[i];
    for (NodeId v : g.neighbors(u)) {
      if (degree[v] <= degree[u]) continue;
      // Move v to the front of its bin, then shrink the bin by one.
      const std::size_t dv = degree[v];
      const std::size_t front = bin_start[dv];
      const NodeId w = order[front];
      if (w != v) {
        std::swap(order[front], order[position[v]]);
        position[w] = position[v];
        position[v] = front;
      }
      ++bin_start[dv];
      --degree[v];
    }
  }

  std::vector<ShellIndex> shell(n);
  for (NodeId u = 0; u < n; ++u) shell[u] = static_cast<ShellIndex>(degree[u]);
  return ShellAssignment(std::move(shell));
}

bool is_target(const ShellAssignment& assignment, NodeId u, const TargetSet& targets) {
  return targets.contains(assignment.shell(u));
}

std::vector<std::size_t> shell_sizes(const ShellAssignment& assignment) {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(assignment.core_index() + 1), 0);
  for (ShellIndex s = 0; s <= assignment.core_index(); ++s) {
    sizes[static_cast<std::size_t>(s)] = assignment.nodes_in(s).size();
  }
  return sizes;
}

void write_shell_assignment(const Graph& g, const ShellAssignment& assignment, std::ostream& out) {
  if (g.num_nodes() != assignment.num_nodes()) {
    throw PreconditionError("shell assignment does not match graph");
  }
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    out << g.label(u) << ' ' << assignment.shell(u) << '\n';
  }
}

nlohmann::json shell_summary_json(const Graph& g, const ShellAssignment& assignment) {
  return {
      {"n", g.num_nodes()},
      {"m", g.num_edges()},
      {"core_index", assignment.core_index()},
      {"shell_sizes", shell_sizes(assignment)},
  };
}

}  // namespace pseudocore
