#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "pseudocore/graph.hpp"

namespace pseudocore {

/// Shell (coreness) index. Isolated nodes sit in shell 0; the periphery is
/// shell 1.
using ShellIndex = int;

/// Node-to-shell map produced by k-shell decomposition.
///
/// Shell indices between 0 and core_index() that hold no nodes are kept as
/// empty shells.
class ShellAssignment {
 public:
  ShellAssignment() = default;
  explicit ShellAssignment(std::vector<ShellIndex> shell_of_node);

  std::size_t num_nodes() const noexcept { return shell_.size(); }

  /// Throws PreconditionError for unknown nodes.
  ShellIndex shell(NodeId u) const;

  /// Maximum shell index; -1 for an empty assignment.
  ShellIndex core_index() const noexcept { return core_index_; }

  /// Members of shell s in ascending id order; empty for empty or
  /// out-of-range indices.
  std::span<const NodeId> nodes_in(ShellIndex s) const;

  std::span<const ShellIndex> per_node() const noexcept { return shell_; }

  bool operator==(const ShellAssignment& other) const { return shell_ == other.shell_; }

 private:
  std::vector<ShellIndex> shell_;
  std::vector<std::vector<NodeId>> members_;
  ShellIndex core_index_ = -1;
};

/// A set of shell indices a walk is trying to reach.
class TargetSet {
 public:
  TargetSet() = default;
  TargetSet(std::initializer_list<ShellIndex> shells);
  explicit TargetSet(std::vector<ShellIndex> shells);

  static TargetSet core_of(const ShellAssignment& assignment);

  bool contains(ShellIndex s) const;
  bool empty() const noexcept { return shells_.empty(); }
  std::span<const ShellIndex> values() const noexcept { return shells_; }
  TargetSet united_with(const TargetSet& other) const;

  bool operator==(const TargetSet&) const = default;

 private:
  std::vector<ShellIndex> shells_;  // sorted, unique
};

/// k-shell decomposition by bucket peeling in O(n + m).
ShellAssignment k_shell_decompose(const Graph& g);

/// True iff shell(u) is one of `targets`. Throws PreconditionError for
/// unknown nodes.
bool is_target(const ShellAssignment& assignment, NodeId u, const TargetSet& targets);

/// Node count per shell index, indexed 0..core_index (empty shells give 0).
std::vector<std::size_t> shell_sizes(const ShellAssignment& assignment);

/// "external_label shell_index" lines in internal id order.
void write_shell_assignment(const Graph& g, const ShellAssignment& assignment, std::ostream& out);

/// {"n", "m", "core_index", "shell_sizes": [count for shell 0, 1, ...]}.
nlohmann::json shell_summary_json(const Graph& g, const ShellAssignment& assignment);

}  // namespace pseudocore
