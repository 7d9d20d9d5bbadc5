#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pseudocore {

/// Dense internal node index in [0, n).
using NodeId = std::uint32_t;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  bool operator==(const Edge&) const = default;
};

/// Counts of input edges discarded while building a simple graph.
struct BuildStats {
  std::size_t self_loops = 0;
  std::size_t duplicate_edges = 0;  // includes reversed duplicates (u,v)/(v,u)
};

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Every node carries an external label (the identifier used in input and
/// output files); labels are unique. Neighbor lists are sorted by internal id.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph over labels.size() nodes. Self-loops and repeated edges
  /// in either orientation are dropped and tallied in `stats` when given.
  /// Throws PreconditionError on duplicate labels or out-of-range endpoints.
  Graph(std::vector<std::string> labels, std::span<const Edge> edges,
        BuildStats* stats = nullptr);

  /// Graph whose node i is labelled "i".
  static Graph with_integer_labels(std::size_t n, std::span<const Edge> edges,
                                   BuildStats* stats = nullptr);

  std::size_t num_nodes() const noexcept { return labels_.size(); }
  std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }
  bool empty() const noexcept { return labels_.empty(); }
  bool contains(NodeId u) const noexcept { return u < labels_.size(); }

  /// Throws PreconditionError for unknown nodes.
  std::size_t degree(NodeId u) const;
  std::span<const NodeId> neighbors(NodeId u) const;
  bool has_edge(NodeId u, NodeId v) const;

  const std::string& label(NodeId u) const;
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::optional<NodeId> find(std::string_view label) const;

  /// Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  void check(NodeId u) const;

  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
};

/// Ordering on external labels: non-negative integers compare numerically
/// and sort before any other label; everything else compares as strings.
bool label_less(std::string_view a, std::string_view b);

/// Connected components, each sorted by internal id, ordered by their
/// smallest member.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

/// Vertex-induced subgraph. `nodes` must be distinct; the result keeps their
/// labels and numbers them in ascending order of original id.
Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

/// Induced subgraph on the largest component. Among equal-size components
/// the one holding the smallest external label (per label_less) wins.
/// Throws PreconditionError on an empty graph.
Graph largest_connected_component(const Graph& g);

}  // namespace pseudocore
