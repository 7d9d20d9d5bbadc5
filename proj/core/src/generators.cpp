#include "pseudocore/generators.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>
#include <vector>

#include "pseudocore/decomposition.hpp"
#include "pseudocore/errors.hpp"
#include "pseudocore/rng.hpp"

namespace pseudocore {
namespace {

// Appends a pendant tree of the given depth/branching below `anchor`.
void attach_tree(std::vector<Edge>& edges, std::size_t& next_id, NodeId anchor,
                 std::size_t depth, std::size_t branching) {
  std::vector<NodeId> level{anchor};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<NodeId> children;
    const std::size_t fanout = d == 0 ? 1 : branching;
    for (NodeId parent : level) {
      for (std::size_t c = 0; c < fanout; ++c) {
        const auto child = static_cast<NodeId>(next_id++);
        edges.push_back({parent, child});
        children.push_back(child);
      }
    }
    level = std::move(children);
  }
}

std::size_t tree_size(std::size_t depth, std::size_t branching) {
  std::size_t total = 0;
  std::size_t width = 1;
  for (std::size_t d = 0; d < depth; ++d) {
    total += width;
    width *= branching;
  }
  return total;
}

}  // namespace

Graph generate_barabasi_albert(const BarabasiAlbertParams& params, std::uint64_t seed) {
  const std::size_t m = params.attachments;
  if (m == 0) throw PreconditionError("BA: attachments must be positive");
  if (params.n <= m) throw PreconditionError("BA: n must exceed attachments");

  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<NodeId> endpoints;  // node u appears degree(u) times
  for (NodeId u = 0; u <= m; ++u) {
    for (NodeId v = u + 1; v <= m; ++v) {
      edges.push_back({u, v});
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<NodeId> chosen;
  for (auto u = static_cast<NodeId>(m + 1); u < params.n; ++u) {
    chosen.clear();
    while (chosen.size() < m) {
      const NodeId v = endpoints[rng.uniform_index(endpoints.size())];
      if (std::find(chosen.begin(), chosen.end(), v) == chosen.end()) chosen.push_back(v);
    }
    for (NodeId v : chosen) {
      edges.push_back({u, v});
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  return Graph::with_integer_labels(params.n, edges);
}

Graph generate_erdos_renyi(const ErdosRenyiParams& params, std::uint64_t seed) {
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw PreconditionError("ER: p must lie in [0, 1]");
  std::vector<Edge> edges;
  const auto n = static_cast<long long>(params.n);
  if (params.p >= 1.0) {
    for (NodeId u = 0; u < params.n; ++u) {
      for (NodeId v = u + 1; v < params.n; ++v) edges.push_back({u, v});
    }
  } else if (params.p > 0.0) {
    // Geometric skipping over the lower triangle (Batagelj & Brandes).
    Rng rng(seed);
    const double log_q = std::log1p(-params.p);
    long long v = 1;
    long long w = -1;
    while (v < n) {
      const double r = rng.uniform01();
      w += 1 + static_cast<long long>(std::floor(std::log1p(-r) / log_q));
      while (w >= v && v < n) {
        w -= v;
        ++v;
      }
      if (v < n) edges.push_back({static_cast<NodeId>(v), static_cast<NodeId>(w)});
    }
  }
  return Graph::with_integer_labels(params.n, edges);
}

Graph generate_planted_core(const PlantedCoreParams& params, std::uint64_t seed) {
  const std::size_t c = params.core_size;
  if (c < 2) throw PreconditionError("planted: core_size must be at least 2");
  if (!(params.core_density > 0.0 && params.core_density <= 1.0)) {
    throw PreconditionError("planted: core_density must lie in (0, 1]");
  }
  if (params.tree_count > 0 && (params.tree_depth == 0 || params.tree_branching == 0)) {
    throw PreconditionError("planted: trees need positive depth and branching");
  }
  if (params.mid_size == 0 && (params.mid_core_links > 0 || params.mid_tree_count > 0)) {
    throw PreconditionError("planted: middle-block options need mid_size > 0");
  }
  if (params.mid_size > 0 && params.mid_core_links > c) {
    throw PreconditionError("planted: mid_core_links exceeds core_size");
  }
  if (params.mid_size > 1 &&
      !(params.mid_degree >= 0.0 && params.mid_degree <= static_cast<double>(params.mid_size - 1))) {
    throw PreconditionError("planted: mid_degree must lie in [0, mid_size - 1]");
  }

  Rng rng(seed);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < c; ++u) {
    for (NodeId v = u + 1; v < c; ++v) {
      if (params.core_density >= 1.0 || rng.bernoulli(params.core_density)) edges.push_back({u, v});
    }
  }

  const std::size_t mid_begin = c;
  const std::size_t mid_end = c + params.mid_size;
  if (params.mid_size > 1) {
    const double p = params.mid_degree / static_cast<double>(params.mid_size - 1);
    for (std::size_t u = mid_begin; u < mid_end; ++u) {
      for (std::size_t v = u + 1; v < mid_end; ++v) {
        if (rng.bernoulli(p)) edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
      }
    }
  }
  std::vector<NodeId> picked;
  for (std::size_t u = mid_begin; u < mid_end; ++u) {
    picked.clear();
    while (picked.size() < params.mid_core_links) {
      const auto v = static_cast<NodeId>(rng.uniform_index(c));
      if (std::find(picked.begin(), picked.end(), v) == picked.end()) picked.push_back(v);
    }
    for (NodeId v : picked) edges.push_back({static_cast<NodeId>(u), v});
  }

  std::size_t next_id = mid_end;
  for (std::size_t t = 0; t < params.tree_count; ++t) {
    const auto anchor = static_cast<NodeId>(rng.uniform_index(c));
    attach_tree(edges, next_id, anchor, params.tree_depth, params.tree_branching);
  }
  for (std::size_t t = 0; t < params.mid_tree_count; ++t) {
    const auto anchor = static_cast<NodeId>(mid_begin + rng.uniform_index(params.mid_size));
    attach_tree(edges, next_id, anchor, params.tree_depth, params.tree_branching);
  }
  const std::size_t n =
      mid_end + (params.tree_count + params.mid_tree_count) *
                    tree_size(params.tree_depth, params.tree_branching);

  Graph g = Graph::with_integer_labels(n, edges);
  const ShellAssignment shells = k_shell_decompose(g);
  const auto core_nodes = shells.nodes_in(shells.core_index());
  bool planted = core_nodes.size() == c;
  for (NodeId u : core_nodes) planted = planted && u < c;
  if (!planted) {
    throw PreconditionError("planted: parameters do not leave the core alone in the top shell");
  }
  return g;
}

Graph generate_graph(const GraphSpec& spec, std::uint64_t seed) {
  return std::visit(
      [&](const auto& params) -> Graph {
        using T = std::decay_t<decltype(params)>;
        if constexpr (std::is_same_v<T, BarabasiAlbertParams>) {
          return generate_barabasi_albert(params, seed);
        } else if constexpr (std::is_same_v<T, ErdosRenyiParams>) {
          return generate_erdos_renyi(params, seed);
        } else {
          return generate_planted_core(params, seed);
        }
      },
      spec);
}

}  // namespace pseudocore
