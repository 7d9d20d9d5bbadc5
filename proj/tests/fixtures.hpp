#pragma once

#include <vector>

#include "pseudocore/graph.hpp"

namespace pseudocore::testing {

inline Graph make_graph(std::size_t n, std::vector<Edge> edges) {
  return Graph::with_integer_labels(n, edges);
}

inline Graph triangle() { return make_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }

/// Star S_k: centre 0 with leaves 1..k.
inline Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (NodeId i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return make_graph(leaves + 1, edges);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) edges.push_back({i, static_cast<NodeId>((i + 1) % n)});
  return make_graph(n, edges);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return make_graph(n, edges);
}

/// K_4 on 0..3 plus pendant node 4 attached to node 0.
inline Graph k4_with_pendant() {
  return make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
}

inline Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return make_graph(n, edges);
}

}  // namespace pseudocore::testing
