#include "pseudocore/graph.hpp"

#include <algorithm>
#include <queue>

#include "pseudocore/errors.hpp"

namespace pseudocore {
namespace {

bool is_unsigned_integer(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_leading_zeros(std::string_view s) {
  const auto first = s.find_first_not_of('0');
  return first == std::string_view::npos ? s.substr(s.size() - 1) : s.substr(first);
}

}  // namespace

bool label_less(std::string_view a, std::string_view b) {
  const bool a_num = is_unsigned_integer(a);
  const bool b_num = is_unsigned_integer(b);
  if (a_num != b_num) return a_num;
  if (a_num) {
    const auto sa = strip_leading_zeros(a);
    const auto sb = strip_leading_zeros(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
  }
  return a < b;
}

Graph::Graph(std::vector<std::string> labels, std::span<const Edge> edges, BuildStats* stats)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[i], static_cast<NodeId>(i)).second) {
      throw PreconditionError("duplicate node label '" + labels_[i] + "'");
    }
  }

  BuildStats local;
  std::vector<Edge> clean;
  clean.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw PreconditionError("edge endpoint out of range");
    if (e.u == e.v) {
      ++local.self_loops;
      continue;
    }
    clean.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(clean.begin(), clean.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  const auto last = std::unique(clean.begin(), clean.end(), [](const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v;
  });
  local.duplicate_edges = static_cast<std::size_t>(clean.end() - last);
  clean.erase(last, clean.end());

  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : clean) {
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + degree[i];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : clean) {
    adjacency_[cursor[e.u]++] = e.v;
    adjacency_[cursor[e.v]++] = e.u;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
  }
  if (stats != nullptr) *stats = local;
}

Graph Graph::with_integer_labels(std::size_t n, std::span<const Edge> edges, BuildStats* stats) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Graph(std::move(labels), edges, stats);
}

void Graph::check(NodeId u) const {
  if (!contains(u)) throw PreconditionError("unknown node id " + std::to_string(u));
}

std::size_t Graph::degree(NodeId u) const {
  check(u);
  return offsets_[u + 1] - offsets_[u];
}

std::span<const NodeId> Graph::neighbors(NodeId u) const {
  check(u);
  return {adjacency_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto nbrs = neighbors(u);
  check(v);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const std::string& Graph::label(NodeId u) const {
  check(u);
  return labels_[u];
}

std::optional<NodeId> Graph::find(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<NodeId>> components;
  std::queue<NodeId> frontier;
  for (NodeId root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<NodeId> members;
    seen[root] = true;
    frontier.push(root);
    while (!frontier.empty()) {
      const NodeId u = frontier.front();
      frontier.pop();
      members.push_back(u);
      for (NodeId v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          frontier.push(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }
  return components;
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  std::vector<NodeId> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError("induced_subgraph: repeated node");
  }

  constexpr auto absent = static_cast<NodeId>(-1);
  std::vector<NodeId> remap(g.num_nodes(), absent);
  std::vector<std::string> labels;
  labels.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    remap.at(sorted[i]) = static_cast<NodeId>(i);
    labels.push_back(g.label(sorted[i]));
  }
  std::vector<Edge> edges;
  for (NodeId u : sorted) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v && remap[v] != absent) edges.push_back({remap[u], remap[v]});
    }
  }
  return Graph(std::move(labels), edges);
}

Graph largest_connected_component(const Graph& g) {
  if (g.empty()) throw PreconditionError("largest_connected_component: empty graph");
  const auto components = connected_components(g);

  auto smallest_label = [&](const std::vector<NodeId>& c) -> const std::string& {
    const auto it = std::min_element(c.begin(), c.end(), [&](NodeId a, NodeId b) {
      return label_less(g.label(a), g.label(b));
    });
    return g.label(*it);
  };

  const std::vector<NodeId>* best = &components.front();
  for (const auto& c : components) {
    if (c.size() > best->size() ||
        (c.size() == best->size() && label_less(smallest_label(c), smallest_label(*best)))) {
      best = &c;
    }
  }
  if (best->size() == g.num_nodes()) return g;
  return induced_subgraph(g, *best);
}

}  // namespace pseudocore
