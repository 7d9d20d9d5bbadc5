#include "pseudocore/graph_io.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "pseudocore/errors.hpp"

namespace pseudocore {
namespace {

bool is_unsigned_integer(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

LoadedGraph parse_edge_list(std::istream& in, const IngestOptions& options) {
  LoadStats stats;
  std::vector<std::pair<std::string, std::string>> raw;
  std::string line;
  while (std::getline(in, line)) {
    ++stats.lines;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      ++stats.comment_lines;
      continue;
    }
    std::istringstream fields(line);
    std::string a;
    std::string b;
    if (!(fields >> a >> b)) {
      throw FormatError("line " + std::to_string(stats.lines) + ": expected two node labels");
    }
    if (options.numeric_labels && (!is_unsigned_integer(a) || !is_unsigned_integer(b))) {
      throw FormatError("line " + std::to_string(stats.lines) + ": non-numeric node label in '" +
                        line + "'");
    }
    raw.emplace_back(std::move(a), std::move(b));
  }
  if (in.bad()) throw IoError("read error while parsing edge list");
  stats.edges_read = raw.size();

  std::vector<std::string> labels;
  labels.reserve(raw.size() * 2);
  for (const auto& [a, b] : raw) {
    labels.push_back(a);
    labels.push_back(b);
  }
  std::sort(labels.begin(), labels.end(), label_less);
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  std::unordered_map<std::string, NodeId> index;
  index.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], static_cast<NodeId>(i));

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [a, b] : raw) edges.push_back({index.at(a), index.at(b)});

  BuildStats build;
  Graph graph(std::move(labels), edges, &build);
  stats.self_loops = build.self_loops;
  stats.duplicate_edges = build.duplicate_edges;
  if (graph.num_edges() == 0) throw FormatError("edge list contains no edges after cleaning");
  return {std::move(graph), stats};
}

LoadedGraph load_edge_list(const std::filesystem::path& path, const IngestOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  try {
    return parse_edge_list(in, options);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (const Edge& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

void save_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  write_edge_list(g, out);
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

std::string file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  std::array<char, 1 << 16> buffer{};
  while (in) {
    in.read(buffer.data(), buffer.size());
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      hash ^= static_cast<unsigned char>(buffer[static_cast<std::size_t>(i)]);
      hash *= 0x100000001b3ULL;
    }
  }
  std::array<char, 17> hex{};
  std::snprintf(hex.data(), hex.size(), "%016llx", static_cast<unsigned long long>(hash));
  return hex.data();
}

}  // namespace pseudocore
