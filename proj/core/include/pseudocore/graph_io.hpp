#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "pseudocore/graph.hpp"

namespace pseudocore {

struct IngestOptions {
  /// Reject labels that are not non-negative integers (SNAP convention).
  bool numeric_labels = true;
};

struct LoadStats {
  std::size_t lines = 0;
  std::size_t comment_lines = 0;
  std::size_t edges_read = 0;
  std::size_t self_loops = 0;
  std::size_t duplicate_edges = 0;
};

struct LoadedGraph {
  Graph graph;
  LoadStats stats;
};

/// Parses a whitespace-separated edge list. Lines starting with '#' and blank
/// lines are skipped; columns after the second are ignored. Directed input is
/// symmetrized. Internal ids follow label_less order.
///
/// Throws FormatError on malformed lines or when no edge survives cleaning.
LoadedGraph parse_edge_list(std::istream& in, const IngestOptions& options = {});

/// parse_edge_list on a file; throws IoError when it cannot be read.
LoadedGraph load_edge_list(const std::filesystem::path& path,
                           const IngestOptions& options = {});

/// Canonical form: one "label_u label_v" line per edge with u < v by
/// internal id, in sorted order.
void write_edge_list(const Graph& g, std::ostream& out);
void save_edge_list(const Graph& g, const std::filesystem::path& path);

/// 64-bit FNV-1a digest of a file's bytes, as 16 hex digits.
std::string file_digest(const std::filesystem::path& path);

}  // namespace pseudocore
