#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>

#include "pseudocore/graph.hpp"

namespace pseudocore {

/// Preferential attachment grown from a clique on attachments + 1 nodes;
/// every later node links to `attachments` distinct existing nodes.
struct BarabasiAlbertParams {
  std::size_t n = 1000;
  std::size_t attachments = 3;
};

/// G(n, p).
struct ErdosRenyiParams {
  std::size_t n = 100;
  double p = 0.05;
};

/// Core-periphery benchmark.
///
/// A core of `core_size` nodes with edge probability `core_density` (1 gives
/// a clique). `tree_count` pendant trees of depth `tree_depth` and branching
/// `tree_branching` hang off random core nodes. Optionally, a middle block of
/// `mid_size` nodes with expected internal degree `mid_degree`, where every
/// block node links to `mid_core_links` random core nodes and `mid_tree_count`
/// further pendant trees hang off random block nodes.
///
/// Node ids: core first, then the middle block, then tree nodes.
struct PlantedCoreParams {
  std::size_t core_size = 20;
  double core_density = 1.0;
  std::size_t tree_count = 200;
  std::size_t tree_depth = 1;
  std::size_t tree_branching = 1;
  std::size_t mid_size = 0;
  double mid_degree = 0.0;
  std::size_t mid_core_links = 0;
  std::size_t mid_tree_count = 0;
};

using GraphSpec = std::variant<BarabasiAlbertParams, ErdosRenyiParams, PlantedCoreParams>;

/// Seeded and reproducible. Throws PreconditionError for infeasible
/// parameters, including planted graphs whose core nodes would not all land
/// in the maximum shell.
Graph generate_graph(const GraphSpec& spec, std::uint64_t seed);

Graph generate_barabasi_albert(const BarabasiAlbertParams& params, std::uint64_t seed);
Graph generate_erdos_renyi(const ErdosRenyiParams& params, std::uint64_t seed);
Graph generate_planted_core(const PlantedCoreParams& params, std::uint64_t seed);

}  // namespace pseudocore
