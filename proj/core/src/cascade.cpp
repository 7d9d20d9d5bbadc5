#include "pseudocore/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "pseudocore/errors.hpp"
#include "pseudocore/format.hpp"
#include "pseudocore/parallel.hpp"

namespace pseudocore {
namespace {

void validate(const CascadeConfig& cfg) {
  if (!(cfg.p_infect >= 0.0 && cfg.p_infect <= 1.0)) {
    throw PreconditionError("p_infect must lie in [0, 1]");
  }
}

CascadeStats summarize(std::span<const std::size_t> counts) {
  CascadeStats stats;
  stats.samples = counts.size();
  if (counts.empty()) return stats;
  double sum = 0.0;
  for (std::size_t c : counts) sum += static_cast<double>(c);
  stats.mean = sum / static_cast<double>(counts.size());
  if (counts.size() > 1) {
    double squares = 0.0;
    for (std::size_t c : counts) {
      const double d = static_cast<double>(c) - stats.mean;
      squares += d * d;
    }
    stats.std = std::sqrt(squares / static_cast<double>(counts.size() - 1));
  }
  return stats;
}

}  // namespace

CascadeResult run_independent_cascade(const Graph& g, std::span<const NodeId> seeds,
                                      const CascadeConfig& cfg, Rng& rng) {
  validate(cfg);
  if (seeds.empty()) throw PreconditionError("cascade needs at least one seed");

  std::vector<char> infected(g.num_nodes(), 0);
  std::vector<NodeId> frontier;
  std::vector<NodeId> all;
  for (NodeId s : seeds) {
    if (!g.contains(s)) throw PreconditionError("unknown seed node " + std::to_string(s));
    if (!infected[s]) {
      infected[s] = 1;
      frontier.push_back(s);
    }
  }
  all = frontier;

  CascadeResult result;
  std::vector<NodeId> next;
  while (!frontier.empty()) {
    if (cfg.max_iterations && result.iterations >= *cfg.max_iterations) break;
    ++result.iterations;
    next.clear();
    for (NodeId u : frontier) {
      for (NodeId v : g.neighbors(u)) {
        if (infected[v]) continue;
        if (rng.bernoulli(cfg.p_infect)) {
          infected[v] = 1;
          next.push_back(v);
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier.swap(next);
  }

  result.infected_count = all.size();
  if (cfg.record_infected_set) {
    std::sort(all.begin(), all.end());
    result.infected_set = std::move(all);
  }
  return result;
}

CascadeResult run_independent_cascade(const Graph& g, std::span<const NodeId> seeds,
                                      const CascadeConfig& cfg) {
  Rng rng(cfg.seed);
  return run_independent_cascade(g, seeds, cfg, rng);
}

std::optional<CascadeStats> cascading_power(const Graph& g, const ShellAssignment& assignment,
                                            ShellIndex shell, std::size_t samples,
                                            const CascadeConfig& cfg, unsigned threads) {
  validate(cfg);
  if (samples == 0) throw PreconditionError("cascading_power needs at least one sample");
  if (assignment.num_nodes() != g.num_nodes()) {
    throw PreconditionError("shell assignment does not match graph");
  }
  const auto members = assignment.nodes_in(shell);
  if (members.empty()) return std::nullopt;

  CascadeConfig single = cfg;
  single.record_infected_set = false;
  std::vector<std::size_t> counts(samples, 0);
  parallel_for(samples, threads, [&](std::size_t i) {
    Rng rng(derive_seed(cfg.seed, SeedStream::Cascade, i));
    const NodeId seed = members[rng.uniform_index(members.size())];
    counts[i] = run_independent_cascade(g, std::span(&seed, 1), single, rng).infected_count;
  });
  return summarize(counts);
}

std::vector<ShellCascade> cascading_power_by_shell(const Graph& g,
                                                   const ShellAssignment& assignment,
                                                   std::size_t samples, const CascadeConfig& cfg,
                                                   unsigned threads) {
  std::vector<ShellCascade> rows;
  for (ShellIndex s = 0; s <= assignment.core_index(); ++s) {
    const auto stats = cascading_power(g, assignment, s, samples, cfg, threads);
    if (stats) rows.push_back({s, assignment.nodes_in(s).size(), *stats});
  }
  return rows;
}

void write_cascade_csv(std::span<const ShellCascade> rows, double p_infect, std::ostream& out) {
  out << "shell_index,n_nodes,mean,std,samples,p_infect\n";
  for (const auto& row : rows) {
    out << row.shell << ',' << row.nodes << ',' << format_fixed(row.stats.mean) << ','
        << format_fixed(row.stats.std) << ',' << row.stats.samples << ','
        << format_real(p_infect) << '\n';
  }
}

}  // namespace pseudocore
