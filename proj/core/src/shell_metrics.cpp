#include "pseudocore/shell_metrics.hpp"

#include <algorithm>
#include <ostream>

#include "pseudocore/errors.hpp"
#include "pseudocore/format.hpp"

namespace pseudocore {
namespace {

void require_match(const Graph& g, const ShellAssignment& assignment) {
  if (g.num_nodes() != assignment.num_nodes()) {
    throw PreconditionError("shell assignment does not match graph");
  }
}

void require_nonempty(const ShellAssignment& assignment, ShellIndex shell) {
  if (assignment.nodes_in(shell).empty()) {
    throw PreconditionError("shell " + std::to_string(shell) + " is empty");
  }
}

}  // namespace

std::vector<std::pair<ShellIndex, std::size_t>> shell_node_distribution(
    const ShellAssignment& assignment) {
  std::vector<std::pair<ShellIndex, std::size_t>> out;
  for (ShellIndex s = 0; s <= assignment.core_index(); ++s) {
    const std::size_t count = assignment.nodes_in(s).size();
    if (count > 0) out.emplace_back(s, count);
  }
  return out;
}

std::size_t intra_shell_edge_count(const Graph& g, const ShellAssignment& assignment,
                                   ShellIndex shell) {
  require_match(g, assignment);
  std::size_t edges = 0;
  for (NodeId u : assignment.nodes_in(shell)) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v && assignment.shell(v) == shell) ++edges;
    }
  }
  return edges;
}

double shell_density(const Graph& g, const ShellAssignment& assignment, ShellIndex shell) {
  require_match(g, assignment);
  require_nonempty(assignment, shell);
  const auto k = static_cast<double>(assignment.nodes_in(shell).size());
  if (k < 2) return 0.0;
  return static_cast<double>(intra_shell_edge_count(g, assignment, shell)) / (k * (k - 1) / 2.0);
}

TeleportationEdgeSet::TeleportationEdgeSet(const Graph& g, const ShellAssignment& assignment) {
  require_match(g, assignment);
  by_shell_.resize(static_cast<std::size_t>(std::max(assignment.core_index() + 1, 0)));
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    const ShellIndex su = assignment.shell(u);
    for (NodeId v : g.neighbors(u)) {
      const ShellIndex sv = assignment.shell(v);
      if (sv > su) by_shell_[static_cast<std::size_t>(su)].push_back({u, v, sv - su});
    }
  }
}

std::span<const TeleportationEdge> TeleportationEdgeSet::outgoing(ShellIndex shell) const {
  if (shell < 0 || static_cast<std::size_t>(shell) >= by_shell_.size()) return {};
  return by_shell_[static_cast<std::size_t>(shell)];
}

long long TeleportationEdgeSet::height_sum(ShellIndex shell) const {
  long long sum = 0;
  for (const auto& e : outgoing(shell)) sum += e.height;
  return sum;
}

std::size_t TeleportationEdgeSet::total() const noexcept {
  std::size_t total = 0;
  for (const auto& edges : by_shell_) total += edges.size();
  return total;
}

std::optional<double> leakage_power(const TeleportationEdgeSet& edges,
                                    const ShellAssignment& assignment, ShellIndex shell,
                                    double kappa) {
  require_nonempty(assignment, shell);
  const auto m = static_cast<double>(assignment.nodes_in(shell).size());
  const auto n = static_cast<double>(assignment.num_nodes());
  if (m >= n) return std::nullopt;
  const auto t = static_cast<double>(edges.count(shell));
  const auto heights = static_cast<double>(edges.height_sum(shell));
  return kappa * t * heights / (m * (n - m));
}

std::optional<double> leakage_power(const Graph& g, const ShellAssignment& assignment,
                                    ShellIndex shell, double kappa) {
  return leakage_power(TeleportationEdgeSet(g, assignment), assignment, shell, kappa);
}

const ShellRecord* ShellProfile::find(ShellIndex shell) const {
  const auto it = std::find_if(shells.begin(), shells.end(),
                               [&](const ShellRecord& r) { return r.shell == shell; });
  return it == shells.end() ? nullptr : &*it;
}

ShellProfile build_shell_profile(const Graph& g, const ShellAssignment& assignment,
                                 const ProfileOptions& opts) {
  require_match(g, assignment);
  ShellProfile profile;
  profile.n = g.num_nodes();
  profile.m = g.num_edges();
  profile.core_index = assignment.core_index();
  profile.theta = opts.theta;
  profile.kappa = opts.kappa;
  profile.p_infect = opts.with_cascade ? opts.cascade.p_infect : 0.0;
  profile.samples = opts.with_cascade ? opts.samples : 0;

  const TeleportationEdgeSet teleports(g, assignment);
  for (const auto& [shell, count] : shell_node_distribution(assignment)) {
    ShellRecord record;
    record.shell = shell;
    record.node_count = count;
    record.intra_edge_count = intra_shell_edge_count(g, assignment, shell);
    record.density = shell_density(g, assignment, shell);
    record.leakage_power = leakage_power(teleports, assignment, shell, opts.kappa);
    if (opts.with_cascade) {
      record.cascade =
          cascading_power(g, assignment, shell, opts.samples, opts.cascade, opts.threads);
    }
    profile.shells.push_back(record);
  }
  if (opts.with_cascade && !profile.shells.empty()) {
    profile.pseudo_core_indices = detect_pseudo_cores(profile, opts.theta);
  }
  return profile;
}

std::vector<ShellIndex> detect_pseudo_cores(const ShellProfile& profile, double theta) {
  if (!(theta > 0.0 && theta <= 1.0)) throw PreconditionError("theta must lie in (0, 1]");
  for (const auto& record : profile.shells) {
    if (!record.cascade) {
      throw PreconditionError("shell " + std::to_string(record.shell) +
                              " has no cascade statistics");
    }
  }
  const ShellRecord* core = profile.find(profile.core_index);
  if (core == nullptr) throw PreconditionError("profile has no core shell record");

  const double threshold = theta * core->cascade->mean;
  std::vector<ShellIndex> pseudo;
  for (const auto& record : profile.shells) {
    if (record.shell != profile.core_index && record.cascade->mean >= threshold) {
      pseudo.push_back(record.shell);
    }
  }
  return pseudo;
}

void write_profile_csv(const ShellProfile& profile, std::ostream& out) {
  out << "shell_index,node_count,intra_edge_count,density,cascade_mean,cascade_std,"
         "cascade_samples,leakage_power,pseudo_core\n";
  for (const auto& r : profile.shells) {
    const bool pseudo = std::find(profile.pseudo_core_indices.begin(),
                                  profile.pseudo_core_indices.end(),
                                  r.shell) != profile.pseudo_core_indices.end();
    out << r.shell << ',' << r.node_count << ',' << r.intra_edge_count << ','
        << format_fixed(r.density, 9) << ',';
    if (r.cascade) {
      out << format_fixed(r.cascade->mean) << ',' << format_fixed(r.cascade->std) << ','
          << r.cascade->samples;
    } else {
      out << ",,";
    }
    out << ',';
    if (r.leakage_power) out << format_fixed(*r.leakage_power, 9);
    out << ',' << (pseudo ? 1 : 0) << '\n';
  }
}

nlohmann::json profile_json(const ShellProfile& profile) {
  nlohmann::json shells = nlohmann::json::array();
  for (const auto& r : profile.shells) {
    nlohmann::json row = {
        {"shell_index", r.shell},
        {"node_count", r.node_count},
        {"intra_edge_count", r.intra_edge_count},
        {"density", r.density},
        {"leakage_power", r.leakage_power ? nlohmann::json(*r.leakage_power) : nlohmann::json()},
    };
    if (r.cascade) {
      row["cascade_mean"] = r.cascade->mean;
      row["cascade_std"] = r.cascade->std;
      row["cascade_samples"] = r.cascade->samples;
    }
    shells.push_back(std::move(row));
  }
  return {
      {"n", profile.n},
      {"m", profile.m},
      {"core_index", profile.core_index},
      {"pseudo_core_indices", profile.pseudo_core_indices},
      {"theta", profile.theta},
      {"kappa", profile.kappa},
      {"p_infect", profile.p_infect},
      {"samples", profile.samples},
      {"shells", std::move(shells)},
  };
}

}  // namespace pseudocore
