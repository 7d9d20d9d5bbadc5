#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pseudocore/cascade.hpp"
#include "pseudocore/decomposition.hpp"
#include "pseudocore/errors.hpp"
#include "pseudocore/experiments.hpp"
#include "pseudocore/generators.hpp"
#include "pseudocore/graph.hpp"
#include "pseudocore/graph_io.hpp"
#include "pseudocore/pathfinding.hpp"
#include "pseudocore/shell_metrics.hpp"

namespace pseudocore::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

struct CommonFlags {
  std::string input;
  std::string output;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  bool no_lcc = false;
  bool string_labels = false;
};

struct CascadeFlags {
  double p = 0.05;
  std::size_t samples = 200;
  double theta = 0.9;
  double kappa = 1.0;
};

struct WalkFlags {
  std::string algorithm = "sh";
  std::string start;
  std::string targets = "core";
  std::size_t max_steps = 0;
};

struct ExperimentFlags {
  std::string algorithms = "rw,dhc,sh,sa";
  std::string targets = "core";
  int k_max = 15;
  bool include_adjacent = false;
  std::optional<std::size_t> sample_limit;
  std::size_t max_steps = 0;
  bool compare = false;
};

struct CascadeOnlyFlags {
  std::vector<int> shells;
  std::optional<std::size_t> max_iterations;
};

struct GenerateFlags {
  std::string kind = "ba";
  std::size_t n = 1000;
  std::size_t attachments = 3;
  double p = 0.01;
  PlantedCoreParams planted;
};

struct RerunFlags {
  std::string manifest;
  std::string output;
  std::optional<unsigned> threads;
};

/// Everything a subcommand needs besides its own flags.
struct Context {
  std::string subcommand;
  std::vector<std::string> argv;  // effective, fully explicit where it matters
  fs::path output_dir;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::ostream& out;
  json manifest;
  std::vector<std::string> outputs;
};

struct LoadedInput {
  Graph graph;
  ShellAssignment shells;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

void write_text(Context& ctx, const std::string& name,
                const std::function<void(std::ostream&)>& body) {
  const fs::path path = ctx.output_dir / name;
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + path.string() + "'");
  body(file);
  file.flush();
  if (!file) throw IoError("write failed for '" + path.string() + "'");
  ctx.outputs.push_back(name);
}

void write_json(Context& ctx, const std::string& name, const json& value) {
  write_text(ctx, name, [&](std::ostream& o) { o << value.dump(2) << '\n'; });
}

void write_manifest(Context& ctx, json parameters) {
  json manifest = ctx.manifest;
  manifest["tool"] = "pseudocore";
  manifest["version"] = kVersion;
  manifest["subcommand"] = ctx.subcommand;
  manifest["argv"] = ctx.argv;
  manifest["seed"] = ctx.seed;
  manifest["threads"] = ctx.threads;
  manifest["parameters"] = std::move(parameters);
  manifest["outputs"] = ctx.outputs;
  const fs::path path = ctx.output_dir / "manifest.json";
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + path.string() + "'");
  file << manifest.dump(2) << '\n';
}

LoadedInput load_input(const CommonFlags& common, Context& ctx) {
  if (common.input.empty()) throw UsageError("--input is required");
  IngestOptions options;
  options.numeric_labels = !common.string_labels;
  LoadedGraph loaded = load_edge_list(common.input, options);
  const auto& s = loaded.stats;
  ctx.manifest["input"] = {
      {"path", common.input},
      {"digest_fnv1a64", file_digest(common.input)},
      {"n", loaded.graph.num_nodes()},
      {"m", loaded.graph.num_edges()},
      {"self_loops_dropped", s.self_loops},
      {"duplicate_edges_collapsed", s.duplicate_edges},
      {"largest_component_only", !common.no_lcc},
  };
  Graph graph = common.no_lcc ? std::move(loaded.graph)
                              : largest_connected_component(loaded.graph);
  ctx.manifest["graph"] = {{"n", graph.num_nodes()}, {"m", graph.num_edges()}};
  ctx.out << "loaded " << common.input << ": n=" << graph.num_nodes()
          << " m=" << graph.num_edges() << " (dropped " << s.self_loops << " self-loops, "
          << s.duplicate_edges << " duplicate edges)\n";
  ShellAssignment shells = k_shell_decompose(graph);
  return {std::move(graph), std::move(shells)};
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

std::vector<Algorithm> parse_algorithms(const std::string& text) {
  std::vector<Algorithm> algorithms;
  for (const auto& name : split_list(text)) {
    const auto a = parse_algorithm(name);
    if (!a) throw UsageError("unknown algorithm '" + name + "' (expected rw, dhc, sh or sa)");
    algorithms.push_back(*a);
  }
  if (algorithms.empty()) throw UsageError("no algorithms given");
  return algorithms;
}

ProfileOptions profile_options(const CascadeFlags& flags, const Context& ctx) {
  ProfileOptions opts;
  opts.cascade.p_infect = flags.p;
  opts.cascade.seed = ctx.seed;
  opts.samples = flags.samples;
  opts.kappa = flags.kappa;
  opts.theta = flags.theta;
  opts.threads = ctx.threads;
  return opts;
}

json cascade_parameters(const CascadeFlags& flags) {
  return {{"p_infect", flags.p}, {"samples", flags.samples}, {"theta", flags.theta},
          {"kappa", flags.kappa}};
}

/// "core", "pseudo", or a comma-separated list of shell indices.
TargetSet resolve_targets(const std::string& spec, const LoadedInput& in,
                          const CascadeFlags& cascade, Context& ctx) {
  if (spec == "core") return TargetSet::core_of(in.shells);
  if (spec == "pseudo") {
    const ShellProfile profile = build_shell_profile(in.graph, in.shells,
                                                     profile_options(cascade, ctx));
    ctx.manifest["pseudo_core_indices"] = profile.pseudo_core_indices;
    if (profile.pseudo_core_indices.empty()) {
      throw PreconditionError("no pseudo-core shells detected at theta " +
                              std::to_string(cascade.theta));
    }
    return pseudo_core_targets(profile);
  }
  std::vector<ShellIndex> shells;
  for (const auto& item : split_list(spec)) {
    try {
      std::size_t used = 0;
      shells.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("invalid target shell '" + item + "'");
    }
  }
  if (shells.empty()) throw UsageError("empty target list");
  return TargetSet(std::move(shells));
}

json targets_json(const TargetSet& targets) {
  return std::vector<ShellIndex>(targets.values().begin(), targets.values().end());
}

// --- subcommands -----------------------------------------------------------

void run_decompose(const CommonFlags& common, Context& ctx) {
  const LoadedInput in = load_input(common, ctx);
  write_text(ctx, "shells.txt",
             [&](std::ostream& o) { write_shell_assignment(in.graph, in.shells, o); });
  write_json(ctx, "decomposition.json", shell_summary_json(in.graph, in.shells));
  ctx.out << "core index " << in.shells.core_index() << '\n';
  write_manifest(ctx, json::object());
}

void run_profile(const CommonFlags& common, const CascadeFlags& cascade, bool no_cascade,
                 Context& ctx) {
  const LoadedInput in = load_input(common, ctx);
  ProfileOptions opts = profile_options(cascade, ctx);
  opts.with_cascade = !no_cascade;
  const ShellProfile profile = build_shell_profile(in.graph, in.shells, opts);
  if (opts.with_cascade) ctx.manifest["pseudo_core_indices"] = profile.pseudo_core_indices;
  write_text(ctx, "profile.csv", [&](std::ostream& o) { write_profile_csv(profile, o); });
  write_json(ctx, "profile.json", profile_json(profile));
  ctx.out << "core index " << profile.core_index << ", pseudo-cores "
          << json(profile.pseudo_core_indices).dump() << '\n';
  json params = cascade_parameters(cascade);
  params["with_cascade"] = !no_cascade;
  write_manifest(ctx, std::move(params));
}

void run_cascade(const CommonFlags& common, const CascadeFlags& cascade,
                 const CascadeOnlyFlags& flags, Context& ctx) {
  const LoadedInput in = load_input(common, ctx);
  CascadeConfig cfg;
  cfg.p_infect = cascade.p;
  cfg.seed = ctx.seed;
  cfg.max_iterations = flags.max_iterations;

  std::vector<ShellCascade> rows;
  if (flags.shells.empty()) {
    rows = cascading_power_by_shell(in.graph, in.shells, cascade.samples, cfg, ctx.threads);
  } else {
    for (int s : flags.shells) {
      const auto stats = cascading_power(in.graph, in.shells, s, cascade.samples, cfg,
                                         ctx.threads);
      if (!stats) throw PreconditionError("shell " + std::to_string(s) + " is empty");
      rows.push_back({s, in.shells.nodes_in(s).size(), *stats});
    }
  }
  write_text(ctx, "cascading_power.csv",
             [&](std::ostream& o) { write_cascade_csv(rows, cascade.p, o); });
  json params = {{"p_infect", cascade.p}, {"samples", cascade.samples}, {"shells", flags.shells}};
  params["max_iterations"] = flags.max_iterations ? json(*flags.max_iterations) : json();
  write_manifest(ctx, std::move(params));
}

void run_walk_command(const CommonFlags& common, const CascadeFlags& cascade,
                      const WalkFlags& flags, Context& ctx) {
  const LoadedInput in = load_input(common, ctx);
  const auto algorithm = parse_algorithm(flags.algorithm);
  if (!algorithm) throw UsageError("unknown algorithm '" + flags.algorithm + "'");
  if (flags.start.empty()) throw UsageError("--start is required");
  const auto start = in.graph.find(flags.start);
  if (!start) throw PreconditionError("start label '" + flags.start + "' not in graph");

  WalkConfig cfg;
  cfg.algorithm = *algorithm;
  cfg.targets = resolve_targets(flags.targets, in, cascade, ctx);
  cfg.max_steps = flags.max_steps;
  cfg.seed = derive_seed(ctx.seed, SeedStream::Walk, *start);
  const WalkResult walk = run_walk(in.graph, in.shells, *start, cfg);

  write_text(ctx, "walk_trace.csv",
             [&](std::ostream& o) { write_walk_trace(in.graph, in.shells, walk, o); });
  write_json(ctx, "walk.json",
             {{"algorithm", short_name(cfg.algorithm)},
              {"start", flags.start},
              {"targets", targets_json(cfg.targets)},
              {"status", to_string(walk.status)},
              {"numsteps", walk.numsteps}});
  ctx.out << short_name(cfg.algorithm) << ": " << to_string(walk.status) << " after "
          << walk.numsteps << " steps\n";
  json params = cascade_parameters(cascade);
  params["algorithm"] = flags.algorithm;
  params["start"] = flags.start;
  params["targets"] = flags.targets;
  params["resolved_targets"] = targets_json(cfg.targets);
  params["max_steps"] = flags.max_steps;
  write_manifest(ctx, std::move(params));
}

void write_report_files(Context& ctx, const Graph& g, const CdfReport& report,
                        const std::string& prefix) {
  write_text(ctx, prefix + "cdf.csv", [&](std::ostream& o) { write_cdf_csv(report, o); });
  write_text(ctx, prefix + "cdf.dat", [&](std::ostream& o) { write_cdf_gnuplot(report, o); });
  write_text(ctx, prefix + "outcomes.csv",
             [&](std::ostream& o) { write_outcomes_csv(g, report, o); });
  write_json(ctx, prefix + "cdf.json", cdf_json(report));
}

void print_summary(std::ostream& out, const CdfReport& report) {
  out << report.instances.size() << " instances, targets " << targets_json(report.targets).dump()
      << '\n';
  for (const auto& s : report.algorithms) {
    out << "  " << short_name(s.algorithm) << ": reached " << s.reached << ", stuck " << s.stuck
        << ", step-cap " << s.step_cap << ", P(R<=" << report.k_max
        << ")=" << s.cdf_at(report.k_max) << '\n';
  }
}

int run_experiment_command(const CommonFlags& common, const CascadeFlags& cascade,
                           const ExperimentFlags& flags, Context& ctx) {
  const LoadedInput in = load_input(common, ctx);
  ExperimentConfig cfg;
  cfg.algorithms = parse_algorithms(flags.algorithms);
  cfg.exclude_adjacent = !flags.include_adjacent;
  cfg.k_max = flags.k_max;
  cfg.master_seed = ctx.seed;
  cfg.sample_limit = flags.sample_limit;
  cfg.max_steps = flags.max_steps;
  cfg.threads = ctx.threads;

  json params = cascade_parameters(cascade);
  params["algorithms"] = flags.algorithms;
  params["targets"] = flags.targets;
  params["k_max"] = flags.k_max;
  params["exclude_adjacent"] = cfg.exclude_adjacent;
  params["sample_limit"] = flags.sample_limit ? json(*flags.sample_limit) : json();
  params["max_steps"] = flags.max_steps;
  params["compare"] = flags.compare;

  if (flags.compare) {
    cfg.targets = TargetSet::core_of(in.shells);
    const ShellProfile profile =
        build_shell_profile(in.graph, in.shells, profile_options(cascade, ctx));
    ctx.manifest["pseudo_core_indices"] = profile.pseudo_core_indices;
    const TargetSet pseudo(profile.pseudo_core_indices);
    const TargetComparison comparison = compare_targets(in.graph, in.shells, cfg, pseudo);
    write_json(ctx, "comparison.json", comparison_json(comparison));
    if (comparison.applicable) {
      write_report_files(ctx, in.graph, comparison.core, "core_");
      write_report_files(ctx, in.graph, comparison.pseudo, "pseudo_");
      print_summary(ctx.out, comparison.core);
      print_summary(ctx.out, comparison.pseudo);
    } else {
      ctx.out << "comparison not applicable: " << comparison.reason << '\n';
    }
    write_manifest(ctx, std::move(params));
    return kOk;
  }

  cfg.targets = resolve_targets(flags.targets, in, cascade, ctx);
  params["resolved_targets"] = targets_json(cfg.targets);
  const CdfReport report = run_experiment(in.graph, in.shells, cfg);
  write_report_files(ctx, in.graph, report, "");
  print_summary(ctx.out, report);
  write_manifest(ctx, std::move(params));
  return kOk;
}

void run_generate(const GenerateFlags& flags, Context& ctx) {
  GraphSpec spec;
  json params = {{"kind", flags.kind}};
  if (flags.kind == "ba") {
    spec = BarabasiAlbertParams{flags.n, flags.attachments};
    params["n"] = flags.n;
    params["attachments"] = flags.attachments;
  } else if (flags.kind == "er") {
    spec = ErdosRenyiParams{flags.n, flags.p};
    params["n"] = flags.n;
    params["p"] = flags.p;
  } else if (flags.kind == "planted") {
    spec = flags.planted;
    const auto& pc = flags.planted;
    params["core_size"] = pc.core_size;
    params["core_density"] = pc.core_density;
    params["trees"] = pc.tree_count;
    params["tree_depth"] = pc.tree_depth;
    params["tree_branching"] = pc.tree_branching;
    params["mid_size"] = pc.mid_size;
    params["mid_degree"] = pc.mid_degree;
    params["mid_core_links"] = pc.mid_core_links;
    params["mid_trees"] = pc.mid_tree_count;
  } else {
    throw UsageError("unknown graph kind '" + flags.kind + "' (expected ba, er or planted)");
  }
  const Graph g = generate_graph(spec, derive_seed(ctx.seed, SeedStream::Generator, 0));
  write_text(ctx, "graph.txt", [&](std::ostream& o) { write_edge_list(g, o); });
  ctx.manifest["graph"] = {{"n", g.num_nodes()}, {"m", g.num_edges()}};
  ctx.out << "generated " << flags.kind << " graph: n=" << g.num_nodes() << " m=" << g.num_edges()
          << '\n';
  write_manifest(ctx, std::move(params));
}

// --- option plumbing -------------------------------------------------------

void add_common(CLI::App* sub, CommonFlags& common, bool needs_input) {
  auto* input = sub->add_option("-i,--input", common.input, "Edge list file");
  if (needs_input) input->required();
  sub->add_option("-o,--output", common.output,
                  std::string("Output directory (default: $") + kOutputDirEnv + " or .)");
  sub->add_option("--seed", common.seed, "Master random seed (generated when absent)");
  sub->add_option("--threads", common.threads, "Worker threads, 0 = all cores")
      ->check(CLI::NonNegativeNumber);
  sub->add_flag("--no-lcc", common.no_lcc, "Keep every component instead of the largest");
  sub->add_flag("--string-labels", common.string_labels, "Accept non-numeric node labels");
}

void add_cascade(CLI::App* sub, CascadeFlags& cascade, bool with_theta) {
  sub->add_option("--p", cascade.p, "Independent-cascade activation probability")
      ->check(CLI::Range(0.0, 1.0));
  sub->add_option("--samples", cascade.samples, "Cascades sampled per shell")
      ->check(CLI::PositiveNumber);
  if (with_theta) {
    sub->add_option("--theta", cascade.theta, "Pseudo-core threshold, ratio to core cascade")
        ->check(CLI::Range(0.0, 1.0));
    sub->add_option("--kappa", cascade.kappa, "Leakage-power scale factor");
  }
}

/// Rebuilds a canonical argument list from what was actually parsed, with
/// the seed made explicit and output/threads left to the caller.
std::vector<std::string> effective_argv(const CLI::App* sub, std::uint64_t seed) {
  std::vector<std::string> argv{sub->get_name()};
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->get_lnames().empty() || opt->count() == 0) continue;
    const std::string name = "--" + opt->get_lnames().front();
    if (name == "--help" || name == "--output" || name == "--seed" || name == "--threads") {
      continue;
    }
    argv.push_back(name);
    if (opt->get_expected_max() == 0) continue;  // flag
    const auto& results = opt->results();
    argv.insert(argv.end(), results.begin(), results.end());
  }
  argv.push_back("--seed");
  argv.push_back(std::to_string(seed));
  return argv;
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

int dispatch_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                  int depth);

int run_rerun(const RerunFlags& flags, std::ostream& out, std::ostream& err, int depth) {
  if (depth > 0) throw UsageError("a manifest cannot request another rerun");
  std::ifstream file(flags.manifest);
  if (!file) throw IoError("cannot open manifest '" + flags.manifest + "'");
  json manifest;
  try {
    manifest = json::parse(file);
  } catch (const json::exception& e) {
    throw FormatError("manifest '" + flags.manifest + "': " + e.what());
  }
  if (!manifest.contains("argv") || !manifest["argv"].is_array()) {
    throw FormatError("manifest '" + flags.manifest + "' has no argv");
  }
  std::vector<std::string> args = manifest["argv"].get<std::vector<std::string>>();
  if (manifest.contains("input") && manifest["input"].is_object()) {
    const auto& input = manifest["input"];
    const std::string path = input.at("path").get<std::string>();
    const std::string expected = input.at("digest_fnv1a64").get<std::string>();
    if (file_digest(path) != expected) {
      throw FormatError("input '" + path + "' no longer matches the manifest digest");
    }
  }
  if (!flags.output.empty()) {
    args.push_back("--output");
    args.push_back(flags.output);
  }
  const unsigned threads =
      flags.threads.value_or(manifest.value("threads", 0u));
  args.push_back("--threads");
  args.push_back(std::to_string(threads));
  return dispatch_impl(args, out, err, depth + 1);
}

int dispatch_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                  int depth) {
  CLI::App app{"Core-periphery analysis of networks: k-shells, shell profiles, cascades and "
               "periphery-to-core walks.",
               "pseudocore"};
  app.require_subcommand(1);

  CommonFlags common;
  CascadeFlags cascade;
  WalkFlags walk;
  ExperimentFlags experiment;
  CascadeOnlyFlags cascade_only;
  GenerateFlags generate;
  RerunFlags rerun;
  bool no_cascade = false;

  auto* decompose = app.add_subcommand("decompose", "k-shell decomposition");
  add_common(decompose, common, true);

  auto* profile = app.add_subcommand("profile", "Per-shell density, cascade and leakage profile");
  add_common(profile, common, true);
  add_cascade(profile, cascade, true);
  profile->add_flag("--no-cascade", no_cascade, "Skip cascade sampling and pseudo-core detection");

  auto* cascade_cmd = app.add_subcommand("cascade", "Cascading power per shell");
  add_common(cascade_cmd, common, true);
  add_cascade(cascade_cmd, cascade, false);
  cascade_cmd->add_option("--shell", cascade_only.shells, "Restrict to these shells");
  cascade_cmd->add_option("--max-iterations", cascade_only.max_iterations, "Round cap");

  auto* walk_cmd = app.add_subcommand("walk", "One periphery-to-target walk with trace");
  add_common(walk_cmd, common, true);
  add_cascade(walk_cmd, cascade, true);
  walk_cmd->add_option("--algorithm", walk.algorithm, "rw, dhc, sh or sa");
  walk_cmd->add_option("--start", walk.start, "Start node label")->required();
  walk_cmd->add_option("--targets", walk.targets, "core, pseudo, or comma-separated shells");
  walk_cmd->add_option("--max-steps", walk.max_steps, "Step cap, 0 = graph order");

  auto* experiment_cmd = app.add_subcommand("experiment", "Step-count CDF over periphery starts");
  add_common(experiment_cmd, common, true);
  add_cascade(experiment_cmd, cascade, true);
  experiment_cmd->add_option("--algorithms", experiment.algorithms, "Comma list of rw,dhc,sh,sa");
  experiment_cmd->add_option("--targets", experiment.targets,
                             "core, pseudo, or comma-separated shells");
  experiment_cmd->add_option("--kmax", experiment.k_max, "Largest k tabulated in the CDF")
      ->check(CLI::Range(2, 1 << 30));
  experiment_cmd->add_flag("--include-adjacent", experiment.include_adjacent,
                           "Keep starts that already touch a target shell");
  experiment_cmd->add_option("--sample-limit", experiment.sample_limit,
                             "Run a seeded random subset of this many instances");
  experiment_cmd->add_option("--max-steps", experiment.max_steps, "Step cap, 0 = graph order");
  experiment_cmd->add_flag("--compare", experiment.compare,
                           "Paired run: core targets against pseudo-core targets");

  auto* generate_cmd = app.add_subcommand("generate", "Write a synthetic graph as an edge list");
  add_common(generate_cmd, common, false);
  generate_cmd->add_option("--kind", generate.kind, "ba, er or planted");
  generate_cmd->add_option("--n", generate.n, "Node count (ba, er)");
  generate_cmd->add_option("--attachments", generate.attachments, "Edges per new node (ba)");
  generate_cmd->add_option("--p", generate.p, "Edge probability (er)");
  generate_cmd->add_option("--core-size", generate.planted.core_size);
  generate_cmd->add_option("--core-density", generate.planted.core_density);
  generate_cmd->add_option("--trees", generate.planted.tree_count);
  generate_cmd->add_option("--tree-depth", generate.planted.tree_depth);
  generate_cmd->add_option("--tree-branching", generate.planted.tree_branching);
  generate_cmd->add_option("--mid-size", generate.planted.mid_size);
  generate_cmd->add_option("--mid-degree", generate.planted.mid_degree);
  generate_cmd->add_option("--mid-core-links", generate.planted.mid_core_links);
  generate_cmd->add_option("--mid-trees", generate.planted.mid_tree_count);

  auto* rerun_cmd = app.add_subcommand("rerun", "Repeat a run from its manifest.json");
  rerun_cmd->add_option("--manifest", rerun.manifest, "Manifest path")->required();
  rerun_cmd->add_option("-o,--output", rerun.output, "Output directory for the repeated run");
  rerun_cmd->add_option("--threads", rerun.threads, "Override the recorded thread count");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << app.help();
    report_error(err, "usage", e.what());
    return kUsage;
  }

  try {
    if (rerun_cmd->parsed()) return run_rerun(rerun, out, err, depth);

    const CLI::App* sub = app.get_subcommands().front();
    std::string output = common.output;
    if (output.empty()) {
      const char* env = std::getenv(kOutputDirEnv);
      output = env != nullptr && *env != '\0' ? env : ".";
    }
    std::uint64_t seed = 0;
    if (common.seed) {
      seed = *common.seed;
    } else {
      std::random_device device;
      seed = (static_cast<std::uint64_t>(device()) << 32) ^ device();
      out << "generated seed " << seed << '\n';
    }

    Context ctx{sub->get_name(), effective_argv(sub, seed), output, seed, common.threads, out,
                json::object(), {}};
    std::error_code ec;
    fs::create_directories(ctx.output_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + output + "': " + ec.message());

    if (decompose->parsed()) run_decompose(common, ctx);
    if (profile->parsed()) run_profile(common, cascade, no_cascade, ctx);
    if (cascade_cmd->parsed()) run_cascade(common, cascade, cascade_only, ctx);
    if (walk_cmd->parsed()) run_walk_command(common, cascade, walk, ctx);
    if (experiment_cmd->parsed()) return run_experiment_command(common, cascade, experiment, ctx);
    if (generate_cmd->parsed()) run_generate(generate, ctx);
    return kOk;
  } catch (const EmptyInstanceSet& e) {
    report_error(err, "empty_instance_set",
                 std::string(e.what()) +
                     "; every periphery node touches the target shells or shell 1 is empty");
    return kNoInstances;
  } catch (const UsageError& e) {
    report_error(err, "usage", e.what());
    return kUsage;
  } catch (const PreconditionError& e) {
    report_error(err, "invalid_argument", e.what());
    return kUsage;
  } catch (const IoError& e) {
    report_error(err, "io", e.what());
    return kIoFailure;
  } catch (const FormatError& e) {
    report_error(err, "format", e.what());
    return kIoFailure;
  } catch (const std::exception& e) {
    report_error(err, "internal", e.what());
    return kIoFailure;
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return dispatch_impl(args, out, err, 0);
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return dispatch(args, out, err);
}

}  // namespace pseudocore::cli
