#include "mlcore/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mlcore/community.hpp"
#include "mlcore/decomposition.hpp"
#include "mlcore/densest.hpp"
#include "mlcore/errors.hpp"
#include "mlcore/graph.hpp"
#include "mlcore/innermost.hpp"
#include "mlcore/output.hpp"
#include "mlcore/quasiclique.hpp"
#include "mlcore/stats.hpp"

namespace mlcore::cli {

namespace {

struct RunConfig {
  std::string command;
  std::string input_path;
  std::string output_path;  // empty: stdout
  std::string engine = "hybrid";
  std::string dfs_order = "random";
  std::uint64_t seed = kDefaultSeed;
  double beta = 1.0;
  bool no_vertices = false;
  bool innermost_only = false;
  // quasicliques
  std::string gamma_spec;
  double min_sup = 1.0;
  std::uint32_t min_size = 2;
  std::size_t enum_cap = 30;
  bool no_prune = false;
  bool compare = false;
  // csearch
  std::string query_spec;
  std::string strategy = "hybrid";
};

std::vector<std::string> split_csv(const std::string& spec) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(spec);
  while (std::getline(in, token, ',')) {
    if (!token.empty()) out.push_back(token);
  }
  return out;
}

MultilayerGraph load_input(const RunConfig& config) {
  std::ifstream in(config.input_path);
  if (!in) throw ParseError("cannot open input file: " + config.input_path);
  return load_edge_list(in).graph;
}

CoreDecomposition run_engine(const MultilayerGraph& g, const RunConfig& config) {
  if (config.engine == "naive") return decompose_naive(g);
  if (config.engine == "bfs") return decompose_bfs(g);
  if (config.engine == "dfs") {
    DfsOptions options;
    options.seed = config.seed;
    options.order = config.dfs_order == "density" ? LayerOrder::density : LayerOrder::random;
    return decompose_dfs(g, options);
  }
  return decompose_hybrid(g);
}

std::vector<double> parse_gamma(const RunConfig& config, std::size_t layer_count) {
  std::vector<std::string> tokens = split_csv(config.gamma_spec);
  if (tokens.empty()) throw std::invalid_argument("--gamma requires at least one value");
  std::vector<double> gamma;
  for (const std::string& token : tokens) {
    try {
      gamma.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw std::invalid_argument("--gamma value `" + token + "` is not a number");
    }
  }
  if (gamma.size() == 1) gamma.assign(layer_count, gamma[0]);
  if (gamma.size() != layer_count) {
    throw std::invalid_argument("--gamma needs one value or one per layer (" +
                                std::to_string(layer_count) + ")");
  }
  return gamma;
}

VertexSet parse_query(const MultilayerGraph& g, const std::string& spec) {
  std::vector<vertex_t> vertices;
  for (const std::string& label : split_csv(spec)) {
    auto v = g.find_vertex(label);
    if (!v.has_value()) throw std::invalid_argument("unknown vertex label `" + label + "`");
    vertices.push_back(*v);
  }
  if (vertices.empty()) throw std::invalid_argument("--query requires at least one label");
  return VertexSet(std::move(vertices));
}

void execute(const RunConfig& config, std::ostream& out) {
  MultilayerGraph g = load_input(config);
  OutputOptions output_options{!config.no_vertices};

  if (config.command == "decompose") {
    write_decomposition_jsonl(out, g, run_engine(g, config), output_options);
  } else if (config.command == "innermost") {
    write_innermost_jsonl(out, g, innermost_cores(g), output_options);
  } else if (config.command == "densest") {
    DensestMode mode = config.innermost_only ? DensestMode::innermost_only
                                             : DensestMode::full_decomposition;
    out << densest_to_json(g, densest_subgraph(g, config.beta, mode)).dump() << '\n';
  } else if (config.command == "quasicliques") {
    MiningParams params;
    params.gamma = parse_gamma(config, g.layer_count());
    params.min_sup = config.min_sup;
    params.min_size = config.min_size;
    params.enum_cap = config.enum_cap;

    using clock = std::chrono::steady_clock;
    nlohmann::ordered_json report;
    if (config.no_prune || config.compare) {
      auto started = clock::now();
      QuasiCliqueSet baseline = mine_fcgqc(g, g.all_vertices(), params);
      double ms = std::chrono::duration<double, std::milli>(clock::now() - started).count();
      report = quasicliques_to_json(g, baseline);
      if (config.compare) report["unpruned_ms"] = ms;
    }
    if (!config.no_prune) {
      auto started = clock::now();
      PrunedMiningResult pruned = mine_fcgqc_pruned(g, params);
      double ms = std::chrono::duration<double, std::milli>(clock::now() - started).count();
      nlohmann::ordered_json pruned_report = quasicliques_to_json(g, pruned.cliques);
      pruned_report["pruned_vertex_count"] = pruned.pruned_vertex_count;
      if (config.compare) {
        pruned_report["pruned_ms"] = ms;
        pruned_report["unpruned_ms"] = report["unpruned_ms"];
      }
      report = std::move(pruned_report);
    }
    out << report.dump() << '\n';
  } else if (config.command == "csearch") {
    CommunityQuery query;
    query.query_vertices = parse_query(g, config.query_spec);
    query.beta = config.beta;
    query.seed = config.seed;
    if (config.strategy == "bfs") {
      query.strategy = SearchStrategy::bfs;
    } else if (config.strategy == "dfs") {
      query.strategy = SearchStrategy::dfs;
    } else {
      query.strategy = SearchStrategy::hybrid;
    }
    out << community_to_json(g, community_search(g, query)).dump() << '\n';
  } else if (config.command == "stats") {
    out << level_stats_to_json(level_stats(g, run_engine(g, config))).dump() << '\n';
  }
}

int dispatch(const RunConfig& config) {
  try {
    if (config.output_path.empty()) {
      execute(config, std::cout);
      std::cout.flush();
      if (!std::cout) {
        std::cerr << "error: failed writing to standard output\n";
        return 2;
      }
    } else {
      std::ofstream out(config.output_path);
      if (!out) {
        std::cerr << "error: cannot open output file: " << config.output_path << '\n';
        return 2;
      }
      execute(config, out);
      out.flush();
      if (!out) {
        std::cerr << "error: failed writing to " << config.output_path << '\n';
        return 2;
      }
    }
  } catch (const RefusalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\nrun `mlcores --help` for usage\n";
    return 1;
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  RunConfig config;
  CLI::App app{"multilayer core decomposition toolkit"};
  app.require_subcommand(1);

  auto add_common = [&config](CLI::App* cmd) {
    cmd->add_option("--input", config.input_path, "edge-list input file")->required();
    cmd->add_option("--output", config.output_path, "output file (default: stdout)");
    cmd->add_option("--seed", config.seed, "seed for randomized layer orders");
  };

  CLI::App* decompose = app.add_subcommand("decompose", "complete multilayer core decomposition");
  add_common(decompose);
  decompose->add_option("--engine", config.engine, "naive|bfs|dfs|hybrid")
      ->check(CLI::IsMember({"naive", "bfs", "dfs", "hybrid"}));
  decompose->add_option("--dfs-order", config.dfs_order, "random|density layer order for dfs")
      ->check(CLI::IsMember({"random", "density"}));
  decompose->add_flag("--no-vertices", config.no_vertices, "omit vertex lists from records");

  CLI::App* innermost = app.add_subcommand("innermost", "inner-most cores only");
  add_common(innermost);
  innermost->add_flag("--no-vertices", config.no_vertices, "omit vertex lists from records");

  CLI::App* densest = app.add_subcommand("densest", "core-based densest subgraph");
  add_common(densest);
  densest->add_option("--beta", config.beta, "layer-count exponent (> 0)");
  densest->add_flag("--innermost-only", config.innermost_only,
                    "search inner-most cores instead of the full decomposition");

  CLI::App* quasicliques =
      app.add_subcommand("quasicliques", "frequent cross-graph quasi-clique mining");
  add_common(quasicliques);
  quasicliques->add_option("--gamma", config.gamma_spec, "threshold, single value or per-layer csv")
      ->required();
  quasicliques->add_option("--min-sup", config.min_sup, "fraction of layers in (0,1]");
  quasicliques->add_option("--min-size", config.min_size, "minimum subgraph size (>= 2)");
  quasicliques->add_option("--enum-cap", config.enum_cap, "refuse enumeration above this size");
  quasicliques->add_flag("--no-prune", config.no_prune, "mine the full graph (baseline)");
  quasicliques->add_flag("--compare", config.compare, "run both and report timings");

  CLI::App* csearch = app.add_subcommand("csearch", "multilayer community search");
  add_common(csearch);
  csearch->add_option("--query", config.query_spec, "comma-separated query vertex labels")
      ->required();
  csearch->add_option("--beta", config.beta, "layer-count exponent (> 0)");
  csearch->add_option("--strategy", config.strategy, "bfs|dfs|hybrid")
      ->check(CLI::IsMember({"bfs", "dfs", "hybrid"}));

  CLI::App* stats = app.add_subcommand("stats", "per-level lattice statistics");
  add_common(stats);
  stats->add_option("--engine", config.engine, "naive|bfs|dfs|hybrid")
      ->check(CLI::IsMember({"naive", "bfs", "dfs", "hybrid"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n' << app.help() << '\n';
    return 1;
  }

  config.command = app.get_subcommands().front()->get_name();
  return dispatch(config);
}

}  // namespace mlcore::cli
