#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "datasets.hpp"
#include "fixtures.hpp"
#include "report.hpp"

namespace hkcore::cli {

enum class Code {
  usage = 1,
  io = 2,
  parse = 3,
  domain = 4,
  stuck = 5,
  proposition = 6,
  invariant = 7,
  dataset = 8,
};

struct RunConfig {
  std::string subcommand;
  std::string input;
  std::string fixture;
  std::string dataset;
  std::optional<int> k;
  std::optional<int> max_dim;
  bool strict = false;
  std::string output;
  std::string log;
  unsigned threads = 1;
};

namespace detail {

struct Failure {
  Code code;
  std::string what;
};

inline void diag(std::ostream& err, Code c, const std::string& what) {
  err << "HKCORE-E" << (static_cast<int>(c) < 10 ? "0" : "") << static_cast<int>(c) << ": " << what << '\n';
}

inline void warn(std::ostream& err, const std::string& what) { err << "HKCORE-W01: " << what << '\n'; }

inline Graph load_input(const RunConfig& cfg, std::ostream& err) {
  const int sources = !cfg.input.empty() + !cfg.fixture.empty() + !cfg.dataset.empty();
  if (sources != 1) throw Failure{Code::usage, "exactly one of --input, --fixture, --dataset is required"};
  if (!cfg.fixture.empty()) return fixtures::generate(cfg.fixture);
  if (!cfg.dataset.empty()) {
    auto g = datasets::load(cfg.dataset);
    if (!g)
      throw Failure{Code::dataset, "dataset '" + cfg.dataset + "' not found; place " +
                                       std::string(datasets::entry(cfg.dataset).file) +
                                       " under $HKCORE_DATA_DIR"};
    return *g;
  }
  std::ifstream in(cfg.input);
  if (!in) throw Failure{Code::io, "cannot read " + cfg.input};
  ParseStats stats;
  Graph g = parse_edge_list(in, &stats);
  if (stats.duplicates) warn(err, cfg.input + ": ignored " + std::to_string(stats.duplicates) + " duplicate edges");
  if (stats.self_loops) warn(err, cfg.input + ": ignored " + std::to_string(stats.self_loops) + " self-loops");
  return g;
}

inline int level_or(const RunConfig& cfg, int fallback) {
  if (!cfg.k) return fallback;
  if (*cfg.k < 1) throw Failure{Code::usage, "--k must be at least 1"};
  return *cfg.k;
}

inline DecomposeOptions decompose_options(const RunConfig& cfg) {
  DecomposeOptions o;
  o.strict = cfg.strict;
  o.threads = cfg.threads;
  if (cfg.max_dim) o.k_cut = std::max(1, *cfg.max_dim);
  return o;
}

inline void line(std::ostream& out, const report::json& j) { out << j.dump() << '\n'; }

inline void run_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = load_input(cfg, err);
  const int cap = cfg.max_dim.value_or(unbounded);
  if (cap < 0) throw Failure{Code::usage, "--max-dim must be non-negative"};
  line(out, report::profile(triplet_profile(build_flag_complex(g, cap, cfg.threads))));
}

inline void run_index(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = load_input(cfg, err);
  const int level = level_or(cfg, 1);
  const int k_cut = cfg.max_dim ? std::max(1, *cfg.max_dim) : std::max(1, triplet_profile(g, cfg.threads).top_betti());
  for (const auto& [v, idx] : index_all(g, k_cut, IndexOptions{cfg.strict}, cfg.threads))
    line(out, report::node_index(idx, level));
}

inline CoreResult decompose_input(const RunConfig& cfg, const Graph& g, int depth) {
  return decompose(g, depth, decompose_options(cfg));
}

inline void run_core(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = load_input(cfg, err);
  const auto r = decompose_input(cfg, g, level_or(cfg, std::numeric_limits<int>::max()));
  for (const auto& c : r.cores) line(out, report::core_level(c));
  for (const auto& w : r.warnings) warn(err, w);
  if (!cfg.log.empty()) {
    std::ofstream log(cfg.log);
    if (!log) throw Failure{Code::io, "cannot write " + cfg.log};
    for (const auto& level : r.logs)
      for (const auto& e : level) log << format_log_line(e) << '\n';
  }
}

inline void run_shell(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = load_input(cfg, err);
  const int k = level_or(cfg, 1);
  const auto r = decompose_input(cfg, g, k + 1);
  if (static_cast<int>(r.cores.size()) <= k)
    throw Failure{Code::domain, "no H_" + std::to_string(k) + "-core: the largest nonzero Betti index is " +
                                    std::to_string(r.cores.front().profile.top_betti())};
  ShellResult shell;
  if (static_cast<int>(r.cores.size()) > k + 1) {
    shell = hk_shell(r.cores[static_cast<std::size_t>(k)].graph, r.cores[static_cast<std::size_t>(k + 1)].graph, k,
                     decompose_options(cfg));
  } else {
    shell.graph = r.cores.back().graph;
    shell.profile = r.cores.back().profile;
  }
  report::json j{{"k", k}, {"nodes", shell.graph.node_count()}, {"edges", shell.graph.edge_count()}};
  j.update(report::profile(shell.profile));
  j["members"] = shell.graph.nodes();
  if (k == 1) {
    auto cav = find_cavities(shell.graph, 1, cfg.threads);
    for (const auto& w : cav.warnings) warn(err, w);
    report::json cycles = report::json::array();
    for (const auto& c : cav.cavities) cycles.push_back(c.cycle);
    j["cycles"] = cycles;
  }
  line(out, j);
  if (!cfg.log.empty()) {
    std::ofstream log(cfg.log);
    if (!log) throw Failure{Code::io, "cannot write " + cfg.log};
    for (const auto& e : shell.log) log << format_log_line(e) << '\n';
  }
}

inline void run_cavities(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = load_input(cfg, err);
  const auto r0 = triplet_profile(g, cfg.threads);
  const int k = level_or(cfg, std::max(1, r0.top_betti()));
  const auto r = decompose_input(cfg, g, k);
  if (static_cast<int>(r.cores.size()) <= k)
    throw Failure{Code::domain, "no H_" + std::to_string(k) + "-core: the largest nonzero Betti index is " +
                                    std::to_string(r0.top_betti())};
  const auto rep = find_cavities(r.cores[static_cast<std::size_t>(k)].graph, k, cfg.threads);
  for (const auto& c : rep.cavities) line(out, report::cavity(c));
  for (const auto& w : rep.warnings) warn(err, w);
}

inline void run_rank(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = load_input(cfg, err);
  const auto r = decompose_input(cfg, g, level_or(cfg, std::numeric_limits<int>::max()));
  for (const auto& n : core_rank(r)) line(out, report::ranked(n));
}

inline void run_fixtures(const RunConfig& cfg, std::ostream& out) {
  if (cfg.fixture.empty()) {
    for (const auto& n : fixtures::names()) out << n << '\n';
    return;
  }
  write_edge_list(fixtures::generate(cfg.fixture), out);
}

}  // namespace detail

inline int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.output.empty()) {
      file.open(cfg.output);
      if (!file) throw detail::Failure{Code::io, "cannot write " + cfg.output};
      sink = &file;
    }
    if (cfg.threads == 0) throw detail::Failure{Code::usage, "--threads must be at least 1"};
    const auto& s = cfg.subcommand;
    if (s == "analyze") detail::run_analyze(cfg, *sink, err);
    else if (s == "index") detail::run_index(cfg, *sink, err);
    else if (s == "core") detail::run_core(cfg, *sink, err);
    else if (s == "shell") detail::run_shell(cfg, *sink, err);
    else if (s == "cavities") detail::run_cavities(cfg, *sink, err);
    else if (s == "rank") detail::run_rank(cfg, *sink, err);
    else if (s == "fixtures") detail::run_fixtures(cfg, *sink);
    else throw detail::Failure{Code::usage, "unknown subcommand '" + s + "'"};
    return 0;
  } catch (const detail::Failure& f) {
    detail::diag(err, f.code, f.what);
    return 1;
  } catch (const ParseError& e) {
    detail::diag(err, Code::parse, e.what());
    return 1;
  } catch (const DomainError& e) {
    detail::diag(err, Code::domain, e.what());
    return 1;
  } catch (const DiagnosticError& e) {
    Code c = Code::stuck;
    if (e.kind() == DiagnosticError::Kind::proposition_violation) c = Code::proposition;
    if (e.kind() == DiagnosticError::Kind::invariant_violation) c = Code::invariant;
    detail::diag(err, c, e.what());
    err << "residual " << report::json{{"betti", e.residual_betti()}}.dump() << '\n';
    return 2;
  }
}

/// Parses command-line arguments (argv[0] is the program name) and runs.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Clique-complex homology and H_k-core decomposition of networks", "hkcore"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool with_input) {
    if (with_input) {
      sub->add_option("--input", cfg.input, "edge-list file");
      sub->add_option("--dataset", cfg.dataset, "named dataset under $HKCORE_DATA_DIR (celegans, cat)");
    }
    sub->add_option("--fixture", cfg.fixture, "built-in network, e.g. octahedron or cycle:7");
    sub->add_option("--k", cfg.k, "level or order");
    sub->add_option("--max-dim", cfg.max_dim, "dimension cap (analyze) or Betti cutoff for node indices");
    sub->add_flag("--strict", cfg.strict, "verify every deletion against the global profile");
    sub->add_option("--output", cfg.output, "write results here instead of stdout");
    sub->add_option("--log", cfg.log, "deletion log path (core, shell)");
    sub->add_option("--threads", cfg.threads, "worker threads")->default_val(1);
  };
  const std::pair<const char*, const char*> subs[] = {
      {"analyze", "triplet profile (m, r, betti, chi)"},
      {"index", "per-node neighbor-subnetwork index"},
      {"core", "H_k-core decomposition"},
      {"shell", "H_k-shell"},
      {"cavities", "highest-order cavities of the H_k-core"},
      {"rank", "nodes ordered by core level"},
  };
  for (const auto& [name, help] : subs) common(app.add_subcommand(name, help), true);
  common(app.add_subcommand("fixtures", "list fixtures or write one as an edge list"), false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    detail::diag(err, Code::usage, e.what());
    return 1;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  return execute(cfg, out, err);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"hkcore"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hkcore::cli
