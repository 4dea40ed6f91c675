#include "sigpr/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sigpr/generators.hpp"
#include "sigpr/graph.hpp"
#include "sigpr/local_ppr.hpp"
#include "sigpr/lower_bound.hpp"
#include "sigpr/oracle.hpp"
#include "sigpr/significant.hpp"

namespace sigpr {

namespace {

struct CommonFlags {
  double alpha = 0.15;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string manifest_path;
  std::string format;  // empty: the subcommand's default
  int threads = 0;
  double const_scale = 1.0;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--alpha", f.alpha, "teleportation probability")->check(CLI::Range(1e-9, 1.0));
  cmd->add_option("--seed", f.seed, "random seed");
  cmd->add_option("--out", f.out_path, "result file (default stdout)");
  cmd->add_option("--manifest", f.manifest_path, "manifest file (default stderr)");
  cmd->add_option("--format", f.format, "output format")->check(CLI::IsMember({"tsv", "json"}));
  cmd->add_option("--threads", f.threads, "worker threads (speed only)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--const-scale", f.const_scale, "test-only scaling of sampling constants")
      ->check(CLI::PositiveNumber);
}

struct Outcome {
  std::string payload;
  nlohmann::json params;
  QueryLedger ledger;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Significant PageRank toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  CommonFlags flags;
  std::function<Outcome()> action;
  std::string subcommand;

  // gen
  std::string gen_kind;
  std::size_t gen_n = 0;
  std::size_t gen_m = 0;
  double gen_delta = 0.0;
  auto* gen = app.add_subcommand("gen", "generate a graph as an edge list");
  gen->add_option("kind", gen_kind, "path-star | self-loops | cycle | star | random")
      ->required()
      ->check(CLI::IsMember({"path-star", "self-loops", "cycle", "star", "random"}));
  gen->add_option("--n", gen_n, "node count")->required();
  gen->add_option("--delta", gen_delta, "threshold (path-star)");
  gen->add_option("--m", gen_m, "edge count (random)");
  add_common(gen, flags);
  gen->callback([&] {
    subcommand = "gen";
    action = [&] {
      std::ostringstream os;
      nlohmann::json params{{"kind", gen_kind}, {"n", gen_n}, {"seed", flags.seed}};
      if (gen_kind == "path-star") {
        const PathStar ps = gen_path_star(gen_n, gen_delta);
        const std::vector<std::string> comments{"hub=" + std::to_string(ps.spec.hub_id),
                                                "d=" + std::to_string(ps.spec.d)};
        write_edge_list(ps.graph, os, comments);
        params["delta"] = gen_delta;
      } else {
        write_edge_list(gen_named(parse_graph_kind(gen_kind), gen_n, gen_m, flags.seed), os);
        params["m"] = gen_m;
      }
      return Outcome{os.str(), params, {}};
    };
  });

  // exact
  std::string exact_graph;
  std::optional<NodeId> exact_source;
  OracleOptions oracle_opts;
  auto* exact = app.add_subcommand("exact", "exact PageRank (or a PPR row with --source)");
  exact->add_option("graph", exact_graph, "edge-list file")->required();
  exact->add_option("--source", exact_source, "compute this node's PPR row instead");
  exact->add_option("--tol", oracle_opts.tol, "l1 residual tolerance")->check(CLI::PositiveNumber);
  exact->add_option("--max-iter", oracle_opts.max_iter, "iteration limit");
  add_common(exact, flags);
  exact->callback([&] {
    subcommand = "exact";
    if (flags.format.empty()) flags.format = "tsv";
    action = [&] {
      const DirectedGraph g = load_edge_list_file(exact_graph);
      const ScoreVector s = exact_source ? exact_ppr_row(g, *exact_source, flags.alpha, oracle_opts)
                                         : exact_pagerank(g, flags.alpha, oracle_opts);
      std::ostringstream os;
      if (flags.format == "json") {
        write_scores_json(s, flags.alpha, os);
      } else {
        write_scores_tsv(s, os);
      }
      nlohmann::json params{{"graph", exact_graph},    {"alpha", flags.alpha}, {"tol", oracle_opts.tol},
                            {"max_iter", oracle_opts.max_iter}};
      if (exact_source) params["source"] = *exact_source;
      return Outcome{os.str(), params, {}};
    };
  });

  // approx-row
  std::string row_graph;
  NodeId row_source = 0;
  RowParams row_params;
  auto* row = app.add_subcommand("approx-row", "Monte-Carlo personalized PageRank row");
  row->add_option("graph", row_graph, "edge-list file")->required();
  row->add_option("--source", row_source, "source node")->required();
  row->add_option("--epsilon", row_params.epsilon, "additive error")->check(CLI::Range(1e-12, 1.0));
  row->add_option("--rho", row_params.rho, "multiplicative error")->check(CLI::Range(1e-12, 1.0));
  add_common(row, flags);
  row->callback([&] {
    subcommand = "approx-row";
    if (flags.format.empty()) flags.format = "tsv";
    action = [&] {
      const DirectedGraph g = load_edge_list_file(row_graph);
      RowParams p = row_params;
      p.alpha = flags.alpha;
      p.walks_const *= flags.const_scale;
      QueryLedger ledger;
      const PprEstimate est = approx_row(g, row_source, p, flags.seed, ledger, ExecPolicy{flags.threads});
      std::ostringstream os;
      if (flags.format == "json") {
        write_estimate_json(est, ledger, os);
      } else {
        write_estimate_tsv(est, ledger, os);
      }
      nlohmann::json params{{"graph", row_graph},   {"source", row_source},           {"epsilon", p.epsilon},
                            {"rho", p.rho},         {"alpha", p.alpha},               {"seed", flags.seed},
                            {"threads", flags.threads}, {"const_scale", flags.const_scale}};
      return Outcome{os.str(), params, ledger};
    };
  });

  // significant
  std::string sig_graph;
  double sig_delta = 0.0;
  std::string sig_mode = "sum-scale";
  auto* sig = app.add_subcommand("significant", "find all nodes with PageRank above delta");
  sig->add_option("graph", sig_graph, "edge-list file")->required();
  sig->add_option("--delta", sig_delta, "PageRank threshold")->required();
  sig->add_option("--mode", sig_mode, "score reconstruction")->check(CLI::IsMember({"sum-scale", "paper-literal"}));
  add_common(sig, flags);
  sig->callback([&] {
    subcommand = "significant";
    if (flags.format.empty()) flags.format = "json";
    action = [&] {
      const DirectedGraph g = load_edge_list_file(sig_graph);
      SignificantConfig cfg;
      cfg.reconstruction_mode =
          sig_mode == "sum-scale" ? ReconstructionMode::SumScale : ReconstructionMode::PaperLiteral;
      cfg = cfg.scaled(flags.const_scale);
      QueryLedger ledger;
      const SignificantResult r =
          significant_pageranks(g, sig_delta, flags.alpha, flags.seed, cfg, ledger, ExecPolicy{flags.threads});
      std::ostringstream os;
      if (flags.format == "json") {
        write_significant_json(r, os);
      } else {
        char buf[64];
        for (const auto& m : r.members) {
          std::snprintf(buf, sizeof buf, "%u\t%.12g\n", m.node, m.estimate);
          os << buf;
        }
        os << "# jumps=" << ledger.jumps << " crawls=" << ledger.crawls << " steps=" << ledger.walk_steps << '\n';
      }
      nlohmann::json params{{"graph", sig_graph},         {"delta", sig_delta},         {"alpha", flags.alpha},
                            {"seed", flags.seed},         {"mode", sig_mode},           {"threads", flags.threads},
                            {"const_scale", flags.const_scale}};
      return Outcome{os.str(), params, ledger};
    };
  });

  // bench-lower-bound
  std::size_t lb_n = 10000;
  double lb_delta = 50.0;
  std::size_t lb_trials = 2000;
  auto* lb = app.add_subcommand("bench-lower-bound", "jump-discovery experiment on the path-star graph");
  lb->add_option("--n", lb_n, "node count");
  lb->add_option("--delta", lb_delta, "threshold");
  lb->add_option("--trials", lb_trials, "independent trials")->check(CLI::PositiveNumber);
  add_common(lb, flags);
  lb->callback([&] {
    subcommand = "bench-lower-bound";
    action = [&] {
      const LowerBoundSummary s =
          run_lower_bound_experiment(lb_n, lb_delta, lb_trials, flags.seed, ExecPolicy{flags.threads});
      std::ostringstream os;
      write_lower_bound_json(s, os);
      QueryLedger ledger;
      for (auto q : s.queries) ledger.jumps += q;
      nlohmann::json params{{"n", lb_n},           {"delta", lb_delta},          {"trials", lb_trials},
                            {"seed", flags.seed},  {"threads", flags.threads}};
      return Outcome{os.str(), params, ledger};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage_out;
    std::ostringstream usage_err;
    const int code = app.exit(e, usage_out, usage_err);
    out << usage_out.str();
    err << usage_err.str();
    return code == 0 ? 0 : 1;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    const Outcome result = action();
    const auto wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (flags.out_path.empty()) {
      out << result.payload;
    } else {
      write_file(flags.out_path, result.payload);
    }
    const nlohmann::json manifest{{"subcommand", subcommand},
                                  {"params", result.params},
                                  {"seed", flags.seed},
                                  {"jumps", result.ledger.jumps},
                                  {"crawls", result.ledger.crawls},
                                  {"walk_steps", result.ledger.walk_steps},
                                  {"wall_ms", wall_ms},
                                  {"version", kVersion}};
    if (flags.manifest_path.empty()) {
      err << manifest.dump() << '\n';
    } else {
      write_file(flags.manifest_path, manifest.dump() + "\n");
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace sigpr
