#include "spreadbound/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "spreadbound/bigraph.hpp"
#include "spreadbound/coherent.hpp"
#include "spreadbound/json_io.hpp"
#include "spreadbound/sampler.hpp"
#include "spreadbound/verifier.hpp"

namespace spreadbound::cli {
namespace {

struct Settings {
  unsigned threads = 0;
  int n = 0;
  int k = 0;
  double delta = 0;
  std::uint64_t seed = 0;
  double budget_constant = kDefaultBudgetConstant;
  int attempt_cap = kDefaultAttemptCap;
  std::vector<int> alpha;
  std::vector<int> beta;
  std::vector<int> n_list;
  std::vector<std::uint64_t> seeds;
  std::string model_path;
  std::string out_path;
  std::optional<double> sample_delta;
};

// Writes to the --out file when given, otherwise to the default stream.
void emit(const Settings& s, std::ostream& fallback, const std::function<void(std::ostream&)>& body) {
  if (s.out_path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream file(s.out_path);
  if (!file) throw ParameterError(fmt::format("cannot open '{}' for writing", s.out_path));
  body(file);
  if (!file) throw ParameterError(fmt::format("failed writing '{}'", s.out_path));
}

void emit_json(const Settings& s, std::ostream& fallback, const json& j) {
  emit(s, fallback, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
}

void require_high(int n, int k) {
  if (!in_high_regime(n, k)) {
    throw ParameterError(fmt::format("need n >= k > n/2, got n={} k={}", n, k));
  }
}

void require_delta_high(double delta) {
  if (!(delta > 0.5 && delta <= 1.0)) {
    throw ParameterError(fmt::format("delta must be in (1/2, 1], got {}", delta));
  }
}

int verify_exit(const VerificationReport& report) {
  return report.all_pass() ? kSuccess : kPropertyFailed;
}

int cmd_proofscan(const Settings& s, std::ostream& out) {
  if (s.n < 1 || s.n > 64) throw ParameterError("proofscan supports 1 <= n <= 64");
  json rows = json::array();
  bool all_equal = true;
  for (int k = s.n / 2 + 1; k <= s.n; ++k) {
    const auto best = proof_config_max(s.n, k);
    const auto bound = high_diff_bound(s.n, k);
    all_equal = all_equal && best == bound;
    rows.push_back({{"k", k}, {"bound", bound}, {"max", best}, {"pass", best == bound}});
  }
  emit_json(s, out, json{{"n", s.n}, {"rows", std::move(rows)}});
  return all_equal ? kSuccess : kPropertyFailed;
}

int cmd_witness(const Settings& s, std::ostream& out) {
  const auto n = static_cast<int>(s.alpha.size());
  if (n < 1 || s.beta.size() != s.alpha.size()) {
    throw ParameterError("--alpha and --beta must be non-empty and of equal length");
  }
  const auto dp = DegreePair::from_unsorted(n, s.alpha, s.beta);
  require_high(n, s.k);
  if (!gale_ryser_feasible(dp.alpha(), dp.beta())) {
    throw ParameterError("degree sequences are not realizable by a bipartite graph");
  }
  emit_json(s, out, witness_to_json(lemma_witness(dp, s.k)));
  return kSuccess;
}

int cmd_extremal_graph(const Settings& s, std::ostream& out) {
  auto j = graph_to_json(make_extremal(s.n, s.k));
  j["k"] = s.k;
  emit_json(s, out, j);
  return kSuccess;
}

int cmd_spread(const Settings& s, std::ostream& out) {
  const auto m = read_model_file(s.model_path);
  const double value = spread(m, s.delta);
  emit(s, out, [&](std::ostream& os) { os << fmt::format("{:.15g}\n", value); });
  return kSuccess;
}

int cmd_check_bound(const Settings& s, std::ostream& out) {
  const auto m = read_model_file(s.model_path);
  const auto check = spread_bound_check(m, s.delta);
  emit_json(s, out, json{{"spread", check.spread}, {"bound", check.bound}, {"pass", check.pass}});
  return check.pass ? kSuccess : kPropertyFailed;
}

int cmd_sample(const Settings& s, std::ostream& out) {
  const auto m = read_model_file(s.model_path);
  if (s.sample_delta) require_delta_high(*s.sample_delta);
  const auto run = sample_graph(m, s.n, s.seed, {s.attempt_cap, s.threads});
  const auto conc = concentration_report(run, m, s.budget_constant);
  auto j = sample_run_to_json(run, conc);
  if (s.sample_delta) {
    const int k = threshold_for(s.n, *s.sample_delta);
    const auto count = count_high_diff(run.degree_pair(), k);
    j["high_diff"] = {{"delta", *s.sample_delta},
                      {"k", k},
                      {"d_count", count},
                      {"bound", high_diff_bound(s.n, k)},
                      {"pass", count <= high_diff_bound(s.n, k)}};
  }
  emit_json(s, out, j);
  return kSuccess;
}

int cmd_sweep(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto m = read_model_file(s.model_path);
  const auto rows = convergence_experiment(m, s.delta, s.n_list, s.seeds,
                                           {s.budget_constant, s.attempt_cap, s.threads});
  emit(s, out, [&](std::ostream& os) { write_experiment_csv(os, rows); });
  bool failed = false;
  for (const auto& r : rows) {
    if (r.error) {
      err << fmt::format("n={} seed={}: {}\n", r.n, r.seed, *r.error);
      failed = true;
    }
  }
  return failed ? kInvalidInput : kSuccess;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bipartite degree-difference and coherent spread toolkit", "spreadbound"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Settings s;
  std::function<int()> action;
  app.add_option("--threads", s.threads, "Worker threads (0 = hardware concurrency)");

  auto add_n = [&](CLI::App* sub, const char* help = "Side size") {
    sub->add_option("--n", s.n, help)->required();
  };
  auto add_k = [&](CLI::App* sub) { sub->add_option("--k", s.k, "Degree gap threshold")->required(); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("-o,--out", s.out_path, "Output file"); };
  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", s.model_path, "Model JSON file")->required();
  };
  auto add_delta = [&](CLI::App* sub) {
    sub->add_option("--delta", s.delta, "Spread threshold")->required();
  };

  auto* verify_graphs = app.add_subcommand("verify-graphs", "Exhaustive scan of all graphs, n <= 4");
  add_n(verify_graphs);
  add_out(verify_graphs);
  verify_graphs->callback([&] {
    action = [&] {
      const auto report = verify_full(s.n, s.threads);
      emit_json(s, out, report_to_json(report));
      return verify_exit(report);
    };
  });

  auto* verify_degseq_cmd =
      app.add_subcommand("verify-degseq", "Scan of realizable degree sequence pairs, n <= 9");
  add_n(verify_degseq_cmd);
  add_out(verify_degseq_cmd);
  verify_degseq_cmd->callback([&] {
    action = [&] {
      const auto report = verify_degseq(s.n, s.threads);
      emit_json(s, out, report_to_json(report));
      return verify_exit(report);
    };
  });

  auto* proofscan = app.add_subcommand("proofscan", "Maximize the proof's pair regions for every k");
  add_n(proofscan);
  add_out(proofscan);
  proofscan->callback([&] { action = [&] { return cmd_proofscan(s, out); }; });

  auto* witness = app.add_subcommand("witness", "Smallest lemma indices s, t for a degree pair");
  witness->add_option("--alpha", s.alpha, "Degrees of U, comma separated")->required()->delimiter(',');
  witness->add_option("--beta", s.beta, "Degrees of V, comma separated")->required()->delimiter(',');
  add_k(witness);
  add_out(witness);
  witness->callback([&] { action = [&] { return cmd_witness(s, out); }; });

  auto* extremal_graph = app.add_subcommand("extremal-graph", "The k x k block graph on n + n vertices");
  add_n(extremal_graph);
  add_k(extremal_graph);
  add_out(extremal_graph);
  extremal_graph->callback([&] { action = [&] { return cmd_extremal_graph(s, out); }; });

  auto* extremal_model_cmd = app.add_subcommand("extremal-model", "Discretized extremal coherent model");
  add_n(extremal_model_cmd);
  add_k(extremal_model_cmd);
  add_out(extremal_model_cmd);
  extremal_model_cmd->callback([&] {
    action = [&] {
      emit_json(s, out, model_to_json(extremal_model(s.n, s.k)));
      return int{kSuccess};
    };
  });

  auto* spread_cmd = app.add_subcommand("spread", "P(|X - Y| >= delta) for a model");
  add_model(spread_cmd);
  add_delta(spread_cmd);
  add_out(spread_cmd);
  spread_cmd->callback([&] { action = [&] { return cmd_spread(s, out); }; });

  auto* check_bound = app.add_subcommand("check-bound", "Compare spread with 2 delta (1 - delta)");
  add_model(check_bound);
  add_delta(check_bound);
  add_out(check_bound);
  check_bound->callback([&] { action = [&] { return cmd_check_bound(s, out); }; });

  auto* coarsen_cmd = app.add_subcommand("coarsen", "Merge atoms into 1/n value bins");
  add_model(coarsen_cmd);
  add_n(coarsen_cmd, "Number of value bins");
  add_out(coarsen_cmd);
  coarsen_cmd->callback([&] {
    action = [&] {
      emit_json(s, out, model_to_json(coarsen(read_model_file(s.model_path), s.n)));
      return int{kSuccess};
    };
  });

  auto* sample = app.add_subcommand("sample", "Draw one random graph from a model");
  add_model(sample);
  add_n(sample);
  sample->add_option("--seed", s.seed, "RNG seed")->required();
  sample->add_option("--delta", s.sample_delta, "Also report D_k for k = ceil(n delta)");
  sample->add_option("--c", s.budget_constant, "Degree concentration budget constant");
  sample->add_option("--attempt-cap", s.attempt_cap, "Label resampling cap");
  add_out(sample);
  sample->callback([&] { action = [&] { return cmd_sample(s, out); }; });

  auto* sweep = app.add_subcommand("sweep", "Convergence experiment over sizes and seeds (CSV)");
  add_model(sweep);
  add_delta(sweep);
  sweep->add_option("--n-list", s.n_list, "Sample sizes, comma separated")->required()->delimiter(',');
  sweep->add_option("--seeds", s.seeds, "Seeds, comma separated")->required()->delimiter(',');
  sweep->add_option("--c", s.budget_constant, "Degree concentration budget constant");
  sweep->add_option("--attempt-cap", s.attempt_cap, "Label resampling cap");
  add_out(sweep);
  sweep->callback([&] { action = [&] { return cmd_sweep(s, out, err); }; });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    return action();
  } catch (const PropertyViolation& e) {
    err << "property violated: " << e.what() << '\n'
        << counterexample_to_json(e.counterexample()).dump() << '\n';
    return kPropertyFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace spreadbound::cli
