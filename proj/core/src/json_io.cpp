#include "spreadbound/json_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include <fmt/format.h>

namespace spreadbound {
namespace {

json edges_to_json(std::span<const Edge> edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back({e.u + 1, e.v + 1});
  return out;
}

std::vector<Edge> edges_from_json(const json& j) {
  std::vector<Edge> edges;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw ParameterError("edge must be a [i, j] pair");
    edges.push_back({pair[0].get<int>() - 1, pair[1].get<int>() - 1});
  }
  return edges;
}

std::vector<int> to_one_based(const std::vector<int>& labels) {
  std::vector<int> out(labels);
  for (auto& l : out) ++l;
  return out;
}

const char* mode_name(VerificationMode mode) {
  return mode == VerificationMode::kFullGraph ? "full-graph" : "degree-sequence";
}

}  // namespace

json model_to_json(const CoherentModel& m) {
  return json{{"p", m.p}, {"q", m.q}, {"rho", m.rho}};
}

CoherentModel model_from_json(const json& j) {
  CoherentModel m;
  try {
    if (!j.is_object()) throw ModelError({"model must be a JSON object"});
    for (const char* key : {"p", "q", "rho"}) {
      if (!j.contains(key)) throw ModelError({fmt::format("missing key \"{}\"", key)});
    }
    j.at("p").get_to(m.p);
    j.at("q").get_to(m.q);
    j.at("rho").get_to(m.rho);
  } catch (const json::exception& e) {
    throw ModelError({fmt::format("malformed model: {}", e.what())});
  }
  require_valid(m);
  return m;
}

CoherentModel read_model(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ModelError({fmt::format("model is not valid JSON: {}", e.what())});
  }
  return model_from_json(j);
}

CoherentModel read_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError({fmt::format("cannot open model file '{}'", path)});
  return read_model(in);
}

json graph_to_json(const BipartiteGraph& g) {
  return json{{"n", g.n()}, {"edges", edges_to_json(g.edges())}};
}

BipartiteGraph graph_from_json(const json& j) {
  const auto edges = edges_from_json(j.at("edges"));
  return BipartiteGraph::from_edges(j.at("n").get<int>(), edges);
}

json counterexample_to_json(const Counterexample& ex) {
  json out{{"n", ex.n}, {"k", ex.k}, {"alpha", ex.alpha}, {"beta", ex.beta}};
  if (ex.edges) out["edges"] = edges_to_json(*ex.edges);
  return out;
}

Counterexample counterexample_from_json(const json& j) {
  Counterexample ex;
  j.at("n").get_to(ex.n);
  j.at("k").get_to(ex.k);
  j.at("alpha").get_to(ex.alpha);
  j.at("beta").get_to(ex.beta);
  if (j.contains("edges")) ex.edges = edges_from_json(j.at("edges"));
  return ex;
}

json witness_to_json(const LemmaWitness& w) { return json{{"s", w.s}, {"t", w.t}}; }

json report_to_json(const VerificationReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    json row{{"k", r.k},
             {"bound", r.bound},
             {"max_count", r.max_count},
             {"extremal_count", r.extremal_count},
             {"pass", r.pass}};
    if (report.mode == VerificationMode::kFullGraph) {
      row["attaining_not_extremal"] = r.attaining_not_extremal;
      row["extremal_not_attaining"] = r.extremal_not_attaining;
    }
    rows.push_back(std::move(row));
  }
  return json{{"n", report.n},
              {"mode", mode_name(report.mode)},
              {"instances_scanned", report.instances_scanned},
              {"rows", std::move(rows)}};
}

VerificationReport report_from_json(const json& j) {
  VerificationReport report;
  j.at("n").get_to(report.n);
  const auto mode = j.at("mode").get<std::string>();
  if (mode == "full-graph") {
    report.mode = VerificationMode::kFullGraph;
  } else if (mode == "degree-sequence") {
    report.mode = VerificationMode::kDegreeSequence;
  } else {
    throw ParameterError("unknown report mode '" + mode + "'");
  }
  j.at("instances_scanned").get_to(report.instances_scanned);
  for (const auto& r : j.at("rows")) {
    VerificationRow row;
    r.at("k").get_to(row.k);
    r.at("bound").get_to(row.bound);
    r.at("max_count").get_to(row.max_count);
    r.at("extremal_count").get_to(row.extremal_count);
    r.at("pass").get_to(row.pass);
    row.attaining_not_extremal = r.value("attaining_not_extremal", std::int64_t{0});
    row.extremal_not_attaining = r.value("extremal_not_attaining", std::int64_t{0});
    report.rows.push_back(row);
  }
  return report;
}

json sample_run_to_json(const SampleRun& run, const ConcentrationReport& conc) {
  json out{{"n", run.n},
           {"seed", run.seed},
           {"labels_u", to_one_based(run.labels_u)},
           {"labels_v", to_one_based(run.labels_v)},
           {"label_counts_u", run.label_counts_u},
           {"label_counts_v", run.label_counts_v},
           {"resample_attempts", run.resample_attempts()},
           {"deg_u", run.deg_u},
           {"deg_v", run.deg_v},
           {"concentration",
            {{"max_deg_dev_u", conc.max_deg_dev_u},
             {"max_deg_dev_v", conc.max_deg_dev_v},
             {"budget", conc.budget},
             {"within_budget", conc.within_budget}}}};
  if (run.graph) out["edges"] = edges_to_json(run.graph->edges());
  return out;
}

std::string format_real(double v) { return fmt::format("{}", v); }

void write_experiment_csv(std::ostream& out, std::span<const ExperimentRow> rows) {
  out << "n,seed,delta,k,d_count,d_over_n2,bound_over_n2,spread_model,max_dev_u,max_dev_v,"
         "resample_attempts\n";
  for (const auto& r : rows) {
    if (r.error) continue;
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", r.n, r.seed, r.delta, r.k, r.d_count,
                       r.d_over_n2, r.bound_over_n2, r.spread_model, r.max_dev_u, r.max_dev_v,
                       r.resample_attempts);
  }
}

}  // namespace spreadbound
