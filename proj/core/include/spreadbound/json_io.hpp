#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "spreadbound/bigraph.hpp"
#include "spreadbound/coherent.hpp"
#include "spreadbound/errors.hpp"
#include "spreadbound/sampler.hpp"
#include "spreadbound/verifier.hpp"

// Serialized vertex, atom and label indices are 1-based.

namespace spreadbound {

using nlohmann::json;

/// {"p": [...], "q": [...], "rho": [[...], ...]}
json model_to_json(const CoherentModel& m);

/// Throws ModelError on schema problems or any invariant violation.
CoherentModel model_from_json(const json& j);
CoherentModel read_model(std::istream& in);
CoherentModel read_model_file(const std::string& path);

json graph_to_json(const BipartiteGraph& g);
BipartiteGraph graph_from_json(const json& j);

/// {"n", "k", "alpha", "beta", "edges"?}
json counterexample_to_json(const Counterexample& ex);
Counterexample counterexample_from_json(const json& j);

json witness_to_json(const LemmaWitness& w);
json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const json& j);

json sample_run_to_json(const SampleRun& run, const ConcentrationReport& conc);

/// Header plus one line per successful row, columns:
/// n, seed, delta, k, d_count, d_over_n2, bound_over_n2, spread_model,
/// max_dev_u, max_dev_v, resample_attempts
void write_experiment_csv(std::ostream& out, std::span<const ExperimentRow> rows);

/// Shortest decimal that round-trips to the same double.
std::string format_real(double v);

}  // namespace spreadbound
