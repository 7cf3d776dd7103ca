#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spreadbound/bigraph.hpp"
#include "spreadbound/coherent.hpp"

namespace spreadbound {

inline constexpr int kMaxSampleSide = 8192;
inline constexpr int kDefaultAttemptCap = 1000;
inline constexpr double kDefaultBudgetConstant = 2.0;

/// i.i.d. labels conditioned by rejection on every count lying strictly
/// within n^(3/4) of its expectation.
struct LabelSample {
  std::vector<int> labels;           // 0-based atom index per vertex
  std::vector<std::int64_t> counts;  // per atom
  int attempts = 0;                  // 1 when the first draw was accepted
};

/// Throws SamplingError after attempt_cap rejected draws.
LabelSample sample_labels(std::span<const double> weights, int n, std::uint64_t seed,
                          int attempt_cap = kDefaultAttemptCap);

/// Half-width of the accepted label-count window.
double label_window(int n);

struct SamplerOptions {
  int attempt_cap = kDefaultAttemptCap;
  unsigned threads = 0;
};

/// One draw of the random graph built from a coherent model. Incidence is
/// kept only for n <= 64; degrees are always recorded.
struct SampleRun {
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<int> labels_u;
  std::vector<int> labels_v;
  std::vector<std::int64_t> label_counts_u;
  std::vector<std::int64_t> label_counts_v;
  int attempts_u = 0;
  int attempts_v = 0;
  std::vector<int> deg_u;  // label order
  std::vector<int> deg_v;
  std::optional<BipartiteGraph> graph;

  /// Rejected label draws across both sides.
  int resample_attempts() const noexcept { return attempts_u + attempts_v - 2; }
  DegreePair degree_pair() const;
  bool operator==(const SampleRun&) const = default;
};

/// Labels from p and q, then edge (u_i, v_j) independently with probability
/// rho[label_u_i][label_v_j]. Row i draws from its own stream keyed by
/// (seed, "edges", i), so the result does not depend on the thread count.
/// Every sampled graph is checked against the 2k(n-k) bound.
SampleRun sample_graph(const CoherentModel& m, int n, std::uint64_t seed,
                       const SamplerOptions& options = {});

struct ConcentrationReport {
  double max_deg_dev_u = 0;  // max_i |deg(u_i) - n x_{label_u_i}|
  double max_deg_dev_v = 0;
  double budget = 0;         // c n^(3/4)
  bool within_budget = false;
};

ConcentrationReport concentration_report(const SampleRun& run, const CoherentModel& m,
                                         double c = kDefaultBudgetConstant);

/// ceil(n delta), with the float slack used by spread so that decimal deltas
/// such as 0.55 land on the intended integer.
int threshold_for(int n, double delta);

struct ExperimentRow {
  int n = 0;
  std::uint64_t seed = 0;
  double delta = 0;
  int k = 0;
  std::int64_t d_count = 0;
  double d_over_n2 = 0;
  double bound_over_n2 = 0;
  double spread_model = 0;
  double max_dev_u = 0;
  double max_dev_v = 0;
  int resample_attempts = 0;
  bool within_budget = false;
  std::optional<std::string> error;  // sampling failure; numeric fields unset
};

struct ExperimentOptions {
  double budget_constant = kDefaultBudgetConstant;
  int attempt_cap = kDefaultAttemptCap;
  unsigned threads = 0;
};

/// One row per (n, seed), n outer. Sampling failures are recorded on the row;
/// a bound violation propagates as BoundViolation.
std::vector<ExperimentRow> convergence_experiment(const CoherentModel& m, double delta,
                                                  std::span<const int> n_list,
                                                  std::span<const std::uint64_t> seeds,
                                                  const ExperimentOptions& options = {});

}  // namespace spreadbound
