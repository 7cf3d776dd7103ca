#include "spreadbound/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "parallel.hpp"
#include "spreadbound/errors.hpp"
#include "spreadbound/rng.hpp"

namespace spreadbound {
namespace {

void require_sample_side(int n) {
  if (n < 1 || n > kMaxSampleSide) {
    throw ParameterError(fmt::format("sample size n must be in [1, {}], got {}", kMaxSampleSide, n));
  }
}

std::vector<double> cumulative(std::span<const double> weights) {
  if (weights.empty()) throw ParameterError("label weights are empty");
  double total = 0.0;
  std::vector<double> cum;
  cum.reserve(weights.size());
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw ParameterError("label weights must be finite and >= 0");
    total += w;
    cum.push_back(total);
  }
  if (std::abs(total - 1.0) > kWeightTolerance) {
    throw ParameterError(fmt::format("label weights sum to {}", total));
  }
  return cum;
}

int draw_label(const std::vector<double>& cum, std::span<const double> weights, Engine& engine) {
  const double u = unit_uniform(engine);
  auto idx = static_cast<std::size_t>(std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
  if (idx >= cum.size()) {
    // Rounding left the total just below u: take the last atom with mass.
    idx = cum.size() - 1;
    while (idx > 0 && weights[idx] == 0.0) --idx;
  }
  return static_cast<int>(idx);
}

}  // namespace

double label_window(int n) { return std::pow(static_cast<double>(n), 0.75); }

LabelSample sample_labels(std::span<const double> weights, int n, std::uint64_t seed,
                          int attempt_cap) {
  if (n < 1) throw ParameterError("label sample size must be positive");
  if (attempt_cap < 1) throw ParameterError("attempt cap must be positive");
  const auto cum = cumulative(weights);
  const double window = label_window(n);
  Engine engine = make_engine(seed);

  LabelSample out;
  out.labels.resize(static_cast<std::size_t>(n));
  int offending = 0;
  for (out.attempts = 1; out.attempts <= attempt_cap; ++out.attempts) {
    out.counts.assign(weights.size(), 0);
    for (auto& label : out.labels) {
      label = draw_label(cum, weights, engine);
      ++out.counts[static_cast<std::size_t>(label)];
    }
    offending = -1;
    for (std::size_t s = 0; s < weights.size(); ++s) {
      if (std::abs(static_cast<double>(out.counts[s]) - n * weights[s]) >= window) {
        offending = static_cast<int>(s);
        break;
      }
    }
    if (offending < 0) return out;
  }
  throw SamplingError(fmt::format("label {} count stayed outside n^(3/4) of its expectation "
                                  "after {} attempts",
                                  offending + 1, attempt_cap),
                      offending + 1, attempt_cap);
}

DegreePair SampleRun::degree_pair() const { return DegreePair::from_unsorted(n, deg_u, deg_v); }

SampleRun sample_graph(const CoherentModel& m, int n, std::uint64_t seed,
                       const SamplerOptions& options) {
  require_valid(m);
  require_sample_side(n);

  SampleRun run;
  run.n = n;
  run.seed = seed;
  auto lu = sample_labels(m.p, n, derive_seed(seed, "labels_u"), options.attempt_cap);
  auto lv = sample_labels(m.q, n, derive_seed(seed, "labels_v"), options.attempt_cap);
  run.labels_u = std::move(lu.labels);
  run.label_counts_u = std::move(lu.counts);
  run.attempts_u = lu.attempts;
  run.labels_v = std::move(lv.labels);
  run.label_counts_v = std::move(lv.counts);
  run.attempts_v = lv.attempts;

  const bool keep_incidence = n <= BipartiteGraph::kMaxSide;
  const auto size = static_cast<std::size_t>(n);

  struct Partial {
    std::vector<int> deg_u;
    std::vector<std::uint64_t> rows;
    std::vector<int> deg_v;
  };

  auto generate = [&](std::int64_t begin, std::int64_t end) {
    Partial part;
    part.deg_v.assign(size, 0);
    std::vector<double> threshold(size);
    for (std::int64_t i = begin; i < end; ++i) {
      const auto& kernel = m.rho[static_cast<std::size_t>(run.labels_u[static_cast<std::size_t>(i)])];
      for (std::size_t j = 0; j < size; ++j) {
        threshold[j] = kernel[static_cast<std::size_t>(run.labels_v[j])];
      }
      Engine engine = make_engine(derive_seed(seed, "edges", static_cast<std::uint64_t>(i)));
      int degree = 0;
      std::uint64_t bits = 0;
      for (std::size_t j = 0; j < size; ++j) {
        if (unit_uniform(engine) < threshold[j]) {
          ++degree;
          ++part.deg_v[j];
          if (keep_incidence) bits |= std::uint64_t{1} << j;
        }
      }
      part.deg_u.push_back(degree);
      if (keep_incidence) part.rows.push_back(bits);
    }
    return part;
  };

  run.deg_v.assign(size, 0);
  std::vector<std::uint64_t> rows;
  for (const auto& part : detail::map_chunks<Partial>(n, options.threads, generate)) {
    run.deg_u.insert(run.deg_u.end(), part.deg_u.begin(), part.deg_u.end());
    rows.insert(rows.end(), part.rows.begin(), part.rows.end());
    for (std::size_t j = 0; j < size; ++j) run.deg_v[j] += part.deg_v[j];
  }
  if (keep_incidence) run.graph = BipartiteGraph::from_rows(n, std::move(rows));

  require_high_diff_bound(run.degree_pair());
  return run;
}

ConcentrationReport concentration_report(const SampleRun& run, const CoherentModel& m, double c) {
  const auto size = static_cast<std::size_t>(run.n);
  if (run.labels_u.size() != size || run.labels_v.size() != size || run.deg_u.size() != size ||
      run.deg_v.size() != size) {
    throw ParameterError("sample run is inconsistent with its side size");
  }
  auto in_range = [](const std::vector<int>& labels, std::size_t atoms) {
    return std::all_of(labels.begin(), labels.end(),
                       [atoms](int l) { return l >= 0 && static_cast<std::size_t>(l) < atoms; });
  };
  if (!in_range(run.labels_u, m.row_atoms()) || !in_range(run.labels_v, m.col_atoms())) {
    throw ParameterError("sample run labels do not match the model dimensions");
  }
  const auto marg = marginals(m);
  const double n = run.n;
  ConcentrationReport report;
  for (std::size_t i = 0; i < size; ++i) {
    report.max_deg_dev_u = std::max(
        report.max_deg_dev_u,
        std::abs(run.deg_u[i] - n * marg.x[static_cast<std::size_t>(run.labels_u[i])]));
    report.max_deg_dev_v = std::max(
        report.max_deg_dev_v,
        std::abs(run.deg_v[i] - n * marg.y[static_cast<std::size_t>(run.labels_v[i])]));
  }
  report.budget = c * std::pow(n, 0.75);
  report.within_budget =
      report.max_deg_dev_u <= report.budget && report.max_deg_dev_v <= report.budget;
  return report;
}

int threshold_for(int n, double delta) {
  const int k = static_cast<int>(std::ceil(n * delta - n * kSpreadSlack));
  return std::clamp(k, n / 2 + 1, n);
}

std::vector<ExperimentRow> convergence_experiment(const CoherentModel& m, double delta,
                                                  std::span<const int> n_list,
                                                  std::span<const std::uint64_t> seeds,
                                                  const ExperimentOptions& options) {
  require_valid(m);
  if (!(delta > 0.5 && delta <= 1.0)) {
    throw ParameterError(fmt::format("delta must be in (1/2, 1], got {}", delta));
  }
  for (int n : n_list) require_sample_side(n);
  const double model_spread = spread(m, delta);

  std::vector<ExperimentRow> rows;
  for (int n : n_list) {
    for (std::uint64_t seed : seeds) {
      ExperimentRow row;
      row.n = n;
      row.seed = seed;
      row.delta = delta;
      row.k = threshold_for(n, delta);
      row.spread_model = model_spread;
      const double n2 = static_cast<double>(n) * n;
      row.bound_over_n2 = static_cast<double>(high_diff_bound(n, row.k)) / n2;
      try {
        const auto run = sample_graph(m, n, seed, {options.attempt_cap, options.threads});
        const auto conc = concentration_report(run, m, options.budget_constant);
        row.d_count = count_high_diff(run.degree_pair(), row.k);
        row.d_over_n2 = static_cast<double>(row.d_count) / n2;
        row.max_dev_u = conc.max_deg_dev_u;
        row.max_dev_v = conc.max_deg_dev_v;
        row.resample_attempts = run.resample_attempts();
        row.within_budget = conc.within_budget;
      } catch (const SamplingError& e) {
        row.error = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace spreadbound
