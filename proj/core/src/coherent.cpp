#include "spreadbound/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <fmt/format.h>

#include "spreadbound/errors.hpp"
#include "spreadbound/rng.hpp"

namespace spreadbound {

ModelError::ModelError(std::vector<std::string> violations)
    : std::invalid_argument([&] {
        std::string joined = "invalid coherent model";
        for (const auto& v : violations) joined += "; " + v;
        return joined;
      }()),
      violations_(std::move(violations)) {}

namespace {

void check_weights(const std::vector<double>& w, const char* name,
                   std::vector<std::string>& out) {
  if (w.empty()) {
    out.push_back(fmt::format("{} is empty", name));
    return;
  }
  bool finite = true;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!std::isfinite(w[i])) {
      out.push_back(fmt::format("{}[{}] is not finite", name, i));
      finite = false;
    } else if (w[i] < 0) {
      out.push_back(fmt::format("{}[{}] is negative: {}", name, i, w[i]));
    }
  }
  if (!finite) return;
  const double sum = std::accumulate(w.begin(), w.end(), 0.0);
  if (std::abs(sum - 1.0) > kWeightTolerance) out.push_back(fmt::format("{} sums to {}", name, sum));
}

// Neumaier compensated sum; keeps long runs of 1/n weights at full precision.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    comp_ += std::abs(sum_) >= std::abs(v) ? (sum_ - t) + v : (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

void require_delta(double delta) {
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw ParameterError(fmt::format("delta must be in (0, 1], got {}", delta));
  }
}

// Bin l such that value lies in [l/n, (l+1)/n); 1 goes to the top bin.
int bin_of(double value, int n) {
  const double scaled = std::floor(std::clamp(value, 0.0, 1.0) * n);
  return std::min(n - 1, static_cast<int>(scaled));
}

// Group indices by bin, bins ascending; returns index -> group and group lists.
std::vector<std::vector<int>> group_by_bin(const std::vector<double>& values, int n,
                                           std::vector<int>& index_to_group) {
  std::map<int, std::vector<int>> bins;
  for (std::size_t i = 0; i < values.size(); ++i) {
    bins[bin_of(values[i], n)].push_back(static_cast<int>(i));
  }
  std::vector<std::vector<int>> groups;
  index_to_group.assign(values.size(), 0);
  for (auto& [bin, members] : bins) {
    for (int i : members) index_to_group[static_cast<std::size_t>(i)] = static_cast<int>(groups.size());
    groups.push_back(std::move(members));
  }
  return groups;
}

// Weighted average of the selected entries; plain mean when all weights vanish.
double weighted_mean(const std::vector<int>& members, const std::vector<double>& weights,
                     auto&& value_of) {
  double total = 0.0;
  double acc = 0.0;
  for (int i : members) {
    total += weights[static_cast<std::size_t>(i)];
    acc += weights[static_cast<std::size_t>(i)] * value_of(i);
  }
  if (total > 0.0) return acc / total;
  double plain = 0.0;
  for (int i : members) plain += value_of(i);
  return plain / static_cast<double>(members.size());
}

}  // namespace

std::vector<std::string> validate(const CoherentModel& m) {
  std::vector<std::string> out;
  check_weights(m.p, "p", out);
  check_weights(m.q, "q", out);
  if (m.rho.size() != m.p.size()) {
    out.push_back(fmt::format("rho has {} rows, expected {}", m.rho.size(), m.p.size()));
  }
  for (std::size_t i = 0; i < m.rho.size(); ++i) {
    const auto& row = m.rho[i];
    if (row.size() != m.q.size()) {
      out.push_back(fmt::format("rho[{}] has {} entries, expected {}", i, row.size(), m.q.size()));
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!(row[j] >= 0.0 && row[j] <= 1.0)) {
        out.push_back(fmt::format("rho[{}][{}] out of [0,1]: {}", i, j, row[j]));
      }
    }
  }
  return out;
}

void require_valid(const CoherentModel& m) {
  if (auto violations = validate(m); !violations.empty()) throw ModelError(std::move(violations));
}

Marginals marginals(const CoherentModel& m) {
  require_valid(m);
  std::vector<CompensatedSum> x(m.p.size());
  std::vector<CompensatedSum> y(m.q.size());
  for (std::size_t i = 0; i < m.p.size(); ++i) {
    for (std::size_t j = 0; j < m.q.size(); ++j) {
      x[i].add(m.q[j] * m.rho[i][j]);
      y[j].add(m.p[i] * m.rho[i][j]);
    }
  }
  Marginals out;
  // Weights only sum to 1 within tolerance, so keep the averages inside [0, 1].
  for (const auto& v : x) out.x.push_back(std::clamp(v.value(), 0.0, 1.0));
  for (const auto& v : y) out.y.push_back(std::clamp(v.value(), 0.0, 1.0));
  return out;
}

double spread(const CoherentModel& m, double delta) { return spread(m, marginals(m), delta); }

double spread(const CoherentModel& m, const Marginals& marg, double delta) {
  require_delta(delta);
  if (marg.x.size() != m.p.size() || marg.y.size() != m.q.size()) {
    throw ParameterError("marginals do not match the model dimensions");
  }
  CompensatedSum total;
  for (std::size_t i = 0; i < m.p.size(); ++i) {
    CompensatedSum row;
    for (std::size_t j = 0; j < m.q.size(); ++j) {
      if (std::abs(marg.x[i] - marg.y[j]) >= delta - kSpreadSlack) row.add(m.q[j]);
    }
    total.add(m.p[i] * row.value());
  }
  return std::min(total.value(), 1.0);
}

double spread_bound(double delta) { return 2.0 * delta * (1.0 - delta); }

CoherentModel extremal_model(int n, int k) {
  if (!(n >= k && 2 * k > n && n >= 1)) {
    throw ParameterError(fmt::format("extremal_model needs n >= k > n/2, got n={} k={}", n, k));
  }
  const auto size = static_cast<std::size_t>(n);
  CoherentModel m;
  m.p.assign(size, 1.0 / n);
  m.q.assign(size, 1.0 / n);
  m.rho.assign(size, std::vector<double>(size, 0.0));
  for (int i = 0; i < k; ++i) {
    std::fill_n(m.rho[static_cast<std::size_t>(i)].begin(), k, 1.0);
  }
  return m;
}

CoarsenResult coarsen_with_map(const CoherentModel& m, int n) {
  if (n < 1) throw ParameterError(fmt::format("coarsen needs n >= 1, got {}", n));
  const Marginals marg = marginals(m);

  CoarsenResult out;
  const auto row_groups = group_by_bin(marg.x, n, out.row_atom);
  CoherentModel rows_merged;
  for (const auto& members : row_groups) {
    double weight = 0.0;
    for (int i : members) weight += m.p[static_cast<std::size_t>(i)];
    rows_merged.p.push_back(weight);
    std::vector<double> row(m.q.size());
    for (std::size_t j = 0; j < m.q.size(); ++j) {
      row[j] = weighted_mean(members, m.p, [&](int i) { return m.rho[static_cast<std::size_t>(i)][j]; });
    }
    rows_merged.rho.push_back(std::move(row));
  }
  rows_merged.q = m.q;

  const Marginals mid = marginals(rows_merged);
  const auto col_groups = group_by_bin(mid.y, n, out.col_atom);
  out.model.p = rows_merged.p;
  out.model.rho.assign(rows_merged.p.size(), {});
  for (const auto& members : col_groups) {
    double weight = 0.0;
    for (int j : members) weight += rows_merged.q[static_cast<std::size_t>(j)];
    out.model.q.push_back(weight);
    for (std::size_t i = 0; i < rows_merged.p.size(); ++i) {
      out.model.rho[i].push_back(weighted_mean(members, rows_merged.q, [&](int j) {
        return rows_merged.rho[i][static_cast<std::size_t>(j)];
      }));
    }
  }
  return out;
}

CoherentModel coarsen(const CoherentModel& m, int n) { return coarsen_with_map(m, n).model; }

BoundCheck spread_bound_check(const CoherentModel& m, double delta) {
  if (!(delta > 0.5 && delta <= 1.0)) {
    throw ParameterError(fmt::format("spread bound holds for delta in (1/2, 1], got {}", delta));
  }
  BoundCheck check;
  check.spread = spread(m, delta);
  check.bound = spread_bound(delta);
  check.pass = check.spread <= check.bound + kSpreadSlack;
  return check;
}

CoherentModel random_model(std::uint64_t seed, const RandomModelOptions& options) {
  if (options.max_atoms < 1) throw ParameterError("random_model needs max_atoms >= 1");
  Engine engine = make_engine(derive_seed(seed, "random_model"));
  auto atoms = [&] {
    return 1 + static_cast<int>(unit_uniform(engine) * options.max_atoms);
  };
  auto weights = [&](int count) {
    std::vector<double> w(static_cast<std::size_t>(count));
    // 1 - u lies in (0, 1], so every atom carries positive weight.
    for (auto& v : w) v = 1.0 - unit_uniform(engine);
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto& v : w) v /= total;
    return w;
  };

  CoherentModel m;
  const int rows = atoms();
  const int cols = atoms();
  m.p = weights(rows);
  m.q = weights(cols);
  m.rho.assign(static_cast<std::size_t>(rows), std::vector<double>(static_cast<std::size_t>(cols)));
  for (auto& row : m.rho) {
    for (auto& entry : row) {
      const bool binary = unit_uniform(engine) < options.binary_kernel_probability;
      const double u = unit_uniform(engine);
      entry = binary ? (u < 0.5 ? 0.0 : 1.0) : u;
    }
  }
  return m;
}

RationalModel extremal_model_exact(int n, int k) {
  if (!(n >= k && 2 * k > n && n >= 1)) {
    throw ParameterError(fmt::format("extremal_model needs n >= k > n/2, got n={} k={}", n, k));
  }
  const auto size = static_cast<std::size_t>(n);
  RationalModel m;
  m.p.assign(size, Rational(1, n));
  m.q.assign(size, Rational(1, n));
  m.rho.assign(size, std::vector<Rational>(size, Rational(0)));
  for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
    std::fill_n(m.rho[i].begin(), k, Rational(1));
  }
  return m;
}

RationalMarginals marginals_exact(const RationalModel& m) {
  RationalMarginals out{std::vector<Rational>(m.p.size()), std::vector<Rational>(m.q.size())};
  for (std::size_t i = 0; i < m.p.size(); ++i) {
    for (std::size_t j = 0; j < m.q.size(); ++j) {
      out.x[i] += m.q[j] * m.rho[i][j];
      out.y[j] += m.p[i] * m.rho[i][j];
    }
  }
  return out;
}

Rational spread_exact(const RationalModel& m, const Rational& delta) {
  const auto marg = marginals_exact(m);
  Rational total;
  for (std::size_t i = 0; i < m.p.size(); ++i) {
    Rational row;
    for (std::size_t j = 0; j < m.q.size(); ++j) {
      if (abs(marg.x[i] - marg.y[j]) >= delta) row += m.q[j];
    }
    total += m.p[i] * row;
  }
  return total;
}

Rational spread_bound_exact(const Rational& delta) {
  return Rational(2) * delta * (Rational(1) - delta);
}

}  // namespace spreadbound
