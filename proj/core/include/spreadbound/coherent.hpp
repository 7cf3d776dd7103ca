#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spreadbound/rational.hpp"

namespace spreadbound {

inline constexpr double kWeightTolerance = 1e-12;
/// Slack for the inclusive test |x - y| >= delta, so exact-equality cells count.
inline constexpr double kSpreadSlack = 1e-12;

/// Finite coherent independent model. X takes value x_i on atom G_i (weight
/// p_i), Y takes y_j on H_j (weight q_j), and rho_ij is the conditional
/// probability of the underlying event on the cell G_i x H_j.
struct CoherentModel {
  std::vector<double> p;
  std::vector<double> q;
  std::vector<std::vector<double>> rho;  // p.size() rows of q.size() entries

  std::size_t row_atoms() const noexcept { return p.size(); }
  std::size_t col_atoms() const noexcept { return q.size(); }
  bool operator==(const CoherentModel&) const = default;
};

struct Marginals {
  std::vector<double> x;  // x_i = sum_j q_j rho_ij
  std::vector<double> y;  // y_j = sum_i p_i rho_ij
};

/// Every invariant violation in human-readable form; empty when valid.
std::vector<std::string> validate(const CoherentModel& m);

/// Throws ModelError listing the violations.
void require_valid(const CoherentModel& m);

Marginals marginals(const CoherentModel& m);

/// P(|X - Y| >= delta) for 0 < delta <= 1.
double spread(const CoherentModel& m, double delta);
double spread(const CoherentModel& m, const Marginals& marg, double delta);

/// Uniform weights on n atoms per side with rho_ij = 1 iff max(i, j) <= k
/// (1-based). Requires n >= k > n/2.
CoherentModel extremal_model(int n, int k);

struct CoarsenResult {
  CoherentModel model;
  std::vector<int> row_atom;  // original G-atom -> merged atom
  std::vector<int> col_atom;  // original H-atom -> merged atom
};

/// Merges atoms whose marginal values share a bin [l/n, (l+1)/n) (1 joins the
/// top bin): G-atoms first, then H-atoms on the recomputed marginals. Merged
/// weights add, merged kernel rows/columns are weight-averaged. Output atoms
/// are ordered by bin.
CoarsenResult coarsen_with_map(const CoherentModel& m, int n);
CoherentModel coarsen(const CoherentModel& m, int n);

struct BoundCheck {
  double spread = 0;
  double bound = 0;
  bool pass = false;
};

/// Compares spread to 2 delta (1 - delta). Requires 1/2 < delta <= 1.
BoundCheck spread_bound_check(const CoherentModel& m, double delta);

double spread_bound(double delta);

struct RandomModelOptions {
  int max_atoms = 12;
  /// Probability that a kernel entry is drawn from {0, 1} instead of [0, 1].
  double binary_kernel_probability = 0.0;
};

/// Seeded random valid model: N, M uniform in [1, max_atoms], weights a
/// normalized uniform sample, kernel entries uniform.
CoherentModel random_model(std::uint64_t seed, const RandomModelOptions& options = {});

// Exact arithmetic variant, used for equality cases where float slack would
// hide the question being asked.

struct RationalModel {
  std::vector<Rational> p;
  std::vector<Rational> q;
  std::vector<std::vector<Rational>> rho;
};

struct RationalMarginals {
  std::vector<Rational> x;
  std::vector<Rational> y;
};

RationalModel extremal_model_exact(int n, int k);
RationalMarginals marginals_exact(const RationalModel& m);
Rational spread_exact(const RationalModel& m, const Rational& delta);
/// 2 delta (1 - delta)
Rational spread_bound_exact(const Rational& delta);

}  // namespace spreadbound
