#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spreadbound/errors.hpp"

namespace spreadbound {

/// Bipartite graph with sides U = {u_0..u_{n-1}} and V = {v_0..v_{n-1}}.
///
/// The incidence matrix is packed one row per machine word: bit j of row i is
/// set iff (u_i, v_j) is an edge. Values are immutable after construction.
class BipartiteGraph {
 public:
  static constexpr int kMaxSide = 64;

  /// Empty graph on n + n vertices.
  explicit BipartiteGraph(int n);

  static BipartiteGraph from_rows(int n, std::vector<std::uint64_t> rows);
  static BipartiteGraph from_edges(int n, std::span<const Edge> edges);

  int n() const noexcept { return n_; }
  bool has_edge(int i, int j) const;
  std::uint64_t row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }
  std::span<const std::uint64_t> rows() const noexcept { return rows_; }
  std::uint64_t side_mask() const noexcept;

  std::int64_t edge_count() const noexcept;

  /// Degrees in label order (not sorted).
  std::vector<int> u_degrees() const;
  std::vector<int> v_degrees() const;

  /// Edges in row-major order.
  std::vector<Edge> edges() const;

  bool operator==(const BipartiteGraph&) const = default;

 private:
  BipartiteGraph(int n, std::vector<std::uint64_t> rows);

  int n_;
  std::vector<std::uint64_t> rows_;
};

/// Degree sequences of both sides, each sorted non-increasing.
class DegreePair {
 public:
  /// Validates length, range [0, n] and ordering; throws ParameterError.
  DegreePair(int n, std::vector<int> alpha, std::vector<int> beta);

  static DegreePair from_unsorted(int n, std::vector<int> alpha, std::vector<int> beta);

  int n() const noexcept { return n_; }
  std::span<const int> alpha() const noexcept { return alpha_; }
  std::span<const int> beta() const noexcept { return beta_; }
  bool sums_match() const noexcept;

  bool operator==(const DegreePair&) const = default;

 private:
  int n_;
  std::vector<int> alpha_;
  std::vector<int> beta_;
};

/// Indices s, t are 1-based positions in the sorted sequences.
struct LemmaWitness {
  int s = 0;
  int t = 0;
  bool operator==(const LemmaWitness&) const = default;
};

/// 2k(n-k)
std::int64_t high_diff_bound(int n, int k);

/// True when n >= k > n/2.
bool in_high_regime(int n, int k) noexcept;

DegreePair degree_pair(const BipartiteGraph& g);

/// Number of ordered pairs (i, j) with |alpha_i - beta_j| >= k. Requires 1 <= k <= n.
std::int64_t count_high_diff(const DegreePair& dp, int k);
std::int64_t count_high_diff(const BipartiteGraph& g, int k);
/// Same count on raw sequences already sorted non-increasing (not re-validated).
std::int64_t count_high_diff(std::span<const int> alpha_desc, std::span<const int> beta_desc,
                             int k);

/// D_k for every k in 0..n at once (index k), via degree histograms.
std::vector<std::int64_t> high_diff_profile(const DegreePair& dp);

/// Throws BoundViolation if D_k > 2k(n-k) for some k with n >= k > n/2.
void require_high_diff_bound(const DegreePair& dp);

/// The k x k complete block on the first k vertices of each side.
BipartiteGraph make_extremal(int n, int k);

BipartiteGraph complement(const BipartiteGraph& g);

/// Smallest s, t in {1..n-k+1} with alpha_s <= beta_{s+k-1} + k - 1 and
/// beta_t <= alpha_{t+k-1} + k - 1. Requires a realizable pair and n >= k > n/2.
/// Throws LemmaViolation if no such index exists.
LemmaWitness lemma_witness(const DegreePair& dp, int k);

/// Whether g is, up to relabeling each side, the extremal block graph or its
/// complement. Decided by degree profile: k vertices of degree k and n-k
/// isolated vertices per side force the complete k x k block.
bool is_extremal_form(const BipartiteGraph& g, int k);
bool is_extremal_profile(std::span<const int> u_degrees, std::span<const int> v_degrees, int k);

}  // namespace spreadbound
