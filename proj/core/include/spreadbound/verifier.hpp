#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "spreadbound/bigraph.hpp"

namespace spreadbound {

enum class VerificationMode { kFullGraph, kDegreeSequence };

struct VerificationRow {
  int k = 0;
  std::int64_t bound = 0;
  std::int64_t max_count = 0;
  /// Labeled graphs (full-graph mode) or degree pairs (degree-sequence mode)
  /// attaining the bound.
  std::int64_t extremal_count = 0;
  // Full-graph mode only: disagreements between "attains the bound" and
  // is_extremal_form, in both directions.
  std::int64_t attaining_not_extremal = 0;
  std::int64_t extremal_not_attaining = 0;
  bool pass = false;

  bool operator==(const VerificationRow&) const = default;
};

struct VerificationReport {
  int n = 0;
  VerificationMode mode = VerificationMode::kFullGraph;
  std::vector<VerificationRow> rows;
  std::int64_t instances_scanned = 0;

  bool all_pass() const;
  /// Every attaining graph is an extremal form and vice versa (full-graph mode).
  bool equality_characterized() const;
  bool operator==(const VerificationReport&) const = default;
};

inline constexpr int kMaxFullGraphSide = 4;
inline constexpr int kMaxDegreeSequenceSide = 9;

/// Scans all 2^(n^2) labeled graphs for each k with n >= k > n/2.
/// Requires 1 <= n <= 4. threads == 0 uses the hardware concurrency.
/// Throws BoundViolation (with the graph) if any count exceeds 2k(n-k).
VerificationReport verify_full(int n, unsigned threads = 0);

/// Scans every realizable pair of sorted degree sequences. Requires 1 <= n <= 9.
VerificationReport verify_degseq(int n, unsigned threads = 0);

/// Gale-Ryser dominance test. Inputs must have equal length n, entries in
/// [0, n], sorted non-increasing; throws ParameterError otherwise.
bool gale_ryser_feasible(std::span<const int> alpha, std::span<const int> beta);

/// All non-increasing sequences of length n with entries in [0, n], in
/// lexicographically decreasing order.
std::vector<std::vector<int>> sorted_sequences(int n);

/// Calls fn on every realizable DegreePair with side n, deterministic order.
void for_each_realizable_pair(int n, const std::function<void(const DegreePair&)>& fn);

/// Indices are 1-based: i0, j0 in {1..n+1}; s, t in {1..n-k+1}.
struct ProofConfig {
  int i0 = 1;
  int j0 = 1;
  int s = 1;
  int t = 1;
};

struct RegionCounts {
  std::int64_t a_pairs = 0;
  std::int64_t b_pairs = 0;
  std::int64_t total() const { return a_pairs + b_pairs; }
};

/// Sizes of the two admissible pair regions for one configuration:
///   A: i <= i0-1, j >= j0, and (i < s or j > s+k-1)
///   B: i >= i0, j <= j0-1, and (j < t or i > t+k-1)
RegionCounts proof_config_regions(int n, int k, const ProofConfig& cfg);

/// Maximum of proof_config_regions(...).total() over every configuration.
std::int64_t proof_config_max(int n, int k);

}  // namespace spreadbound
