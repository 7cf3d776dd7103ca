#include "spreadbound/verifier.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <string>

#include "parallel.hpp"

namespace spreadbound {
namespace {

std::vector<int> high_regime_ks(int n) {
  std::vector<int> ks;
  for (int k = n / 2 + 1; k <= n; ++k) ks.push_back(k);
  return ks;
}

std::vector<VerificationRow> empty_rows(int n) {
  std::vector<VerificationRow> rows;
  for (int k : high_regime_ks(n)) {
    VerificationRow row;
    row.k = k;
    row.bound = high_diff_bound(n, k);
    rows.push_back(row);
  }
  return rows;
}

void merge_rows(std::vector<VerificationRow>& into, const std::vector<VerificationRow>& from) {
  for (std::size_t r = 0; r < into.size(); ++r) {
    into[r].max_count = std::max(into[r].max_count, from[r].max_count);
    into[r].extremal_count += from[r].extremal_count;
    into[r].attaining_not_extremal += from[r].attaining_not_extremal;
    into[r].extremal_not_attaining += from[r].extremal_not_attaining;
  }
}

void finalize(VerificationReport& report) {
  for (auto& row : report.rows) row.pass = row.max_count <= row.bound;
}

// First violation by enumeration index; min() keeps the merge order-independent.
struct Violation {
  std::int64_t index = 0;
  int k = 0;
};

void keep_first(std::optional<Violation>& into, const std::optional<Violation>& from) {
  if (from && (!into || from->index < into->index)) into = from;
}

bool dominance_holds(std::span<const int> alpha, std::span<const int> beta) {
  const auto n = static_cast<int>(alpha.size());
  std::int64_t lhs = 0;
  for (int r = 1; r <= n; ++r) {
    lhs += alpha[static_cast<std::size_t>(r - 1)];
    std::int64_t rhs = 0;
    for (int b : beta) rhs += std::min(b, r);
    if (lhs > rhs) return false;
  }
  return true;
}

void sequences_rec(int n, int max_value, std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(prefix);
    return;
  }
  for (int v = max_value; v >= 0; --v) {
    prefix.push_back(v);
    sequences_rec(n, v, prefix, out);
    prefix.pop_back();
  }
}

std::int64_t span_len(std::int64_t lo, std::int64_t hi) { return std::max<std::int64_t>(0, hi - lo + 1); }

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const VerificationRow& r) { return r.pass; });
}

bool VerificationReport::equality_characterized() const {
  return std::all_of(rows.begin(), rows.end(), [](const VerificationRow& r) {
    return r.attaining_not_extremal == 0 && r.extremal_not_attaining == 0;
  });
}

VerificationReport verify_full(int n, unsigned threads) {
  if (n < 1 || n > kMaxFullGraphSide) {
    throw ParameterError("verify_full supports 1 <= n <= 4, got " + std::to_string(n));
  }
  const int bits = n * n;
  const std::int64_t total = std::int64_t{1} << bits;

  struct Partial {
    std::vector<VerificationRow> rows;
    std::optional<Violation> violation;
  };

  auto scan = [n, bits](std::int64_t begin, std::int64_t end) {
    Partial part{empty_rows(n), std::nullopt};
    if (begin >= end) return part;
    std::vector<int> du(static_cast<std::size_t>(n), 0);
    std::vector<int> dv(static_cast<std::size_t>(n), 0);
    for (int b = 0; b < bits; ++b) {
      if ((begin >> b) & 1) {
        ++du[static_cast<std::size_t>(b / n)];
        ++dv[static_cast<std::size_t>(b % n)];
      }
    }
    for (std::int64_t m = begin;;) {
      for (auto& row : part.rows) {
        std::int64_t count = 0;
        for (int a : du) {
          for (int b : dv) count += std::abs(a - b) >= row.k;
        }
        row.max_count = std::max(row.max_count, count);
        const bool attains = count == row.bound;
        const bool extremal = is_extremal_profile(du, dv, row.k);
        row.extremal_count += attains;
        row.attaining_not_extremal += attains && !extremal;
        row.extremal_not_attaining += extremal && !attains;
        if (count > row.bound && !part.violation) part.violation = Violation{m, row.k};
      }
      if (++m == end) break;
      // m-1 -> m clears the trailing ones of m-1 and sets the next bit.
      const auto prev = static_cast<std::uint64_t>(m - 1);
      const int ones = std::countr_one(prev);
      for (int b = 0; b <= ones; ++b) {
        const int delta = b < ones ? -1 : 1;
        du[static_cast<std::size_t>(b / n)] += delta;
        dv[static_cast<std::size_t>(b % n)] += delta;
      }
    }
    return part;
  };

  VerificationReport report{n, VerificationMode::kFullGraph, empty_rows(n), total};
  std::optional<Violation> violation;
  for (const auto& part : detail::map_chunks<Partial>(total, threads, scan)) {
    merge_rows(report.rows, part.rows);
    keep_first(violation, part.violation);
  }
  if (violation) {
    std::vector<Edge> edges;
    for (int b = 0; b < bits; ++b) {
      if ((violation->index >> b) & 1) edges.push_back({b / n, b % n});
    }
    const auto g = BipartiteGraph::from_edges(n, edges);
    const auto dp = degree_pair(g);
    throw BoundViolation(
        "degree-difference bound exceeded",
        Counterexample{n, violation->k, {dp.alpha().begin(), dp.alpha().end()},
                       {dp.beta().begin(), dp.beta().end()}, std::move(edges)});
  }
  finalize(report);
  return report;
}

bool gale_ryser_feasible(std::span<const int> alpha, std::span<const int> beta) {
  const auto n = static_cast<int>(alpha.size());
  if (n < 1 || beta.size() != alpha.size()) {
    throw ParameterError("gale_ryser_feasible: sequences must be non-empty and of equal length");
  }
  auto well_formed = [n](std::span<const int> seq) {
    return std::all_of(seq.begin(), seq.end(), [n](int d) { return d >= 0 && d <= n; }) &&
           std::is_sorted(seq.begin(), seq.end(), std::greater<>());
  };
  if (!well_formed(alpha) || !well_formed(beta)) {
    throw ParameterError("gale_ryser_feasible: entries must lie in [0, n], sorted non-increasing");
  }
  if (std::accumulate(alpha.begin(), alpha.end(), std::int64_t{0}) !=
      std::accumulate(beta.begin(), beta.end(), std::int64_t{0})) {
    return false;
  }
  return dominance_holds(alpha, beta);
}

std::vector<std::vector<int>> sorted_sequences(int n) {
  if (n < 1) throw ParameterError("sorted_sequences: n must be positive");
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  sequences_rec(n, n, prefix, out);
  return out;
}

namespace {

struct SequenceIndex {
  std::vector<std::vector<int>> seqs;
  std::vector<int> sums;
  std::map<int, std::vector<std::size_t>> by_sum;
};

SequenceIndex index_sequences(int n) {
  SequenceIndex idx{sorted_sequences(n), {}, {}};
  idx.sums.reserve(idx.seqs.size());
  for (std::size_t i = 0; i < idx.seqs.size(); ++i) {
    const int sum = std::accumulate(idx.seqs[i].begin(), idx.seqs[i].end(), 0);
    idx.sums.push_back(sum);
    idx.by_sum[sum].push_back(i);
  }
  return idx;
}

}  // namespace

void for_each_realizable_pair(int n, const std::function<void(const DegreePair&)>& fn) {
  const auto idx = index_sequences(n);
  for (std::size_t a = 0; a < idx.seqs.size(); ++a) {
    for (std::size_t b : idx.by_sum.at(idx.sums[a])) {
      if (dominance_holds(idx.seqs[a], idx.seqs[b])) fn(DegreePair(n, idx.seqs[a], idx.seqs[b]));
    }
  }
}

VerificationReport verify_degseq(int n, unsigned threads) {
  if (n < 1 || n > kMaxDegreeSequenceSide) {
    throw ParameterError("verify_degseq supports 1 <= n <= 9, got " + std::to_string(n));
  }
  const auto idx = index_sequences(n);

  struct Partial {
    std::vector<VerificationRow> rows;
    std::int64_t scanned = 0;
    std::optional<Violation> violation;
  };

  // Violation index encodes (alpha, beta) as a * count + b.
  const auto seq_count = static_cast<std::int64_t>(idx.seqs.size());
  auto scan = [&idx, n, seq_count](std::int64_t begin, std::int64_t end) {
    Partial part{empty_rows(n), 0, std::nullopt};
    for (std::int64_t a = begin; a < end; ++a) {
      const auto& alpha = idx.seqs[static_cast<std::size_t>(a)];
      for (std::size_t b : idx.by_sum.at(idx.sums[static_cast<std::size_t>(a)])) {
        const auto& beta = idx.seqs[b];
        if (!dominance_holds(alpha, beta)) continue;
        ++part.scanned;
        for (auto& row : part.rows) {
          const auto count = count_high_diff(alpha, beta, row.k);
          row.max_count = std::max(row.max_count, count);
          row.extremal_count += count == row.bound;
          if (count > row.bound && !part.violation) {
            part.violation = Violation{a * seq_count + static_cast<std::int64_t>(b), row.k};
          }
        }
      }
    }
    return part;
  };

  VerificationReport report{n, VerificationMode::kDegreeSequence, empty_rows(n), 0};
  std::optional<Violation> violation;
  for (const auto& part : detail::map_chunks<Partial>(seq_count, threads, scan)) {
    merge_rows(report.rows, part.rows);
    report.instances_scanned += part.scanned;
    keep_first(violation, part.violation);
  }
  if (violation) {
    const auto& alpha = idx.seqs[static_cast<std::size_t>(violation->index / seq_count)];
    const auto& beta = idx.seqs[static_cast<std::size_t>(violation->index % seq_count)];
    throw BoundViolation("degree-difference bound exceeded",
                         Counterexample{n, violation->k, alpha, beta, std::nullopt});
  }
  finalize(report);
  return report;
}

RegionCounts proof_config_regions(int n, int k, const ProofConfig& cfg) {
  if (!in_high_regime(n, k)) throw ParameterError("proof_config_regions: need n >= k > n/2");
  const int last = n - k + 1;
  if (cfg.i0 < 1 || cfg.i0 > n + 1 || cfg.j0 < 1 || cfg.j0 > n + 1 || cfg.s < 1 ||
      cfg.s > last || cfg.t < 1 || cfg.t > last) {
    throw ParameterError("proof_config_regions: configuration index out of range");
  }
  // Each region is a rectangle minus the sub-rectangle excluded by the witness.
  const std::int64_t a_rect = span_len(1, cfg.i0 - 1) * span_len(cfg.j0, n);
  const std::int64_t a_cut =
      span_len(cfg.s, cfg.i0 - 1) * span_len(cfg.j0, std::min(n, cfg.s + k - 1));
  const std::int64_t b_rect = span_len(cfg.i0, n) * span_len(1, cfg.j0 - 1);
  const std::int64_t b_cut =
      span_len(cfg.t, cfg.j0 - 1) * span_len(cfg.i0, std::min(n, cfg.t + k - 1));
  return {a_rect - a_cut, b_rect - b_cut};
}

std::int64_t proof_config_max(int n, int k) {
  if (!in_high_regime(n, k)) throw ParameterError("proof_config_max: need n >= k > n/2");
  std::int64_t best = 0;
  const int last = n - k + 1;
  for (int i0 = 1; i0 <= n + 1; ++i0) {
    for (int j0 = 1; j0 <= n + 1; ++j0) {
      for (int s = 1; s <= last; ++s) {
        for (int t = 1; t <= last; ++t) {
          best = std::max(best, proof_config_regions(n, k, {i0, j0, s, t}).total());
        }
      }
    }
  }
  return best;
}

}  // namespace spreadbound
