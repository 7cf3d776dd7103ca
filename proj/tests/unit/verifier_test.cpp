#include "spreadbound/verifier.hpp"

#include <set>

#include <gtest/gtest.h>

namespace spreadbound {
namespace {

using SortedPair = std::pair<std::vector<int>, std::vector<int>>;

// Every sorted degree pair produced by some labeled graph on n + n vertices.
std::set<SortedPair> realized_pairs(int n) {
  std::set<SortedPair> out;
  const int bits = n * n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = (mask >> (i * n)) & ((1U << n) - 1);
    const auto dp = degree_pair(BipartiteGraph::from_rows(n, rows));
    out.insert({{dp.alpha().begin(), dp.alpha().end()}, {dp.beta().begin(), dp.beta().end()}});
  }
  return out;
}

// Direct cell enumeration of the two pair regions.
RegionCounts brute_regions(int n, int k, const ProofConfig& c) {
  RegionCounts r;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i <= c.i0 - 1 && j >= c.j0 && (i < c.s || j > c.s + k - 1)) ++r.a_pairs;
      if (i >= c.i0 && j <= c.j0 - 1 && (j < c.t || i > c.t + k - 1)) ++r.b_pairs;
    }
  }
  return r;
}

TEST(VerifyFull, N3) {
  const auto report = verify_full(3);
  EXPECT_EQ(report.mode, VerificationMode::kFullGraph);
  EXPECT_EQ(report.instances_scanned, 512);
  ASSERT_EQ(report.rows.size(), 2U);
  const auto& k2 = report.rows[0];
  EXPECT_EQ(k2.k, 2);
  EXPECT_EQ(k2.bound, 4);
  EXPECT_EQ(k2.max_count, 4);
  EXPECT_TRUE(k2.pass);
  // 3 choices of the k-subset on each side, block or complement: 2 * 3 * 3.
  EXPECT_EQ(k2.extremal_count, 18);
  EXPECT_EQ(k2.attaining_not_extremal, 0);
  EXPECT_EQ(k2.extremal_not_attaining, 0);
  // k = n: every graph has D_n = 0 = bound, only two are extremal forms.
  const auto& k3 = report.rows[1];
  EXPECT_EQ(k3.bound, 0);
  EXPECT_EQ(k3.max_count, 0);
  EXPECT_EQ(k3.extremal_count, 512);
  EXPECT_EQ(k3.attaining_not_extremal, 510);
  EXPECT_TRUE(report.all_pass());
  EXPECT_FALSE(report.equality_characterized());
}

TEST(VerifyFull, N1AndN4) {
  const auto r1 = verify_full(1);
  ASSERT_EQ(r1.rows.size(), 1U);
  EXPECT_EQ(r1.rows[0].bound, 0);
  EXPECT_EQ(r1.rows[0].max_count, 0);
  EXPECT_EQ(r1.rows[0].extremal_count, 2);
  EXPECT_TRUE(r1.equality_characterized());

  const auto r4 = verify_full(4);
  EXPECT_EQ(r4.instances_scanned, 65536);
  EXPECT_EQ(r4.rows[0].k, 3);
  EXPECT_EQ(r4.rows[0].max_count, 6);
  EXPECT_EQ(r4.rows[0].extremal_count, 32);
  EXPECT_EQ(r4.rows[0].attaining_not_extremal, 0);
}

TEST(VerifyFull, RejectsSize) {
  EXPECT_THROW(verify_full(0), ParameterError);
  EXPECT_THROW(verify_full(5), ParameterError);
}

TEST(VerifyFull, IndependentOfThreadCount) {
  const auto a = verify_full(4, 1);
  EXPECT_EQ(a, verify_full(4, 3));
  EXPECT_EQ(a, verify_full(4, 8));
}

TEST(GaleRyser, Examples) {
  const std::vector<int> a{2, 2, 0};
  EXPECT_TRUE(gale_ryser_feasible(a, a));
  const std::vector<int> b{3, 0, 0};
  const std::vector<int> c{1, 1, 0};
  EXPECT_FALSE(gale_ryser_feasible(b, c));
  const std::vector<int> d{2, 1};
  EXPECT_TRUE(gale_ryser_feasible(d, d));
}

TEST(GaleRyser, RejectsMalformed) {
  const std::vector<int> unsorted{0, 2};
  const std::vector<int> ok{2, 0};
  const std::vector<int> too_big{3, 0};
  const std::vector<int> short_seq{1};
  EXPECT_THROW(gale_ryser_feasible(unsorted, ok), ParameterError);
  EXPECT_THROW(gale_ryser_feasible(too_big, ok), ParameterError);
  EXPECT_THROW(gale_ryser_feasible(short_seq, ok), ParameterError);
}

TEST(GaleRyser, AgreesWithBruteForceRealizability) {
  for (int n = 1; n <= 4; ++n) {
    const auto realized = realized_pairs(n);
    const auto seqs = sorted_sequences(n);
    std::size_t feasible = 0;
    for (const auto& a : seqs) {
      for (const auto& b : seqs) {
        const bool gr = gale_ryser_feasible(a, b);
        ASSERT_EQ(gr, gale_ryser_feasible(b, a));
        ASSERT_EQ(gr, realized.count({a, b}) == 1) << "n=" << n;
        feasible += gr;
      }
    }
    EXPECT_EQ(feasible, realized.size());
  }
}

TEST(SortedSequences, CountIsBinomial) {
  // non-increasing length-n sequences over {0..n}: C(2n, n)
  EXPECT_EQ(sorted_sequences(1).size(), 2U);
  EXPECT_EQ(sorted_sequences(3).size(), 20U);
  EXPECT_EQ(sorted_sequences(8).size(), 12870U);
}

TEST(VerifyDegseq, AgreesWithFullScan) {
  for (int n = 1; n <= 4; ++n) {
    const auto full = verify_full(n);
    const auto deg = verify_degseq(n);
    EXPECT_EQ(deg.mode, VerificationMode::kDegreeSequence);
    ASSERT_EQ(full.rows.size(), deg.rows.size());
    for (std::size_t r = 0; r < full.rows.size(); ++r) {
      EXPECT_EQ(full.rows[r].k, deg.rows[r].k);
      EXPECT_EQ(full.rows[r].max_count, deg.rows[r].max_count) << "n=" << n;
    }
    EXPECT_EQ(deg.instances_scanned, static_cast<std::int64_t>(realized_pairs(n).size()));
  }
}

TEST(VerifyDegseq, Examples) {
  const auto r2 = verify_degseq(2);
  ASSERT_EQ(r2.rows.size(), 1U);
  EXPECT_EQ(r2.rows[0].bound, 0);
  EXPECT_EQ(r2.rows[0].max_count, 0);

  const auto r8 = verify_degseq(8);
  EXPECT_TRUE(r8.all_pass());
  EXPECT_EQ(r8.rows[0].k, 5);
  EXPECT_EQ(r8.rows[0].bound, 30);
  EXPECT_EQ(r8.rows[0].max_count, 30);
  // block profile and its complement
  EXPECT_EQ(r8.rows[0].extremal_count, 2);
  EXPECT_THROW(verify_degseq(10), ParameterError);
}

TEST(VerifyDegseq, Deterministic) {
  EXPECT_EQ(verify_degseq(6, 1), verify_degseq(6, 4));
}

TEST(ProofConfig, RegionsMatchCellEnumeration) {
  for (int n = 1; n <= 9; ++n) {
    for (int k = n / 2 + 1; k <= n; ++k) {
      for (int i0 = 1; i0 <= n + 1; ++i0) {
        for (int j0 = 1; j0 <= n + 1; ++j0) {
          for (int s = 1; s <= n - k + 1; ++s) {
            for (int t = 1; t <= n - k + 1; ++t) {
              const ProofConfig c{i0, j0, s, t};
              const auto fast = proof_config_regions(n, k, c);
              const auto slow = brute_regions(n, k, c);
              ASSERT_EQ(fast.a_pairs, slow.a_pairs);
              ASSERT_EQ(fast.b_pairs, slow.b_pairs);
            }
          }
        }
      }
    }
  }
}

TEST(ProofConfig, MaxExamples) {
  EXPECT_EQ(proof_config_max(3, 2), 4);
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(proof_config_max(n, n), 0);
  EXPECT_EQ(proof_config_max(30, 16), 448);
  EXPECT_THROW(proof_config_max(4, 2), ParameterError);
  EXPECT_THROW(proof_config_regions(4, 3, {6, 1, 1, 1}), ParameterError);
}

TEST(ForEachRealizablePair, CountsMatchDegseqScan) {
  std::int64_t count = 0;
  for_each_realizable_pair(5, [&](const DegreePair& dp) {
    ASSERT_TRUE(gale_ryser_feasible(dp.alpha(), dp.beta()));
    ++count;
  });
  EXPECT_EQ(count, verify_degseq(5).instances_scanned);
}

}  // namespace
}  // namespace spreadbound
