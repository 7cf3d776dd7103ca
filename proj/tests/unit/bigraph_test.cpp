#include "spreadbound/bigraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

namespace spreadbound {
namespace {

// Direct O(n^2) count, independent of the sorted-search implementation.
std::int64_t brute_high_diff(const std::vector<int>& a, const std::vector<int>& b, int k) {
  std::int64_t count = 0;
  for (int x : a) {
    for (int y : b) count += std::abs(x - y) >= k;
  }
  return count;
}

BipartiteGraph random_graph(std::mt19937_64& gen, int n, double density) {
  std::bernoulli_distribution edge(density);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (edge(gen)) edges.push_back({i, j});
    }
  }
  return BipartiteGraph::from_edges(n, edges);
}

BipartiteGraph relabel(const BipartiteGraph& g, const std::vector<int>& pu,
                       const std::vector<int>& pv) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    edges.push_back({pu[static_cast<std::size_t>(e.u)], pv[static_cast<std::size_t>(e.v)]});
  }
  return BipartiteGraph::from_edges(g.n(), edges);
}

TEST(BipartiteGraph, RejectsOutOfRangeSides) {
  EXPECT_THROW(BipartiteGraph(0), ParameterError);
  EXPECT_THROW(BipartiteGraph(65), ParameterError);
  EXPECT_NO_THROW(BipartiteGraph(64));
  const std::vector<Edge> bad{{0, 3}};
  EXPECT_THROW(BipartiteGraph::from_edges(3, bad), ParameterError);
  EXPECT_THROW(BipartiteGraph::from_rows(2, {0b100, 0}), ParameterError);
}

TEST(BipartiteGraph, DegreeSumsMatchEdgeCount) {
  std::mt19937_64 gen(3);
  for (int n : {1, 5, 31, 64}) {
    const auto g = random_graph(gen, n, 0.4);
    const auto du = g.u_degrees();
    const auto dv = g.v_degrees();
    EXPECT_EQ(std::accumulate(du.begin(), du.end(), std::int64_t{0}), g.edge_count());
    EXPECT_EQ(std::accumulate(dv.begin(), dv.end(), std::int64_t{0}), g.edge_count());
  }
}

TEST(DegreePair, ValidatesShape) {
  EXPECT_THROW(DegreePair(2, {1, 2}, {2, 1}), ParameterError);     // unsorted
  EXPECT_THROW(DegreePair(2, {3, 0}, {2, 1}), ParameterError);     // out of range
  EXPECT_THROW(DegreePair(2, {1}, {1, 0}), ParameterError);        // length
  EXPECT_NO_THROW(DegreePair(2, {2, 1}, {2, 1}));
  EXPECT_EQ(DegreePair::from_unsorted(3, {0, 2, 1}, {1, 1, 1}).alpha()[0], 2);
}

TEST(DegreePairOp, ExtremalEmptyAndComplete) {
  const auto ext = degree_pair(make_extremal(3, 2));
  EXPECT_EQ(ext, DegreePair(3, {2, 2, 0}, {2, 2, 0}));
  EXPECT_EQ(degree_pair(BipartiteGraph(3)), DegreePair(3, {0, 0, 0}, {0, 0, 0}));
  EXPECT_EQ(degree_pair(complement(BipartiteGraph(3))), DegreePair(3, {3, 3, 3}, {3, 3, 3}));
}

TEST(CountHighDiff, Examples) {
  EXPECT_EQ(count_high_diff(degree_pair(make_extremal(3, 2)), 2), 4);
  EXPECT_EQ(count_high_diff(BipartiteGraph(3), 2), 0);
  EXPECT_EQ(count_high_diff(DegreePair(2, {2, 0}, {1, 1}), 2), 0);
}

TEST(CountHighDiff, RejectsK) {
  const DegreePair dp(3, {1, 1, 1}, {1, 1, 1});
  EXPECT_THROW(count_high_diff(dp, 0), ParameterError);
  EXPECT_THROW(count_high_diff(dp, 4), ParameterError);
}

TEST(CountHighDiff, MatchesBruteForceOnRandomSequences) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 40);
    std::uniform_int_distribution<int> deg(0, n);
    std::vector<int> a(static_cast<std::size_t>(n));
    std::vector<int> b(static_cast<std::size_t>(n));
    for (auto& x : a) x = deg(gen);
    for (auto& x : b) x = deg(gen);
    const auto dp = DegreePair::from_unsorted(n, a, b);
    const auto profile = high_diff_profile(dp);
    for (int k = 1; k <= n; ++k) {
      const auto expected = brute_high_diff(a, b, k);
      ASSERT_EQ(count_high_diff(dp, k), expected) << "n=" << n << " k=" << k;
      ASSERT_EQ(profile[static_cast<std::size_t>(k)], expected);
    }
    ASSERT_EQ(profile[0], static_cast<std::int64_t>(n) * n);
  }
}

TEST(MakeExtremal, Examples) {
  const auto g32 = make_extremal(3, 2);
  const std::vector<Edge> expected{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  EXPECT_EQ(g32.edges(), expected);

  const auto g11 = make_extremal(1, 1);
  EXPECT_EQ(g11.edges(), (std::vector<Edge>{{0, 0}}));

  const auto g43 = make_extremal(4, 3);
  EXPECT_EQ(g43.edge_count(), 9);
  EXPECT_EQ(g43.u_degrees(), (std::vector<int>{3, 3, 3, 0}));
  EXPECT_EQ(g43.v_degrees(), (std::vector<int>{3, 3, 3, 0}));

  EXPECT_THROW(make_extremal(3, 4), ParameterError);
  EXPECT_THROW(make_extremal(3, 0), ParameterError);
}

TEST(MakeExtremal, AttainsBoundForAllHighK) {
  for (int n = 1; n <= 64; ++n) {
    for (int k = n / 2 + 1; k <= n; ++k) {
      const auto g = make_extremal(n, k);
      ASSERT_EQ(g.edge_count(), static_cast<std::int64_t>(k) * k);
      ASSERT_EQ(count_high_diff(g, k), high_diff_bound(n, k)) << n << "," << k;
    }
  }
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(complement(BipartiteGraph(3))), BipartiteGraph(3));
  const auto full = complement(BipartiteGraph(3));
  EXPECT_EQ(complement(full).edge_count(), 0);

  const auto c = complement(make_extremal(3, 2));
  EXPECT_EQ(degree_pair(c), DegreePair(3, {3, 1, 1}, {3, 1, 1}));
  EXPECT_EQ(count_high_diff(c, 2), 4);
}

TEST(Complement, InvolutionAndCountInvariance) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 64);
    const auto g = random_graph(gen, n, 0.5);
    const auto c = complement(g);
    ASSERT_EQ(complement(c), g);
    const auto du = g.u_degrees();
    const auto cu = c.u_degrees();
    for (std::size_t i = 0; i < du.size(); ++i) ASSERT_EQ(cu[i], n - du[i]);
    for (int k = 1; k <= n; ++k) ASSERT_EQ(count_high_diff(g, k), count_high_diff(c, k));
  }
}

TEST(HighDiffProperties, MonotoneInKAndLabelInvariant) {
  std::mt19937_64 gen(9);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 64);
    const auto g = random_graph(gen, n, std::uniform_real_distribution<>(0, 1)(gen));
    std::vector<int> pu(static_cast<std::size_t>(n));
    std::vector<int> pv(static_cast<std::size_t>(n));
    std::iota(pu.begin(), pu.end(), 0);
    std::iota(pv.begin(), pv.end(), 0);
    std::shuffle(pu.begin(), pu.end(), gen);
    std::shuffle(pv.begin(), pv.end(), gen);
    const auto h = relabel(g, pu, pv);
    std::int64_t prev = static_cast<std::int64_t>(n) * n;
    for (int k = 1; k <= n; ++k) {
      const auto c = count_high_diff(g, k);
      ASSERT_LE(c, prev);
      ASSERT_EQ(c, count_high_diff(h, k));
      if (in_high_regime(n, k)) ASSERT_LE(c, high_diff_bound(n, k));
      prev = c;
    }
  }
}

TEST(LemmaWitness, Examples) {
  EXPECT_EQ(lemma_witness(degree_pair(make_extremal(3, 2)), 2), (LemmaWitness{1, 1}));
  EXPECT_EQ(lemma_witness(DegreePair(3, {0, 0, 0}, {0, 0, 0}), 2), (LemmaWitness{1, 1}));
  EXPECT_EQ(lemma_witness(DegreePair(3, {3, 1, 1}, {3, 1, 1}), 2), (LemmaWitness{2, 2}));
}

TEST(LemmaWitness, RejectsPreconditions) {
  const DegreePair dp(4, {2, 2, 0, 0}, {2, 2, 0, 0});
  EXPECT_THROW(lemma_witness(dp, 2), ParameterError);  // k not > n/2
  EXPECT_THROW(lemma_witness(DegreePair(3, {3, 0, 0}, {1, 1, 0}), 2), ParameterError);
}

TEST(LemmaWitness, NonGraphicalPairReportsViolation) {
  // Equal sums but not graphical: two full rows would give every v degree >= 2.
  const DegreePair dp(4, {4, 4, 0, 0}, {4, 4, 0, 0});
  try {
    lemma_witness(dp, 3);
    FAIL() << "expected LemmaViolation";
  } catch (const LemmaViolation& e) {
    EXPECT_EQ(e.counterexample().n, 4);
    EXPECT_EQ(e.counterexample().k, 3);
    EXPECT_EQ(e.counterexample().alpha, (std::vector<int>{4, 4, 0, 0}));
  }
}

TEST(LemmaWitness, HoldsOnRandomGraphs) {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 64);
    const auto g = random_graph(gen, n, std::uniform_real_distribution<>(0, 1)(gen));
    const auto dp = degree_pair(g);
    for (int k = n / 2 + 1; k <= n; ++k) {
      const auto w = lemma_witness(dp, k);
      const auto a = dp.alpha();
      const auto b = dp.beta();
      ASSERT_GE(w.s, 1);
      ASSERT_LE(w.s, n - k + 1);
      ASSERT_LE(a[static_cast<std::size_t>(w.s - 1)], b[static_cast<std::size_t>(w.s + k - 2)] + k - 1);
      ASSERT_LE(b[static_cast<std::size_t>(w.t - 1)], a[static_cast<std::size_t>(w.t + k - 2)] + k - 1);
      // smallest: every earlier index fails
      for (int s = 1; s < w.s; ++s) {
        ASSERT_GT(a[static_cast<std::size_t>(s - 1)], b[static_cast<std::size_t>(s + k - 2)] + k - 1);
      }
    }
  }
}

TEST(IsExtremalForm, Examples) {
  const auto g = make_extremal(3, 2);
  EXPECT_TRUE(is_extremal_form(g, 2));
  EXPECT_TRUE(is_extremal_form(relabel(g, {2, 0, 1}, {1, 2, 0}), 2));
  EXPECT_FALSE(is_extremal_form(BipartiteGraph(3), 2));
  EXPECT_TRUE(is_extremal_form(complement(make_extremal(4, 3)), 3));
  EXPECT_EQ(degree_pair(complement(make_extremal(4, 3))), DegreePair(4, {4, 1, 1, 1}, {4, 1, 1, 1}));
  EXPECT_THROW(is_extremal_form(g, 1), ParameterError);
}

TEST(IsExtremalForm, MatchesEqualityBelowKEqualsN) {
  // Exhaustive over all 512 graphs at n = 3, k = 2.
  int attainers = 0;
  for (std::uint64_t mask = 0; mask < 512; ++mask) {
    std::vector<std::uint64_t> rows{mask & 7, (mask >> 3) & 7, (mask >> 6) & 7};
    const auto g = BipartiteGraph::from_rows(3, rows);
    const bool attains = count_high_diff(g, 2) == high_diff_bound(3, 2);
    ASSERT_EQ(attains, is_extremal_form(g, 2)) << "mask " << mask;
    attainers += attains;
  }
  EXPECT_EQ(attainers, 18);
}

TEST(Degenerate, SingleVertexSides) {
  for (const auto& g : {BipartiteGraph(1), make_extremal(1, 1)}) {
    EXPECT_EQ(count_high_diff(g, 1), 0);
    EXPECT_EQ(high_diff_bound(1, 1), 0);
    EXPECT_TRUE(is_extremal_form(g, 1));
    EXPECT_EQ(lemma_witness(degree_pair(g), 1), (LemmaWitness{1, 1}));
  }
}

}  // namespace
}  // namespace spreadbound
