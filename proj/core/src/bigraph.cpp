#include "spreadbound/bigraph.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>

namespace spreadbound {
namespace {

void require_side(int n) {
  if (n < 1 || n > BipartiteGraph::kMaxSide) {
    throw ParameterError("side size must be in [1, 64], got " + std::to_string(n));
  }
}

void require_k(int n, int k) {
  if (k < 1 || k > n) {
    throw ParameterError("k must be in [1, n], got k=" + std::to_string(k) +
                         " n=" + std::to_string(n));
  }
}

void require_high_regime(int n, int k) {
  if (!in_high_regime(n, k)) {
    throw ParameterError("need n >= k > n/2, got n=" + std::to_string(n) +
                         " k=" + std::to_string(k));
  }
}

std::uint64_t mask_for(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Number of leading entries of a non-increasing sequence that are >= x.
std::int64_t count_at_least(std::span<const int> desc, int x) {
  auto it = std::partition_point(desc.begin(), desc.end(), [x](int b) { return b >= x; });
  return it - desc.begin();
}

bool matches_profile(std::vector<int> degrees, int high, int high_count, int low) {
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  const auto n = static_cast<int>(degrees.size());
  for (int i = 0; i < n; ++i) {
    if (degrees[static_cast<std::size_t>(i)] != (i < high_count ? high : low)) return false;
  }
  return true;
}

}  // namespace

BipartiteGraph::BipartiteGraph(int n) : n_(n), rows_() {
  require_side(n);
  rows_.assign(static_cast<std::size_t>(n), 0);
}

BipartiteGraph::BipartiteGraph(int n, std::vector<std::uint64_t> rows)
    : n_(n), rows_(std::move(rows)) {}

BipartiteGraph BipartiteGraph::from_rows(int n, std::vector<std::uint64_t> rows) {
  require_side(n);
  if (rows.size() != static_cast<std::size_t>(n)) {
    throw ParameterError("expected " + std::to_string(n) + " incidence rows, got " +
                         std::to_string(rows.size()));
  }
  const std::uint64_t mask = mask_for(n);
  for (auto r : rows) {
    if ((r & ~mask) != 0) throw ParameterError("incidence row has bits beyond column n");
  }
  return BipartiteGraph(n, std::move(rows));
}

BipartiteGraph BipartiteGraph::from_edges(int n, std::span<const Edge> edges) {
  require_side(n);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw ParameterError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                           ") out of range for n=" + std::to_string(n));
    }
    rows[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
  }
  return BipartiteGraph(n, std::move(rows));
}

bool BipartiteGraph::has_edge(int i, int j) const {
  if (j < 0 || j >= n_) throw ParameterError("column index out of range");
  return (row(i) >> j) & 1U;
}

std::uint64_t BipartiteGraph::side_mask() const noexcept { return mask_for(n_); }

std::int64_t BipartiteGraph::edge_count() const noexcept {
  std::int64_t total = 0;
  for (auto r : rows_) total += std::popcount(r);
  return total;
}

std::vector<int> BipartiteGraph::u_degrees() const {
  std::vector<int> deg(rows_.size());
  std::transform(rows_.begin(), rows_.end(), deg.begin(),
                 [](std::uint64_t r) { return std::popcount(r); });
  return deg;
}

std::vector<int> BipartiteGraph::v_degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (auto r : rows_) {
    while (r != 0) {
      ++deg[static_cast<std::size_t>(std::countr_zero(r))];
      r &= r - 1;
    }
  }
  return deg;
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (int i = 0; i < n_; ++i) {
    auto r = rows_[static_cast<std::size_t>(i)];
    while (r != 0) {
      out.push_back({i, std::countr_zero(r)});
      r &= r - 1;
    }
  }
  return out;
}

DegreePair::DegreePair(int n, std::vector<int> alpha, std::vector<int> beta)
    : n_(n), alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (n < 1) throw ParameterError("side size must be positive");
  const auto len = static_cast<std::size_t>(n);
  if (alpha_.size() != len || beta_.size() != len) {
    throw ParameterError("degree sequences must both have length n=" + std::to_string(n));
  }
  auto in_range = [n](int d) { return d >= 0 && d <= n; };
  if (!std::all_of(alpha_.begin(), alpha_.end(), in_range) ||
      !std::all_of(beta_.begin(), beta_.end(), in_range)) {
    throw ParameterError("degree out of range [0, n]");
  }
  if (!std::is_sorted(alpha_.begin(), alpha_.end(), std::greater<>()) ||
      !std::is_sorted(beta_.begin(), beta_.end(), std::greater<>())) {
    throw ParameterError("degree sequences must be sorted non-increasing");
  }
}

DegreePair DegreePair::from_unsorted(int n, std::vector<int> alpha, std::vector<int> beta) {
  std::sort(alpha.begin(), alpha.end(), std::greater<>());
  std::sort(beta.begin(), beta.end(), std::greater<>());
  return DegreePair(n, std::move(alpha), std::move(beta));
}

bool DegreePair::sums_match() const noexcept {
  return std::accumulate(alpha_.begin(), alpha_.end(), std::int64_t{0}) ==
         std::accumulate(beta_.begin(), beta_.end(), std::int64_t{0});
}

std::int64_t high_diff_bound(int n, int k) {
  return 2 * static_cast<std::int64_t>(k) * (static_cast<std::int64_t>(n) - k);
}

bool in_high_regime(int n, int k) noexcept { return n >= 1 && k <= n && 2 * k > n; }

DegreePair degree_pair(const BipartiteGraph& g) {
  return DegreePair::from_unsorted(g.n(), g.u_degrees(), g.v_degrees());
}

std::int64_t count_high_diff(const DegreePair& dp, int k) {
  require_k(dp.n(), k);
  return count_high_diff(dp.alpha(), dp.beta(), k);
}

std::int64_t count_high_diff(std::span<const int> alpha_desc, std::span<const int> beta_desc,
                             int k) {
  const auto n = static_cast<std::int64_t>(beta_desc.size());
  const auto beta = beta_desc;
  std::int64_t total = 0;
  for (int a : alpha_desc) {
    total += count_at_least(beta, a + k);          // beta_j >= alpha_i + k
    total += n - count_at_least(beta, a - k + 1);  // beta_j <= alpha_i - k
  }
  return total;
}

std::int64_t count_high_diff(const BipartiteGraph& g, int k) {
  return count_high_diff(degree_pair(g), k);
}

std::vector<std::int64_t> high_diff_profile(const DegreePair& dp) {
  const int n = dp.n();
  const auto size = static_cast<std::size_t>(n) + 1;
  std::vector<std::int64_t> hist_a(size, 0);
  std::vector<std::int64_t> hist_b(size, 0);
  for (int a : dp.alpha()) ++hist_a[static_cast<std::size_t>(a)];
  for (int b : dp.beta()) ++hist_b[static_cast<std::size_t>(b)];
  std::vector<std::pair<int, std::int64_t>> values_b;
  for (int b = 0; b <= n; ++b) {
    if (hist_b[static_cast<std::size_t>(b)] != 0) values_b.emplace_back(b, hist_b[static_cast<std::size_t>(b)]);
  }
  std::vector<std::int64_t> by_gap(size, 0);
  for (int a = 0; a <= n; ++a) {
    const auto ca = hist_a[static_cast<std::size_t>(a)];
    if (ca == 0) continue;
    for (const auto& [b, cb] : values_b) by_gap[static_cast<std::size_t>(std::abs(a - b))] += ca * cb;
  }
  for (int k = n - 1; k >= 0; --k) {
    by_gap[static_cast<std::size_t>(k)] += by_gap[static_cast<std::size_t>(k) + 1];
  }
  return by_gap;
}

void require_high_diff_bound(const DegreePair& dp) {
  const int n = dp.n();
  const auto profile = high_diff_profile(dp);
  for (int k = n / 2 + 1; k <= n; ++k) {
    if (profile[static_cast<std::size_t>(k)] > high_diff_bound(n, k)) {
      throw BoundViolation(
          "degree-difference bound exceeded at k=" + std::to_string(k),
          Counterexample{n, k, {dp.alpha().begin(), dp.alpha().end()},
                         {dp.beta().begin(), dp.beta().end()}, std::nullopt});
    }
  }
}

BipartiteGraph make_extremal(int n, int k) {
  require_side(n);
  require_k(n, k);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  const std::uint64_t block = mask_for(k);
  for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)] = block;
  return BipartiteGraph::from_rows(n, std::move(rows));
}

BipartiteGraph complement(const BipartiteGraph& g) {
  std::vector<std::uint64_t> rows(g.rows().begin(), g.rows().end());
  const std::uint64_t mask = g.side_mask();
  for (auto& r : rows) r = ~r & mask;
  return BipartiteGraph::from_rows(g.n(), std::move(rows));
}

LemmaWitness lemma_witness(const DegreePair& dp, int k) {
  const int n = dp.n();
  require_high_regime(n, k);
  if (!dp.sums_match()) throw ParameterError("degree sums differ; pair is not realizable");

  auto first_index = [n, k](std::span<const int> lhs, std::span<const int> rhs) {
    for (int s = 1; s <= n - k + 1; ++s) {
      const auto i = static_cast<std::size_t>(s - 1);
      const auto j = static_cast<std::size_t>(s + k - 2);
      if (lhs[i] <= rhs[j] + k - 1) return s;
    }
    return 0;
  };

  LemmaWitness w{first_index(dp.alpha(), dp.beta()), first_index(dp.beta(), dp.alpha())};
  if (w.s == 0 || w.t == 0) {
    Counterexample ex{n, k, {dp.alpha().begin(), dp.alpha().end()},
                      {dp.beta().begin(), dp.beta().end()}, std::nullopt};
    throw LemmaViolation(std::string("no lemma witness for ") + (w.s == 0 ? "s" : "t"),
                         std::move(ex));
  }
  return w;
}

bool is_extremal_profile(std::span<const int> u_degrees, std::span<const int> v_degrees,
                         int k) {
  const auto n = static_cast<int>(u_degrees.size());
  require_high_regime(n, k);
  if (v_degrees.size() != u_degrees.size()) throw ParameterError("side sizes differ");
  std::vector<int> u(u_degrees.begin(), u_degrees.end());
  std::vector<int> v(v_degrees.begin(), v_degrees.end());
  // Block graph: k vertices of degree k, rest isolated. Complement: k of degree
  // n-k, rest of degree n (sorted descending the n's come first).
  if (matches_profile(u, k, k, 0) && matches_profile(v, k, k, 0)) return true;
  return matches_profile(u, n, n - k, n - k) && matches_profile(v, n, n - k, n - k);
}

bool is_extremal_form(const BipartiteGraph& g, int k) {
  return is_extremal_profile(g.u_degrees(), g.v_degrees(), k);
}

}  // namespace spreadbound
