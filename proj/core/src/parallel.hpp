#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace spreadbound::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Splits [0, total) into contiguous chunks and evaluates fn(begin, end) on
/// each, using up to `threads` workers. Results come back in chunk order, so
/// any order-independent merge of them is identical for every thread count.
template <class Result, class Fn>
std::vector<Result> map_chunks(std::int64_t total, unsigned threads, Fn&& fn) {
  threads = resolve_threads(threads);
  const std::int64_t chunk_count =
      std::clamp<std::int64_t>(static_cast<std::int64_t>(threads) * 8, 1, std::max<std::int64_t>(total, 1));
  const std::int64_t step = (total + chunk_count - 1) / chunk_count;
  std::vector<Result> results(static_cast<std::size_t>(chunk_count));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(chunk_count));

  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (std::int64_t c = next++; c < chunk_count; c = next++) {
      const std::int64_t begin = std::min(total, c * step);
      const std::int64_t end = std::min(total, begin + step);
      try {
        results[static_cast<std::size_t>(c)] = fn(begin, end);
      } catch (...) {
        errors[static_cast<std::size_t>(c)] = std::current_exception();
      }
    }
  };

  const auto workers = std::min<std::int64_t>(threads, chunk_count);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (std::int64_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace spreadbound::detail
