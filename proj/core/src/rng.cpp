#include "spreadbound/rng.hpp"

#include <array>

namespace spreadbound {
namespace {

// FNV-1a; stable across platforms, unlike std::hash.
constexpr std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr std::uint32_t lo(std::uint64_t v) { return static_cast<std::uint32_t>(v); }
constexpr std::uint32_t hi(std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); }

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
  const std::uint64_t h = fnv1a(tag);
  std::seed_seq seq{lo(seed), hi(seed), lo(h), hi(h), lo(index), hi(index)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (std::uint64_t{out[1]} << 32) | out[0];
}

Engine make_engine(std::uint64_t seed) {
  std::seed_seq seq{lo(seed), hi(seed)};
  return Engine(seq);
}

}  // namespace spreadbound
