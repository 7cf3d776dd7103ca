#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace spreadbound {

using Engine = std::mt19937_64;

/// Seed for an independent stream keyed by (seed, tag, index). Streams for
/// distinct keys are derived through std::seed_seq and do not depend on the
/// order in which they are created.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index = 0);

Engine make_engine(std::uint64_t seed);

/// Uniform double in [0, 1) built from the top 53 bits of one draw.
inline double unit_uniform(Engine& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace spreadbound
