#pragma once

#include <cstdint>

#include "gaw/error.hpp"

// Deterministic pseudo-random source shared by every generator.
//
// The recurrence is xorshift64* (Marsaglia 2003, Vigna 2016):
//   x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27;  output = x * 2685821657736338717
// State is a single nonzero 64-bit word, so sequences are bit-identical on
// every platform. Unit doubles are derived as (top 53 bits) / 2^53, which is
// exact in IEEE-754 binary64 and therefore also bit-reproducible.

namespace gaw::rng {

// Seed 0 would freeze xorshift at zero forever; it is remapped to this
// constant (2^64 / golden ratio, an arbitrary odd word).
inline constexpr std::uint64_t kZeroSeedReplacement = 0x9E3779B97F4A7C15ull;

// Salt for deriving independent stream seeds: stream_seed = seed ^ (index * salt).
inline constexpr std::uint64_t kStreamSalt = 0xA24BAED4963EE407ull;

struct State {
  std::uint64_t s = kZeroSeedReplacement;
};

constexpr State seeded(std::uint64_t seed) noexcept {
  return State{seed == 0 ? kZeroSeedReplacement : seed};
}

// Documented derivation for parallel generation: stream 0 is the base seed.
constexpr State seeded_stream(std::uint64_t seed, std::uint64_t stream) noexcept {
  return seeded(seed ^ (stream * kStreamSalt));
}

constexpr std::uint64_t next_u64(State& st) noexcept {
  std::uint64_t x = st.s;
  x ^= x >> 12;
  x ^= x << 25;
  x ^= x >> 27;
  st.s = x;
  return x * 0x2545F4914F6CDD1Dull;
}

// Uniform in [0, 1), 53-bit resolution.
inline double next_unit(State& st) noexcept {
  return static_cast<double>(next_u64(st) >> 11) * 0x1.0p-53;
}

// Uniform over the inclusive range [lo, hi]. Derived from next_unit only, so
// integer and real draws stay in lockstep across platforms. Always consumes
// exactly one unit draw (two for the full 64-bit span, which floor() cannot
// index with a single 53-bit double).
inline std::int64_t next_int(State& st, std::int64_t lo, std::int64_t hi) {
  if (lo > hi)
    fail(ErrorCode::invalid_argument,
         "next_int: invalid range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  std::uint64_t offset;
  if (span == 0) { // full 64-bit range
    const auto hi32 = static_cast<std::uint64_t>(next_unit(st) * 0x1.0p32);
    const auto lo32 = static_cast<std::uint64_t>(next_unit(st) * 0x1.0p32);
    offset = (hi32 << 32) | lo32;
  } else {
    offset = static_cast<std::uint64_t>(next_unit(st) * static_cast<double>(span));
    if (offset >= span) offset = span - 1;
  }
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + offset);
}

} // namespace gaw::rng
