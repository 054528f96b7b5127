#pragma once

#include <cstdint>
#include <string>

#include "braidkit/braid_word.hpp"

namespace braidkit {

/// Named deterministic generator used for every sampled check; the name is
/// part of the report version so sampled expectations stay reproducible.
inline constexpr const char* kRngName = "splitmix64.v1";

struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

/// Mixes a base seed with a label and parameters so every sampled check
/// instance draws from its own substream, independent of scheduling.
std::uint64_t derive_seed(std::uint64_t base, const std::string& label,
                          std::uint64_t a, std::uint64_t b);

/// Uniform random freely reduced word of length at most max_len.
BraidWord random_braid_word(SplitMix64& rng, int n, int max_len);

/// Random word with exponent sum zero (balanced signed letters, shuffled).
BraidWord random_zero_exponent_word(SplitMix64& rng, int n, int max_len);

/// Inserts a random defining relator (braid relation, far commutation, or
/// a cancelling pair) at a random position; the element is unchanged.
BraidWord insert_random_relator(SplitMix64& rng, const BraidWord& w);

}  // namespace braidkit
