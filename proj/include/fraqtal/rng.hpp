// Copyright 2026 The Fraqtal Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Deterministic random number generation. Every random choice in the
 * pipeline (circuit structure, rotation angles, shot sampling, colormap
 * picks, k-means initialization) comes from a splitmix64 stream so that a
 * 64-bit seed reproduces a run bit-for-bit on any platform or thread count.
 */
#pragma once

#include <cstdint>

namespace fraqtal {

/// Purpose constants XOR-ed into a base seed to derive independent
/// per-purpose streams from one seed.
namespace stream {
inline constexpr std::uint64_t kShots = 0xA0761D6478BD642FULL;
inline constexpr std::uint64_t kCmap = 0xE7037ED1A0B428DBULL;
inline constexpr std::uint64_t kShape = 0x8EBC6AF09C88C6E3ULL;
}  // namespace stream

/// One output of the splitmix64 mixing function.
inline constexpr std::uint64_t splitmix64_mix(std::uint64_t x) {
    std::uint64_t z = x + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// splitmix64 stream (Steele, Lea & Flood 2014). Small state, full 64-bit
/// output, identical sequences everywhere for a given seed.
class SplitMix64 {
  public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    constexpr double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). Modulo bias is negligible for the small
    /// ranges used here (n <= a few hundred against 2^64).
    constexpr std::uint64_t next_below(std::uint64_t n) { return next() % n; }

  private:
    std::uint64_t state_;
};

}  // namespace fraqtal
