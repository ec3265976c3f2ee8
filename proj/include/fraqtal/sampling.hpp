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

/// @file
/// Measurement sampling and the canonical histogram digest.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fraqtal/rng.hpp"
#include "fraqtal/sha1.hpp"
#include "fraqtal/statevector.hpp"

namespace fraqtal {

inline constexpr std::uint64_t kDefaultShots = 2048;

struct ShotHistogram {
    int num_qubits = 0;
    std::uint64_t shots = 0;
    std::map<std::string, std::uint64_t> counts;  // bitstring -> count
};

/**
 * Draws `shots` independent basis-state samples from the exact probability
 * vector via inverse-CDF lookup on a seeded splitmix64 stream. Deterministic
 * for fixed (sv, shots, seed).
 */
inline ShotHistogram sample_shots(const Statevector& sv, std::uint64_t shots,
                                  std::uint64_t seed) {
    if (shots == 0) throw std::invalid_argument("sample_shots: shots must be > 0");

    const std::vector<double> probs = probabilities(sv);
    std::vector<double> cdf(probs.size());
    double running = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        running += probs[i];
        cdf[i] = running;
    }
    if (!(running > 0.0))
        throw std::runtime_error("sample_shots: zero-norm statevector");

    ShotHistogram hist{sv.num_qubits, shots, {}};
    std::vector<std::uint64_t> counts(probs.size(), 0);
    SplitMix64 rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.next_double() * running;
        std::size_t lo = 0, hi = cdf.size() - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (cdf[mid] > u)
                hi = mid;
            else
                lo = mid + 1;
        }
        ++counts[lo];
    }
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] > 0)
            hist.counts[basis_bitstring(i, sv.num_qubits)] = counts[i];
    return hist;
}

/**
 * SHA-1 over the canonical serialization "shots=<shots>;" followed by
 * "<bitstring>:<count>;" for every nonzero entry in ascending bitstring
 * order. Invariant under map iteration order and re-runs.
 */
inline std::string probs_digest(const ShotHistogram& hist) {
    Sha1 h;
    h.update("shots=" + std::to_string(hist.shots) + ";");
    for (const auto& [bits, count] : hist.counts) {
        if (count == 0) continue;
        h.update(bits + ":" + std::to_string(count) + ";");
    }
    return h.hex_digest();
}

}  // namespace fraqtal
