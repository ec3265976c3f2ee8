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
 * Maps measurement statistics to Julia rendering parameters.
 *
 * The complex constant is an affine perturbation of c0 = -0.7 + 0.27i by
 * the first two qubit marginals, with amplitude 0.06 per axis, so c always
 * stays inside the box [-0.76, -0.64] x [0.21, 0.33]. The third marginal
 * picks the exponent; the colormap comes from a classical seeded draw so
 * palette choice never feeds back into the fractal shape.
 */
#pragma once

#include <cstdint>
#include <stdexcept>

#include "fraqtal/colormap.hpp"
#include "fraqtal/rng.hpp"
#include "fraqtal/sampling.hpp"

namespace fraqtal {

struct JuliaParams {
    double c_real = 0.0;
    double c_imag = 0.0;
    int power = 2;  // Julia exponent d
    CmapName cmap = CmapName::Turbo;
};

inline constexpr double kBaseCReal = -0.7;
inline constexpr double kBaseCImag = 0.27;
inline constexpr double kPerturbation = 0.06;
inline constexpr double kCRealMin = kBaseCReal - kPerturbation;
inline constexpr double kCRealMax = kBaseCReal + kPerturbation;
inline constexpr double kCImagMin = kBaseCImag - kPerturbation;
inline constexpr double kCImagMax = kBaseCImag + kPerturbation;

/// Fraction of shots in which `qubit` reads 1.
inline double marginal_one_prob(const ShotHistogram& hist, int qubit) {
    if (qubit < 0 || qubit >= hist.num_qubits)
        throw std::invalid_argument("marginal_one_prob: qubit out of range");
    // Bitstrings are most-significant qubit first.
    const std::size_t pos = static_cast<std::size_t>(hist.num_qubits - 1 - qubit);
    std::uint64_t ones = 0;
    for (const auto& [bits, count] : hist.counts)
        if (bits[pos] == '1') ones += count;
    return static_cast<double>(ones) / static_cast<double>(hist.shots);
}

inline JuliaParams derive_julia_params(const ShotHistogram& hist,
                                       std::uint64_t seed) {
    if (hist.num_qubits < 3)
        throw std::invalid_argument("derive_julia_params: need at least 3 qubits");

    const double p0 = marginal_one_prob(hist, 0);
    const double p1 = marginal_one_prob(hist, 1);
    const double p2 = marginal_one_prob(hist, 2);

    JuliaParams params;
    params.c_real = kBaseCReal + kPerturbation * (2.0 * p0 - 1.0);
    params.c_imag = kBaseCImag + kPerturbation * (2.0 * p1 - 1.0);
    params.power = p2 < 0.6 ? 2 : (p2 < 0.85 ? 3 : 4);
    params.cmap = static_cast<CmapName>(
        splitmix64_mix(seed ^ stream::kCmap) % kCmapCount);
    return params;
}

}  // namespace fraqtal
