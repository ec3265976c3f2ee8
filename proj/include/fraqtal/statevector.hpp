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
 * Dense statevector simulation and inspection quantities (probabilities,
 * density matrix, Bloch vectors).
 *
 * Index convention: basis index i encodes qubit 0 as the least-significant
 * bit. Displayed bitstrings are written most-significant qubit first.
 */
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fraqtal/circuit.hpp"

namespace fraqtal {

using Complex = std::complex<double>;

struct Statevector {
    int num_qubits = 0;
    std::vector<Complex> amps;

    std::size_t dim() const { return amps.size(); }
};

/// Bitstring for basis index i, most-significant qubit first.
inline std::string basis_bitstring(std::uint64_t index, int num_qubits) {
    std::string s(num_qubits, '0');
    for (int q = 0; q < num_qubits; ++q)
        if (index & (std::uint64_t(1) << q)) s[num_qubits - 1 - q] = '1';
    return s;
}

namespace detail {

inline void apply_single_qubit(std::vector<Complex>& amps, int target,
                               Complex u00, Complex u01, Complex u10,
                               Complex u11) {
    const std::uint64_t bit = std::uint64_t(1) << target;
    const std::uint64_t dim = amps.size();
    for (std::uint64_t base = 0; base < dim; base += 2 * bit) {
        for (std::uint64_t low = 0; low < bit; ++low) {
            const std::uint64_t i0 = base + low;
            const std::uint64_t i1 = i0 + bit;
            const Complex a0 = amps[i0];
            const Complex a1 = amps[i1];
            amps[i0] = u00 * a0 + u01 * a1;
            amps[i1] = u10 * a0 + u11 * a1;
        }
    }
}

inline void apply_cnot(std::vector<Complex>& amps, int control, int target) {
    const std::uint64_t cbit = std::uint64_t(1) << control;
    const std::uint64_t tbit = std::uint64_t(1) << target;
    const std::uint64_t dim = amps.size();
    for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & cbit) && !(i & tbit)) std::swap(amps[i], amps[i | tbit]);
}

inline void apply_cphase(std::vector<Complex>& amps, int control, int target,
                         double angle) {
    const std::uint64_t mask =
        (std::uint64_t(1) << control) | (std::uint64_t(1) << target);
    const Complex phase = std::polar(1.0, angle);
    const std::uint64_t dim = amps.size();
    for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & mask) == mask) amps[i] *= phase;
}

/// Reflection about the uniform superposition: a_i -> 2*mean(a) - a_i.
inline void apply_diffusion(std::vector<Complex>& amps) {
    Complex sum = 0.0;
    for (const Complex& a : amps) sum += a;
    const Complex twice_mean = 2.0 * sum / static_cast<double>(amps.size());
    for (Complex& a : amps) a = twice_mean - a;
}

}  // namespace detail

/// Applies the circuit to |0...0> with dense in-place updates.
/// The result is unit-norm to within 1e-10 (gates are unitary).
inline Statevector simulate(const Circuit& circuit) {
    const int n = circuit.num_qubits;
    if (n < 1 || n > kMaxQubits)
        throw std::invalid_argument("simulate: num_qubits must be in [1, 16]");

    Statevector sv{n, std::vector<Complex>(std::uint64_t(1) << n, 0.0)};
    sv.amps[0] = 1.0;
    constexpr double kInvSqrt2 = 0.70710678118654752440;

    for (const Gate& g : circuit.gates) {
        if (g.target < 0 || g.target >= n ||
            (g.control >= 0 && (g.control >= n || g.control == g.target)))
            throw std::invalid_argument("simulate: gate qubit out of range");
        switch (g.kind) {
            case GateKind::H:
                detail::apply_single_qubit(sv.amps, g.target, kInvSqrt2,
                                           kInvSqrt2, kInvSqrt2, -kInvSqrt2);
                break;
            case GateKind::RX: {
                const double c = std::cos(g.angle / 2);
                const double s = std::sin(g.angle / 2);
                detail::apply_single_qubit(sv.amps, g.target, c,
                                           Complex(0, -s), Complex(0, -s), c);
                break;
            }
            case GateKind::RY: {
                const double c = std::cos(g.angle / 2);
                const double s = std::sin(g.angle / 2);
                detail::apply_single_qubit(sv.amps, g.target, c, -s, s, c);
                break;
            }
            case GateKind::RZ: {
                const Complex em = std::polar(1.0, -g.angle / 2);
                const Complex ep = std::polar(1.0, g.angle / 2);
                detail::apply_single_qubit(sv.amps, g.target, em, 0.0, 0.0,
                                           ep);
                break;
            }
            case GateKind::CP:
                detail::apply_cphase(sv.amps, g.control, g.target, g.angle);
                break;
            case GateKind::CNOT:
                detail::apply_cnot(sv.amps, g.control, g.target);
                break;
            case GateKind::ORACLE:
                if (g.marked >= sv.dim())
                    throw std::invalid_argument("simulate: marked state out of range");
                sv.amps[g.marked] = -sv.amps[g.marked];
                break;
            case GateKind::DIFFUSION:
                detail::apply_diffusion(sv.amps);
                break;
        }
    }
    return sv;
}

/// p_i = |amps[i]|^2.
inline std::vector<double> probabilities(const Statevector& sv) {
    std::vector<double> probs(sv.dim());
    for (std::size_t i = 0; i < sv.dim(); ++i) probs[i] = std::norm(sv.amps[i]);
    return probs;
}

inline double norm_squared(const Statevector& sv) {
    double total = 0.0;
    for (const Complex& a : sv.amps) total += std::norm(a);
    return total;
}

struct DensityMatrix {
    std::size_t dim = 0;
    std::vector<Complex> entries;  // row-major dim x dim

    Complex at(std::size_t row, std::size_t col) const {
        return entries[row * dim + col];
    }
};

/// rho = |psi><psi|. Hermitian, trace 1, purity 1 for any unit statevector.
inline DensityMatrix density_matrix(const Statevector& sv) {
    const std::size_t d = sv.dim();
    DensityMatrix rho{d, std::vector<Complex>(d * d)};
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            rho.entries[r * d + c] = sv.amps[r] * std::conj(sv.amps[c]);
    return rho;
}

inline double purity(const DensityMatrix& rho) {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    double total = 0.0;
    for (const Complex& e : rho.entries) total += std::norm(e);
    return total;
}

struct BlochVector {
    double x = 0.0, y = 0.0, z = 0.0;

    double length() const { return std::sqrt(x * x + y * y + z * z); }
};

/// Traces out all qubits but `qubit` and converts the reduced 2x2 density
/// matrix to Bloch coordinates.
inline BlochVector bloch_vector(const Statevector& sv, int qubit) {
    if (qubit < 0 || qubit >= sv.num_qubits)
        throw std::invalid_argument("bloch_vector: qubit out of range");

    const std::uint64_t bit = std::uint64_t(1) << qubit;
    double rho00 = 0.0, rho11 = 0.0;
    Complex rho01 = 0.0;
    for (std::uint64_t i = 0; i < sv.dim(); ++i) {
        if (i & bit) continue;
        const Complex a0 = sv.amps[i];
        const Complex a1 = sv.amps[i | bit];
        rho00 += std::norm(a0);
        rho11 += std::norm(a1);
        rho01 += a0 * std::conj(a1);
    }
    return {2.0 * rho01.real(), -2.0 * rho01.imag(), rho00 - rho11};
}

}  // namespace fraqtal
