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
 * Circuit representation and construction: seeded random circuits plus the
 * GHZ / Grover-like / QFT presets. A circuit is an ordered gate list; the
 * same (seed, num_qubits, depth) always reproduces the same list.
 */
#pragma once

#include <cstdint>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "fraqtal/rng.hpp"

namespace fraqtal {

enum class GateKind { H, RX, RY, RZ, CP, CNOT, ORACLE, DIFFUSION };

inline const char* gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::RX: return "RX";
        case GateKind::RY: return "RY";
        case GateKind::RZ: return "RZ";
        case GateKind::CP: return "CP";
        case GateKind::CNOT: return "CNOT";
        case GateKind::ORACLE: return "ORACLE";
        case GateKind::DIFFUSION: return "DIFFUSION";
    }
    return "?";
}

/// One gate. `control` is -1 when absent. `marked` is the flipped basis
/// state for ORACLE. ORACLE and DIFFUSION act on the whole register and are
/// simulator-native: they have no hardware decomposition here and are
/// flagged as such in printouts.
struct Gate {
    GateKind kind;
    int target = 0;
    int control = -1;
    double angle = 0.0;
    std::uint64_t marked = 0;

    static Gate single(GateKind k, int target) { return {k, target}; }
    static Gate rotation(GateKind k, int target, double angle) {
        return {k, target, -1, angle};
    }
    static Gate cnot(int control, int target) {
        return {GateKind::CNOT, target, control};
    }
    static Gate cphase(int control, int target, double angle) {
        return {GateKind::CP, target, control, angle};
    }
    static Gate oracle(std::uint64_t marked) {
        return {GateKind::ORACLE, 0, -1, 0.0, marked};
    }
    static Gate diffusion() { return {GateKind::DIFFUSION, 0}; }

    bool is_simulator_native() const {
        return kind == GateKind::ORACLE || kind == GateKind::DIFFUSION;
    }
};

struct Circuit {
    int num_qubits = 1;
    int depth = 0;
    std::vector<Gate> gates;
    std::uint64_t seed = 0;
};

enum class PresetFamily { GHZ, GroverLike, Qft };

inline constexpr int kMaxQubits = 16;
inline constexpr int kMaxDepth = 64;

/**
 * Builds a random layered circuit. Each layer draws one gate per qubit
 * uniformly from {H, RX, RY, RZ} (rotation angles uniform in [0, 2pi)),
 * then appends one CNOT on a random ordered qubit pair when the register
 * has at least two qubits. All draws come from one splitmix64 stream
 * seeded with `seed`.
 */
inline Circuit build_random_circuit(std::uint64_t seed, int num_qubits,
                                    int depth) {
    if (num_qubits < 1 || num_qubits > kMaxQubits)
        throw std::invalid_argument("build_random_circuit: num_qubits must be in [1, 16]");
    if (depth < 0 || depth > kMaxDepth)
        throw std::invalid_argument("build_random_circuit: depth must be in [0, 64]");

    Circuit circuit{num_qubits, depth, {}, seed};
    SplitMix64 rng(seed);
    constexpr GateKind kSingleQubitPool[] = {GateKind::H, GateKind::RX,
                                             GateKind::RY, GateKind::RZ};
    for (int layer = 0; layer < depth; ++layer) {
        for (int q = 0; q < num_qubits; ++q) {
            GateKind kind = kSingleQubitPool[rng.next_below(4)];
            if (kind == GateKind::H) {
                circuit.gates.push_back(Gate::single(kind, q));
            } else {
                double angle = 2.0 * std::numbers::pi * rng.next_double();
                circuit.gates.push_back(Gate::rotation(kind, q, angle));
            }
        }
        if (num_qubits >= 2) {
            int control = static_cast<int>(rng.next_below(num_qubits));
            int target = static_cast<int>(rng.next_below(num_qubits - 1));
            if (target >= control) ++target;
            circuit.gates.push_back(Gate::cnot(control, target));
        }
    }
    return circuit;
}

/**
 * Builds a named preset.
 *
 * GHZ: H(0) then a CNOT chain. GroverLike: H on every qubit, then
 * `iterations` repetitions of [ORACLE(marked), DIFFUSION]. Qft: the
 * standard quantum Fourier transform with controlled-phase ladders and a
 * final qubit-reversing swap network (each swap spelled as 3 CNOTs).
 * `iterations` and `marked` only apply to GroverLike.
 */
inline Circuit preset_circuit(PresetFamily family, int num_qubits,
                              int iterations = 1, std::uint64_t marked = 0) {
    if (num_qubits < 1 || num_qubits > kMaxQubits)
        throw std::invalid_argument("preset_circuit: num_qubits must be in [1, 16]");

    Circuit circuit{num_qubits, 0, {}, 0};
    switch (family) {
        case PresetFamily::GHZ: {
            circuit.gates.push_back(Gate::single(GateKind::H, 0));
            for (int q = 0; q + 1 < num_qubits; ++q)
                circuit.gates.push_back(Gate::cnot(q, q + 1));
            break;
        }
        case PresetFamily::GroverLike: {
            if (iterations < 0)
                throw std::invalid_argument("preset_circuit: iterations must be >= 0");
            if (marked >= (std::uint64_t(1) << num_qubits))
                throw std::invalid_argument("preset_circuit: marked state out of range");
            for (int q = 0; q < num_qubits; ++q)
                circuit.gates.push_back(Gate::single(GateKind::H, q));
            for (int it = 0; it < iterations; ++it) {
                circuit.gates.push_back(Gate::oracle(marked));
                circuit.gates.push_back(Gate::diffusion());
            }
            break;
        }
        case PresetFamily::Qft: {
            for (int q = num_qubits - 1; q >= 0; --q) {
                circuit.gates.push_back(Gate::single(GateKind::H, q));
                for (int j = q - 1; j >= 0; --j) {
                    double angle = std::numbers::pi /
                                   static_cast<double>(std::uint64_t(1) << (q - j));
                    circuit.gates.push_back(Gate::cphase(j, q, angle));
                }
            }
            for (int q = 0; q < num_qubits / 2; ++q) {
                int r = num_qubits - 1 - q;
                circuit.gates.push_back(Gate::cnot(q, r));
                circuit.gates.push_back(Gate::cnot(r, q));
                circuit.gates.push_back(Gate::cnot(q, r));
            }
            break;
        }
    }
    return circuit;
}

/// Debug dump, one gate per line:
/// "<kind> q<target>[, q<control>][, angle=<rad 6dp>]". Simulator-native
/// gates carry a "[simulator-native]" flag.
inline std::string circuit_to_string(const Circuit& circuit) {
    std::string out;
    char buf[96];
    for (const Gate& g : circuit.gates) {
        switch (g.kind) {
            case GateKind::H:
                std::snprintf(buf, sizeof buf, "H q%d", g.target);
                break;
            case GateKind::RX:
            case GateKind::RY:
            case GateKind::RZ:
                std::snprintf(buf, sizeof buf, "%s q%d, angle=%.6f",
                              gate_kind_name(g.kind), g.target, g.angle);
                break;
            case GateKind::CP:
                std::snprintf(buf, sizeof buf, "CP q%d, q%d, angle=%.6f",
                              g.target, g.control, g.angle);
                break;
            case GateKind::CNOT:
                std::snprintf(buf, sizeof buf, "CNOT q%d, q%d", g.target,
                              g.control);
                break;
            case GateKind::ORACLE:
                std::snprintf(buf, sizeof buf,
                              "ORACLE q%d, marked=%llu [simulator-native]",
                              g.target,
                              static_cast<unsigned long long>(g.marked));
                break;
            case GateKind::DIFFUSION:
                std::snprintf(buf, sizeof buf,
                              "DIFFUSION q%d [simulator-native]", g.target);
                break;
        }
        out += buf;
        out += '\n';
    }
    return out;
}

}  // namespace fraqtal
