// Copyright 2026 The chibench authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <variant>
#include <vector>

#include "chibench/states.hpp"

// Gate-level model of the two-qubit transformation applied to photon B:
// an open-controlled NOT, Hadamard and Z on the polarization wire, a
// closed-controlled NOT, and an optional final swap of the two wires.

namespace chibench {

enum class Wire { p, o };

struct ControlledNot {
    Wire ctrl;
    Wire target;
    int ctrl_value;  // gate fires when the control qubit equals this
    bool operator==(const ControlledNot&) const = default;
};
struct HadamardGate {
    Wire wire;
    bool operator==(const HadamardGate&) const = default;
};
struct PauliXGate {
    Wire wire;
    bool operator==(const PauliXGate&) const = default;
};
struct PauliYGate {
    Wire wire;
    bool operator==(const PauliYGate&) const = default;
};
struct PauliZGate {
    Wire wire;
    bool operator==(const PauliZGate&) const = default;
};
struct SwapGate {
    bool operator==(const SwapGate&) const = default;
};

using Gate = std::variant<ControlledNot, HadamardGate, PauliXGate, PauliYGate, PauliZGate, SwapGate>;

struct Circuit {
    std::vector<Gate> gates;  // first gate applied first
};

// The photon-B preparation circuit. The trailing swap only reorders the
// two wires so that OAM becomes the third qubit of the pair.
inline Circuit preparation_circuit(bool include_swap) {
    Circuit c;
    c.gates = {
        Gate{ControlledNot{Wire::p, Wire::o, 0}},
        Gate{HadamardGate{Wire::p}},
        Gate{PauliZGate{Wire::p}},
        Gate{ControlledNot{Wire::p, Wire::o, 1}},
    };
    if (include_swap) c.gates.push_back(Gate{SwapGate{}});
    return c;
}

inline ComplexMatrix single_qubit_on_wire(const ComplexMatrix& g, Wire w) {
    const ComplexMatrix id = ComplexMatrix::identity(2);
    return w == Wire::p ? tensor(g, id) : tensor(id, g);
}

inline ComplexMatrix gate_unitary(const Gate& g) {
    return std::visit(
        [](const auto& gate) -> ComplexMatrix {
            using T = std::decay_t<decltype(gate)>;
            if constexpr (std::is_same_v<T, ControlledNot>) {
                if (gate.ctrl == gate.target) throw std::invalid_argument("ControlledNot: ctrl == target");
                if (gate.ctrl_value != 0 && gate.ctrl_value != 1) {
                    throw std::invalid_argument("ControlledNot: ctrl_value must be 0 or 1");
                }
                ComplexMatrix u(4);
                for (int p = 0; p < 2; ++p) {
                    for (int o = 0; o < 2; ++o) {
                        const int ctrl_bit = gate.ctrl == Wire::p ? p : o;
                        int pp = p, oo = o;
                        if (ctrl_bit == gate.ctrl_value) {
                            if (gate.target == Wire::p) pp ^= 1;
                            else oo ^= 1;
                        }
                        u(2 * pp + oo, 2 * p + o) = 1.0;
                    }
                }
                return u;
            } else if constexpr (std::is_same_v<T, HadamardGate>) {
                const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
                return single_qubit_on_wire(
                    ComplexMatrix::from_rows({{inv_sqrt2, inv_sqrt2}, {inv_sqrt2, -inv_sqrt2}}), gate.wire);
            } else if constexpr (std::is_same_v<T, PauliXGate>) {
                return single_qubit_on_wire(pauli_matrix(Pauli::X), gate.wire);
            } else if constexpr (std::is_same_v<T, PauliYGate>) {
                return single_qubit_on_wire(pauli_matrix(Pauli::Y), gate.wire);
            } else if constexpr (std::is_same_v<T, PauliZGate>) {
                return single_qubit_on_wire(pauli_matrix(Pauli::Z), gate.wire);
            } else {
                ComplexMatrix u(4);
                for (int p = 0; p < 2; ++p)
                    for (int o = 0; o < 2; ++o) u(2 * o + p, 2 * p + o) = 1.0;
                return u;
            }
        },
        g);
}

// Product in application order: later gates multiply from the left.
inline ComplexMatrix circuit_unitary(const Circuit& c) {
    ComplexMatrix u = ComplexMatrix::identity(4);
    for (const auto& g : c.gates) u = gate_unitary(g) * u;
    return u;
}

// Target superposition for each photon-B basis state, order
// |00>, |01>, |10>, |11>.
inline ComplexVector target_superposition(int basis) {
    if (basis < 0 || basis > 3) throw std::invalid_argument("target_superposition: basis index out of range");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    ComplexVector v(4);
    switch (basis) {
        case 0b00: v[0b10] = inv_sqrt2; v[0b01] = -inv_sqrt2; break;
        case 0b01: v[0b00] = inv_sqrt2; v[0b11] = -inv_sqrt2; break;
        case 0b10: v[0b00] = inv_sqrt2; v[0b11] = inv_sqrt2; break;
        case 0b11: v[0b10] = inv_sqrt2; v[0b01] = inv_sqrt2; break;
    }
    return v;
}

// (I4 x u) s: transforms photon B's composite state in place of slots 3,4,
// which must hold (polB, oamB) in that order.
inline PairState apply_to_photon_b(const PairState& s, const ComplexMatrix& u) {
    if (u.dim() != 4) throw std::invalid_argument("apply_to_photon_b: u must be 4x4");
    if (s.roles[2] != QubitRole::polB || s.roles[3] != QubitRole::oamB) {
        throw std::invalid_argument("apply_to_photon_b: slots 3,4 must be (polB, oamB)");
    }
    ComplexVector out(16);
    for (int ab = 0; ab < 4; ++ab) {
        for (int row = 0; row < 4; ++row) {
            Complex acc{};
            for (int col = 0; col < 4; ++col) acc += u(row, col) * s.amps[4 * ab + col];
            out[4 * ab + row] = acc;
        }
    }
    return PairState{std::move(out), s.roles};
}

// End-to-end gate-level preparation: run the circuit (with swap) on photon
// B of the source pair, reinterpret the slots in chi order, then apply the
// local Paulis on photon A's two qubits.
inline PairState prepare_chi(Pauli i, Pauli j) {
    PairState s = apply_to_photon_b(x_state(), circuit_unitary(preparation_circuit(true)));
    s = reinterpret_roles(s, kChiRoles);
    return apply_local_pauli(s, i, j);
}

}  // namespace chibench
