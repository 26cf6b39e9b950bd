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

#include <array>
#include <stdexcept>
#include <string>

#include "chibench/qmath.hpp"

// Named two-photon states and their constructors.
//
// Qubit conventions used throughout:
//   * one photon carries two qubits, polarization p and OAM o, with
//     |0>^p = H, |1>^p = V, |0>^o = R (l = +1), |1>^o = L (l = -1);
//   * a single-photon composite basis index is 2p + o;
//   * a pair-state basis index is 8*q1 + 4*q2 + 2*q3 + q4, the leftmost
//     ket symbol being the most significant bit (matching the tensor
//     convention in qmath).

namespace chibench {

enum class QubitRole { polA, oamA, polB, oamB };

using RoleOrder = std::array<QubitRole, 4>;

// Physical emission order: photon A's qubits then photon B's.
inline constexpr RoleOrder kSourceRoles = {QubitRole::polA, QubitRole::oamA, QubitRole::polB,
                                           QubitRole::oamB};
// Slot order used by the chi family: photon B's OAM is the third qubit.
inline constexpr RoleOrder kChiRoles = {QubitRole::polA, QubitRole::oamA, QubitRole::oamB,
                                        QubitRole::polB};

inline const char* role_name(QubitRole r) {
    switch (r) {
        case QubitRole::polA: return "polA";
        case QubitRole::oamA: return "oamA";
        case QubitRole::polB: return "polB";
        case QubitRole::oamB: return "oamB";
    }
    throw std::logic_error("role_name: bad role");
}

// Composite state of a single photon, basis |p o>, index 2p + o.
struct PhotonState {
    ComplexVector amps;  // dim 4

    static PhotonState basis(int p, int o) {
        if (p < 0 || p > 1 || o < 0 || o > 1) throw std::invalid_argument("PhotonState::basis: bits must be 0 or 1");
        PhotonState s{ComplexVector(4)};
        s.amps[2 * p + o] = 1.0;
        return s;
    }
};

// Four-qubit state of a photon pair plus the declared meaning of each slot.
struct PairState {
    ComplexVector amps;  // dim 16
    RoleOrder roles;
};

inline void require_dim(const ComplexVector& v, int dim, const char* what) {
    if (v.dim() != dim) throw std::invalid_argument(std::string(what) + ": wrong dimension");
}

inline PairState make_pair_state(ComplexVector amps, const RoleOrder& roles) {
    require_dim(amps, 16, "PairState");
    return PairState{std::move(amps), roles};
}

// Reads the same amplitudes with the slots reassigned to new roles. This is
// bookkeeping only; no physical transformation happens.
inline PairState reinterpret_roles(const PairState& s, const RoleOrder& roles) {
    return PairState{s.amps, roles};
}

enum class Pauli { I = 0, X = 1, Y = 2, Z = 3 };

inline Pauli pauli_from_index(int i) {
    if (i < 0 || i > 3) throw std::invalid_argument("pauli index must be in 0..3");
    return static_cast<Pauli>(i);
}

// sigma^y = [[0,-i],[i,0]] project-wide.
inline ComplexMatrix pauli_matrix(Pauli p) {
    const Complex i{0.0, 1.0};
    switch (p) {
        case Pauli::I: return ComplexMatrix::identity(2);
        case Pauli::X: return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
        case Pauli::Y: return ComplexMatrix::from_rows({{0.0, -i}, {i, 0.0}});
        case Pauli::Z: return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
    }
    throw std::logic_error("pauli_matrix: bad index");
}

inline ComplexVector bell_phi_plus() {
    ComplexVector v(4);
    v[0b00] = v[0b11] = 1.0 / std::sqrt(2.0);
    return v;
}

inline ComplexVector bell_psi_plus() {
    ComplexVector v(4);
    v[0b01] = v[0b10] = 1.0 / std::sqrt(2.0);
    return v;
}

inline ComplexVector ghz(int n) {
    if (n != 3 && n != 4) throw std::invalid_argument("ghz: n must be 3 or 4");
    ComplexVector v(1 << n);
    v[0] = v[(1 << n) - 1] = 1.0 / std::sqrt(2.0);
    return v;
}

inline ComplexVector w_state(int n) {
    if (n != 3 && n != 4) throw std::invalid_argument("w_state: n must be 3 or 4");
    ComplexVector v(1 << n);
    for (int i = 0; i < n; ++i) v[1 << i] = 1.0 / std::sqrt(static_cast<double>(n));
    return v;
}

// The hyper-entangled pair written as a superposition of photon product
// states: (|00>|01> + |01>|00> + |10>|11> + |11>|10>)/2, slots
// (polA, oamA, polB, oamB). Swapping photons A and B leaves it unchanged.
inline PairState x_state() {
    ComplexVector v(16);
    v[0b0001] = v[0b0100] = v[0b1011] = v[0b1110] = 0.5;
    return make_pair_state(std::move(v), kSourceRoles);
}

inline ComplexVector zeta(int k) {
    ComplexVector v(16);
    if (k == 0) {
        v[0b0000] = 0.5;
        v[0b0011] = -0.5;
        v[0b0101] = -0.5;
        v[0b0110] = 0.5;
    } else if (k == 1) {
        v[0b1001] = 0.5;
        v[0b1010] = 0.5;
        v[0b1100] = 0.5;
        v[0b1111] = 0.5;
    } else {
        throw std::invalid_argument("zeta: k must be 0 or 1");
    }
    return v;
}

inline ComplexVector lambda_component(int k) {
    if (k == 1) return zeta(1);
    if (k != 0) throw std::invalid_argument("lambda_component: k must be 0 or 1");
    ComplexVector v(16);
    v[0b0000] = 0.5;
    v[0b0011] = -0.5;
    v[0b0110] = -0.5;
    v[0b0101] = 0.5;
    return v;
}

// (sigma^i x sigma^j x I x I) s, acting on the first two slots.
inline PairState apply_local_pauli(const PairState& s, Pauli i, Pauli j) {
    const ComplexMatrix op = tensor(tensor(pauli_matrix(i), pauli_matrix(j)), ComplexMatrix::identity(4));
    return PairState{op * s.amps, s.roles};
}

// chi^{ij} = (sigma^i x sigma^j x I x I)(zeta^0 + zeta^1)/sqrt(2),
// slots (polA, oamA, oamB, polB).
inline PairState chi_state(Pauli i, Pauli j) {
    ComplexVector base(16);
    const ComplexVector z0 = zeta(0), z1 = zeta(1);
    for (int k = 0; k < 16; ++k) base[k] = (z0[k] + z1[k]) / std::sqrt(2.0);
    return apply_local_pauli(make_pair_state(std::move(base), kChiRoles), i, j);
}

// The swap-free variant (lambda^0 + lambda^1)/sqrt(2), slots
// (polA, oamA, polB, oamB).
inline PairState chi_lee() {
    ComplexVector v(16);
    const ComplexVector l0 = lambda_component(0), l1 = lambda_component(1);
    for (int k = 0; k < 16; ++k) v[k] = (l0[k] + l1[k]) / std::sqrt(2.0);
    return make_pair_state(std::move(v), kSourceRoles);
}

// |<a|b>|^2. Role orders must match exactly; a mismatch is an error rather
// than an implicit permutation, because slot reordering is precisely where
// silent bugs would hide.
inline double fidelity(const PairState& a, const PairState& b) {
    if (a.roles != b.roles) {
        throw std::invalid_argument(std::string("fidelity: role order mismatch (") + role_name(a.roles[0]) +
                                    "... vs " + role_name(b.roles[0]) + "...)");
    }
    return std::norm(inner_product(a.amps, b.amps));
}

}  // namespace chibench
