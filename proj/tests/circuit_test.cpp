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

#include "chibench/circuit.hpp"

#include <gtest/gtest.h>

#include "oracle_helpers.hpp"

using namespace chibench;

TEST(PreparationCircuit, GateListWithSwap) {
    const Circuit c = preparation_circuit(true);
    ASSERT_EQ(c.gates.size(), 5u);
    EXPECT_TRUE(std::holds_alternative<SwapGate>(c.gates.back()));
    const auto* first = std::get_if<ControlledNot>(&c.gates.front());
    ASSERT_NE(first, nullptr);
    EXPECT_EQ(first->ctrl_value, 0);
    EXPECT_EQ(first->ctrl, Wire::p);
    EXPECT_EQ(first->target, Wire::o);
}

TEST(PreparationCircuit, GateListWithoutSwap) { EXPECT_EQ(preparation_circuit(false).gates.size(), 4u); }

TEST(GateUnitary, SwapExchangesWires) {
    const ComplexMatrix sw = gate_unitary(Gate{SwapGate{}});
    ComplexVector in(4);
    in[0b01] = 1.0;
    const ComplexVector out = sw * in;
    EXPECT_EQ(out[0b10], Complex{1.0});
    EXPECT_EQ(out[0b01], Complex{});
}

TEST(GateUnitary, RejectsDegenerateControlledNot) {
    EXPECT_THROW(gate_unitary(Gate{ControlledNot{Wire::p, Wire::p, 0}}), std::invalid_argument);
    EXPECT_THROW(gate_unitary(Gate{ControlledNot{Wire::p, Wire::o, 2}}), std::invalid_argument);
}

TEST(CircuitUnitary, ZeroKetTargetsWithAndWithoutSwap) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    ComplexVector in(4);
    in[0b00] = 1.0;

    const ComplexVector with_swap = circuit_unitary(preparation_circuit(true)) * in;
    EXPECT_NEAR(with_swap[0b10].real(), inv_sqrt2, 1e-15);
    EXPECT_NEAR(with_swap[0b01].real(), -inv_sqrt2, 1e-15);

    const ComplexVector without = circuit_unitary(preparation_circuit(false)) * in;
    EXPECT_NEAR(without[0b01].real(), inv_sqrt2, 1e-15);
    EXPECT_NEAR(without[0b10].real(), -inv_sqrt2, 1e-15);
}

TEST(CircuitUnitary, ColumnsReproduceTheTargetMap) {
    const ComplexMatrix u = circuit_unitary(preparation_circuit(true));
    for (int basis = 0; basis < 4; ++basis) {
        const ComplexVector target = target_superposition(basis);
        for (int row = 0; row < 4; ++row) {
            EXPECT_LT(std::abs(u(row, basis) - target[row]), 1e-12) << "basis " << basis;
        }
    }
}

TEST(CircuitUnitary, OutputsAreUnitary) {
    EXPECT_TRUE(is_unitary(circuit_unitary(preparation_circuit(true)), 1e-12));
    EXPECT_TRUE(is_unitary(circuit_unitary(preparation_circuit(false)), 1e-12));
}

TEST(TargetSuperposition, ExplicitLines) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const ComplexVector line2 = target_superposition(0b01);
    EXPECT_NEAR(line2[0b00].real(), inv_sqrt2, 1e-15);
    EXPECT_NEAR(line2[0b11].real(), -inv_sqrt2, 1e-15);
    const ComplexVector line3 = target_superposition(0b10);
    EXPECT_NEAR(line3[0b00].real(), inv_sqrt2, 1e-15);
    EXPECT_NEAR(line3[0b11].real(), inv_sqrt2, 1e-15);
    const ComplexVector line4 = target_superposition(0b11);
    EXPECT_NEAR(line4[0b10].real(), inv_sqrt2, 1e-15);
    EXPECT_NEAR(line4[0b01].real(), inv_sqrt2, 1e-15);
    EXPECT_THROW(target_superposition(4), std::invalid_argument);
}

TEST(ApplyToPhotonB, IdentityLeavesStateFixed) {
    const PairState x = x_state();
    const PairState same = apply_to_photon_b(x, ComplexMatrix::identity(4));
    EXPECT_EQ(max_abs_diff(x.amps, same.amps), 0.0);
    EXPECT_EQ(same.roles, kSourceRoles);
}

TEST(ApplyToPhotonB, RejectsWrongSlotOrder) {
    EXPECT_THROW(apply_to_photon_b(chi_state(Pauli::I, Pauli::I), ComplexMatrix::identity(4)),
                 std::invalid_argument);
}

TEST(ApplyToPhotonB, SwapFreeCircuitYieldsChiLeeExactly) {
    const PairState out = apply_to_photon_b(x_state(), circuit_unitary(preparation_circuit(false)));
    EXPECT_LT(max_abs_diff(out.amps, chi_lee().amps), 1e-12);
}

TEST(ApplyToPhotonB, SwapCircuitYieldsChiInRelabeledSlots) {
    const PairState raw = apply_to_photon_b(x_state(), circuit_unitary(preparation_circuit(true)));
    const PairState relabeled = reinterpret_roles(raw, kChiRoles);
    EXPECT_NEAR(fidelity(relabeled, chi_state(Pauli::I, Pauli::I)), 1.0, 1e-12);
    EXPECT_LT(max_abs_diff(relabeled.amps, chi_state(Pauli::I, Pauli::I).amps), 1e-12);
}

TEST(PrepareChi, BaseAndMixedIndices) {
    EXPECT_NEAR(fidelity(prepare_chi(Pauli::I, Pauli::I), chi_state(Pauli::I, Pauli::I)), 1.0, 1e-12);
    EXPECT_NEAR(fidelity(prepare_chi(Pauli::X, Pauli::Y), chi_state(Pauli::X, Pauli::Y)), 1.0, 1e-12);
}

TEST(PrepareChi, FullFamilyMatchesConstructorsWithinTolerance) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const Pauli pi = pauli_from_index(i), pj = pauli_from_index(j);
            EXPECT_NEAR(fidelity(prepare_chi(pi, pj), chi_state(pi, pj)), 1.0, 1e-12) << i << "," << j;
        }
}

TEST(PrepareChi, SixteenOutputsAreMutuallyOrthonormal) {
    std::vector<PairState> outputs;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) outputs.push_back(prepare_chi(pauli_from_index(i), pauli_from_index(j)));
    for (size_t m = 0; m < outputs.size(); ++m)
        for (size_t n = 0; n < outputs.size(); ++n) {
            const Complex g = inner_product(outputs[m].amps, outputs[n].amps);
            EXPECT_LT(std::abs(g - (m == n ? Complex{1.0} : Complex{})), 1e-12);
        }
}
