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

#include "chibench/elements.hpp"

#include <gtest/gtest.h>

#include "chibench/states.hpp"
#include "oracle_helpers.hpp"

using namespace chibench;

namespace {

const Complex kI{0.0, 1.0};

ComplexMatrix rotation(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return ComplexMatrix::from_rows({{c, -s}, {s, c}});
}

ComplexMatrix oam_flip(double theta) {
    return ComplexMatrix::from_rows({{0.0, std::exp(2.0 * kI * theta)}, {std::exp(-2.0 * kI * theta), 0.0}});
}

ComplexMatrix pol_identity_oam(const ComplexMatrix& m) { return tensor(ComplexMatrix::identity(2), m); }

}  // namespace

TEST(JonesQuarter, AxisAlignedCases) {
    EXPECT_LT(max_abs_diff(jones_quarter(0.0), ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, kI}})), 1e-15);
    EXPECT_LT(max_abs_diff(jones_quarter(M_PI / 2.0), ComplexMatrix::from_rows({{kI, 0.0}, {0.0, 1.0}})),
              1e-15);
}

TEST(JonesQuarter, PerpendicularPairGivesGlobalPhaseI) {
    for (int k = 0; k < 64; ++k) {
        const double theta = -M_PI + 2.0 * M_PI * k / 64.0;
        const ComplexMatrix prod = jones_quarter(theta + M_PI / 2.0) * jones_quarter(theta);
        EXPECT_LT(max_abs_diff(prod, kI * ComplexMatrix::identity(2)), 1e-14) << "theta=" << theta;
    }
}

TEST(JonesHalf, RealizesZHadamardAndX) {
    EXPECT_LT(max_abs_diff(jones_half(0.0), pauli_matrix(Pauli::Z)), 1e-15);
    const double h = 1.0 / std::sqrt(2.0);
    EXPECT_LT(max_abs_diff(jones_half(M_PI / 8.0), ComplexMatrix::from_rows({{h, h}, {h, -h}})), 1e-15);
    EXPECT_LT(max_abs_diff(jones_half(M_PI / 4.0), pauli_matrix(Pauli::X)), 1e-15);
}

TEST(JonesPlates, TwoQuarterWavesMakeAHalfWave) {
    for (int k = 0; k < 64; ++k) {
        const double theta = 2.0 * M_PI * k / 64.0;
        EXPECT_TRUE(global_phase_equal(jones_quarter(theta) * jones_quarter(theta), jones_half(theta), 1e-13))
            << "theta=" << theta;
    }
}

TEST(WaveplateUnitary, LeavesOamUntouched) {
    EXPECT_LT(max_abs_diff(waveplate_unitary(WaveKind::half, 0.0),
                           tensor(pauli_matrix(Pauli::Z), ComplexMatrix::identity(2))),
              1e-15);
    ComplexMatrix expected(4);
    expected(0, 0) = expected(1, 1) = 1.0;
    expected(2, 2) = expected(3, 3) = kI;
    EXPECT_LT(max_abs_diff(waveplate_unitary(WaveKind::quarter, 0.0), expected), 1e-15);
}

TEST(WaveplateUnitary, UnitaryForRandomAngles) {
    std::mt19937 gen(47);
    std::uniform_real_distribution<double> angle(-2.0 * M_PI, 2.0 * M_PI);
    for (int k = 0; k < 100; ++k) {
        EXPECT_TRUE(is_unitary(waveplate_unitary(WaveKind::quarter, angle(gen)), 1e-12));
        EXPECT_TRUE(is_unitary(waveplate_unitary(WaveKind::half, angle(gen)), 1e-12));
    }
}

TEST(DoveUnitary, NonRotatedFlipsOamAndRetardsPolarization) {
    const ComplexMatrix expected = tensor(ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, kI}}),
                                          pauli_matrix(Pauli::X));
    EXPECT_LT(max_abs_diff(dove_unitary(0.0), expected), 1e-15);
}

TEST(DoveUnitary, QuarterPiRotationPhases) {
    // l = +-1 modes acquire exp(-+ i pi/2) under the flip.
    ComplexMatrix m(2);
    m(0, 1) = std::polar(1.0, M_PI / 2.0);
    m(1, 0) = std::polar(1.0, -M_PI / 2.0);
    EXPECT_LT(std::abs(m(0, 1) - kI), 1e-15);
    EXPECT_LT(std::abs(m(1, 0) + kI), 1e-15);
    EXPECT_LT(max_abs_diff(dove_unitary(M_PI / 4.0), tensor(jones_quarter(M_PI / 4.0), m)), 1e-15);
}

TEST(DoveUnitary, UnitaryForRandomAngles) {
    std::mt19937 gen(53);
    std::uniform_real_distribution<double> angle(-2.0 * M_PI, 2.0 * M_PI);
    for (int k = 0; k < 100; ++k) EXPECT_TRUE(is_unitary(dove_unitary(angle(gen)), 1e-12));
}

TEST(DoveUnitary, RotationConjugationConsistency) {
    // Rotating the prism by theta conjugates both factors: the Jones
    // factor by the polarization rotation, the flip by the OAM phase
    // rotation diag(e^{i theta}, e^{-i theta}).
    for (int k = 0; k < 32; ++k) {
        const double theta = -M_PI + 2.0 * M_PI * k / 32.0;
        const ComplexMatrix jones = rotation(theta) * jones_quarter(0.0) * rotation(-theta);
        ComplexMatrix phase_rot(2);
        phase_rot(0, 0) = std::exp(kI * theta);
        phase_rot(1, 1) = std::exp(-kI * theta);
        const ComplexMatrix flip = phase_rot * pauli_matrix(Pauli::X) * adjoint(phase_rot);
        EXPECT_LT(max_abs_diff(dove_unitary(theta), tensor(jones, flip)), 1e-14) << "theta=" << theta;
    }
}

TEST(CompensatedDove, CompositeIsPhaseTimesPureOamFlip) {
    for (int k = 0; k < 16; ++k) {
        const double theta = -M_PI + 2.0 * M_PI * k / 16.0;
        const ComplexMatrix u = composite_unitary(compensated_dove(theta));
        EXPECT_LT(max_abs_diff(u, kI * pol_identity_oam(oam_flip(theta))), 1e-14) << "theta=" << theta;
    }
}

TEST(CompensatedDove, NonRotatedActsAsXGate) {
    EXPECT_TRUE(global_phase_equal(composite_unitary(compensated_dove(0.0)),
                                   pol_identity_oam(pauli_matrix(Pauli::X)), 1e-12));
}

TEST(CompensatedDove, QuarterPiActsAsYGate) {
    EXPECT_TRUE(global_phase_equal(composite_unitary(compensated_dove(M_PI / 4.0)),
                                   pol_identity_oam(pauli_matrix(Pauli::Y)), 1e-12));
}

TEST(CompensatedDove, PolarizationFactorIsProportionalToIdentity) {
    for (int k = 0; k < 16; ++k) {
        const double theta = 2.0 * M_PI * k / 16.0;
        // Independent route for the polarization factor alone.
        const ComplexMatrix pol = jones_quarter(theta) * jones_quarter(theta + M_PI / 2.0);
        EXPECT_LT(max_abs_diff(pol, kI * ComplexMatrix::identity(2)), 1e-14);
        EXPECT_LT(std::abs(pol(0, 1)), 1e-14);
        EXPECT_LT(std::abs(pol(1, 0)), 1e-14);
    }
}

TEST(OamPauliBench, RealizesEachAxisUpToPhase) {
    EXPECT_TRUE(global_phase_equal(composite_unitary(oam_pauli_bench(Axis::X)),
                                   pol_identity_oam(pauli_matrix(Pauli::X)), 1e-12));
    EXPECT_TRUE(global_phase_equal(composite_unitary(oam_pauli_bench(Axis::Y)),
                                   pol_identity_oam(pauli_matrix(Pauli::Y)), 1e-12));
    EXPECT_TRUE(global_phase_equal(composite_unitary(oam_pauli_bench(Axis::Z)),
                                   pol_identity_oam(pauli_matrix(Pauli::Z)), 1e-12));
}

TEST(PolPauliBench, ZAndXAreExactSinglePlates) {
    const ComplexMatrix id = ComplexMatrix::identity(2);
    EXPECT_LT(max_abs_diff(composite_unitary(pol_pauli_bench(Axis::Z)), tensor(pauli_matrix(Pauli::Z), id)),
              1e-15);
    EXPECT_LT(max_abs_diff(composite_unitary(pol_pauli_bench(Axis::X)), tensor(pauli_matrix(Pauli::X), id)),
              1e-15);
}

TEST(PolPauliBench, YIsPlusITimesSigmaY) {
    const ComplexMatrix u = composite_unitary(pol_pauli_bench(Axis::Y));
    EXPECT_LT(max_abs_diff(u, kI * tensor(pauli_matrix(Pauli::Y), ComplexMatrix::identity(2))), 1e-15);
}

TEST(Interferometer, OpenControlledOamFlipNeedsNoCompensator) {
    Interferometer itf;
    itf.ctrl_value = 0;
    itf.arm = {OpticalElement{Dove{0.0}}};
    const ComplexMatrix u = interferometer_unitary(itf);
    // |0><0| x sigma^x + |1><1| x I, exactly.
    ComplexMatrix expected(4);
    expected(0, 1) = expected(1, 0) = 1.0;
    expected(2, 2) = expected(3, 3) = 1.0;
    EXPECT_EQ(max_abs_diff(u, expected), 0.0);
}

TEST(Interferometer, LiteralQuarterWaveArmLeavesResidualPhase) {
    Interferometer itf;
    itf.ctrl_value = 1;
    itf.arm = {OpticalElement{QuarterWave{M_PI / 2.0}}, OpticalElement{Dove{0.0}}};
    const ComplexMatrix u = interferometer_unitary(itf);
    ComplexMatrix expected(4);
    expected(0, 0) = expected(1, 1) = 1.0;
    expected(2, 3) = expected(3, 2) = kI;
    EXPECT_LT(max_abs_diff(u, expected), 1e-15);
}

TEST(Interferometer, ArmPhaseRecoversExactCnot) {
    Interferometer itf;
    itf.ctrl_value = 1;
    itf.arm = {OpticalElement{QuarterWave{M_PI / 2.0}}, OpticalElement{Dove{0.0}}};
    itf.arm_phase = -M_PI / 2.0;
    ComplexMatrix expected(4);
    expected(0, 0) = expected(1, 1) = 1.0;
    expected(2, 3) = expected(3, 2) = 1.0;
    EXPECT_LT(max_abs_diff(interferometer_unitary(itf), expected), 1e-15);
}

TEST(Interferometer, EmptyArmZeroPhasesIsIdentity) {
    Interferometer itf;
    itf.ctrl_value = 0;
    EXPECT_EQ(max_abs_diff(interferometer_unitary(itf), ComplexMatrix::identity(4)), 0.0);
}

TEST(Interferometer, RejectsPolarizationMixingArmElement) {
    Interferometer itf;
    itf.ctrl_value = 1;
    itf.arm = {OpticalElement{HalfWave{M_PI / 4.0}}};  // sigma^x on polarization
    try {
        interferometer_unitary(itf);
        FAIL() << "expected rejection";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("hwp"), std::string::npos);
    }
}

TEST(ElementUnitary, DispatchesEveryKind) {
    EXPECT_LT(max_abs_diff(element_unitary(OpticalElement{HalfWave{0.0}}),
                           tensor(pauli_matrix(Pauli::Z), ComplexMatrix::identity(2))),
              1e-15);
    EXPECT_EQ(max_abs_diff(element_unitary(OpticalElement{Dove{0.0}}), dove_unitary(0.0)), 0.0);
    EXPECT_EQ(max_abs_diff(element_unitary(OpticalElement{PhasePlate{0.0}}), ComplexMatrix::identity(4)), 0.0);
    EXPECT_THROW(element_unitary(OpticalElement{SwapLabels{}}), std::invalid_argument);
}

TEST(ElementUnitary, TwoHundredRandomDrawsAreUnitary) {
    std::mt19937 gen(59);
    std::uniform_real_distribution<double> angle(-2.0 * M_PI, 2.0 * M_PI);
    std::uniform_int_distribution<int> kind(0, 4);
    int draws = 0;
    while (draws < 200) {
        OpticalElement e;
        switch (kind(gen)) {
            case 0: e = OpticalElement{HalfWave{angle(gen)}}; break;
            case 1: e = OpticalElement{QuarterWave{angle(gen)}}; break;
            case 2: e = OpticalElement{Dove{angle(gen)}}; break;
            case 3: e = OpticalElement{PhasePlate{angle(gen)}}; break;
            default: {
                Interferometer itf;
                itf.ctrl_value = gen() % 2 == 0 ? 0 : 1;
                itf.arm = {OpticalElement{Dove{0.0}}, OpticalElement{PhasePlate{angle(gen)}}};
                itf.arm_phase = angle(gen);
                itf.ref_phase = angle(gen);
                e = OpticalElement{std::move(itf)};
                break;
            }
        }
        EXPECT_TRUE(is_unitary(element_unitary(e), 1e-12)) << describe_element(e);
        ++draws;
    }
}
