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

#include <cmath>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "chibench/qmath.hpp"

// Exact unitary models of the optical elements: birefringent wave plates,
// M-shaped Dove prisms (quarter-wave retarders that flip the OAM sign),
// phase plates, and two-path PBS interferometers that realize
// polarization-controlled gates on the OAM qubit.
//
// Angles are radians internally; degrees appear only at file/CLI
// boundaries. Element lists are in beam propagation order: the first
// element is the first one the photon meets, so the composite matrix is
// the product taken right-to-left.

namespace chibench {

struct HalfWave {
    double theta;  // fast-axis orientation from the horizontal
    bool operator==(const HalfWave&) const = default;
};

struct QuarterWave {
    double theta;
    bool operator==(const QuarterWave&) const = default;
};

struct Dove {
    double theta;  // prism rotation angle
    bool operator==(const Dove&) const = default;
};

struct PhasePlate {
    double phi;
    bool operator==(const PhasePlate&) const = default;
};

struct SwapLabels {
    bool operator==(const SwapLabels&) const = default;
};

struct OpticalElement;

// Two-path interferometer between two PBSs. The polarization component
// equal to ctrl_value is routed through the arm elements (which must act
// diagonally on polarization, or the PBS recombination would be lossy);
// the other component passes straight through. arm_phase and ref_phase
// model path-length adjustment of the two internal paths.
struct Interferometer {
    int ctrl_value = 0;
    std::vector<OpticalElement> arm;  // beam order
    double arm_phase = 0.0;
    double ref_phase = 0.0;
    bool operator==(const Interferometer&) const;
};

struct OpticalElement {
    std::variant<HalfWave, QuarterWave, Dove, PhasePlate, Interferometer, SwapLabels> value;
    bool operator==(const OpticalElement&) const = default;
};

inline bool Interferometer::operator==(const Interferometer& other) const {
    return ctrl_value == other.ctrl_value && arm == other.arm && arm_phase == other.arm_phase &&
           ref_phase == other.ref_phase;
}

inline std::string describe_element(const OpticalElement& e);

// Jones matrix of a quarter-wave plate with fast axis at theta:
// rotate, retard the slow axis by pi/2, rotate back.
inline ComplexMatrix jones_quarter(double theta) {
    const Complex i{0.0, 1.0};
    const double c = std::cos(theta), s = std::sin(theta);
    return ComplexMatrix::from_rows({{c * c + i * s * s, (1.0 - i) * s * c},
                                     {(1.0 - i) * s * c, s * s + i * c * c}});
}

// Jones matrix of a half-wave plate with fast axis at theta.
inline ComplexMatrix jones_half(double theta) {
    const double c2 = std::cos(2.0 * theta), s2 = std::sin(2.0 * theta);
    return ComplexMatrix::from_rows({{c2, s2}, {s2, -c2}});
}

enum class WaveKind { quarter, half };

// Wave plates leave the OAM mode untouched: J(theta) x I.
inline ComplexMatrix waveplate_unitary(WaveKind kind, double theta) {
    const ComplexMatrix j = kind == WaveKind::quarter ? jones_quarter(theta) : jones_half(theta);
    return tensor(j, ComplexMatrix::identity(2));
}

// An M-shaped Dove prism rotated by theta: quarter-wave retardation on
// polarization, OAM flip with phases exp(+-2i*theta) picked up by the
// l = +-1 modes under image rotation.
inline ComplexMatrix dove_unitary(double theta) {
    const Complex i{0.0, 1.0};
    const ComplexMatrix oam_flip = ComplexMatrix::from_rows(
        {{0.0, std::exp(2.0 * i * theta)}, {std::exp(-2.0 * i * theta), 0.0}});
    return tensor(jones_quarter(theta), oam_flip);
}

inline ComplexMatrix element_unitary(const OpticalElement& e);

// Ordered composite of a beam-order element list (first element applied
// first, so the product is built from the left).
inline ComplexMatrix composite_unitary(const std::vector<OpticalElement>& elements) {
    ComplexMatrix u = ComplexMatrix::identity(4);
    for (const auto& e : elements) u = element_unitary(e) * u;
    return u;
}

// A Dove prism plus the quarter-wave plate, perpendicular to it, that
// cancels its retardation: the pair acts as i * (I x oam_flip(theta)).
inline std::vector<OpticalElement> compensated_dove(double theta) {
    return {OpticalElement{QuarterWave{theta + M_PI / 2.0}}, OpticalElement{Dove{theta}}};
}

enum class Axis { X, Y, Z };

// Pauli gates on the OAM qubit out of compensated Dove prisms:
// non-rotated for X, rotated by pi/4 for Y, both in series for Z.
inline std::vector<OpticalElement> oam_pauli_bench(Axis axis) {
    switch (axis) {
        case Axis::X: return compensated_dove(0.0);
        case Axis::Y: return compensated_dove(M_PI / 4.0);
        case Axis::Z: {
            std::vector<OpticalElement> out = compensated_dove(0.0);
            for (auto& e : compensated_dove(M_PI / 4.0)) out.push_back(std::move(e));
            return out;
        }
    }
    throw std::logic_error("oam_pauli_bench: bad axis");
}

// Pauli gates on the polarization qubit out of half-wave plates. Z and X
// are single plates (fast axis horizontal / at pi/4); Y is both in series
// and lands on i * sigma^y.
inline std::vector<OpticalElement> pol_pauli_bench(Axis axis) {
    switch (axis) {
        case Axis::X: return {OpticalElement{HalfWave{M_PI / 4.0}}};
        case Axis::Y: return {OpticalElement{HalfWave{M_PI / 4.0}}, OpticalElement{HalfWave{0.0}}};
        case Axis::Z: return {OpticalElement{HalfWave{0.0}}};
    }
    throw std::logic_error("pol_pauli_bench: bad axis");
}

inline double off_block_magnitude(const ComplexMatrix& u) {
    double v = 0.0;
    for (int o1 = 0; o1 < 2; ++o1)
        for (int o2 = 0; o2 < 2; ++o2) {
            v = std::max(v, std::abs(u(0 * 2 + o1, 1 * 2 + o2)));
            v = std::max(v, std::abs(u(1 * 2 + o1, 0 * 2 + o2)));
        }
    return v;
}

// Composite unitary of the interferometer. The routed polarization block
// gets exp(i*arm_phase) times the OAM block of the arm composite; the
// reference block gets exp(i*ref_phase) times the identity.
inline ComplexMatrix interferometer_unitary(const Interferometer& itf) {
    if (itf.ctrl_value != 0 && itf.ctrl_value != 1) {
        throw std::invalid_argument("interferometer: ctrl must be 0 or 1");
    }
    ComplexMatrix w = ComplexMatrix::identity(4);
    for (const auto& e : itf.arm) {
        const ComplexMatrix u = element_unitary(e);
        if (off_block_magnitude(u) > 1e-12) {
            throw std::invalid_argument("interferometer: arm element is not polarization-diagonal: " +
                                        describe_element(e));
        }
        w = u * w;
    }
    const Complex i{0.0, 1.0};
    const Complex arm_factor = std::exp(i * itf.arm_phase);
    const Complex ref_factor = std::exp(i * itf.ref_phase);
    const int c = itf.ctrl_value;
    ComplexMatrix out(4);
    for (int o1 = 0; o1 < 2; ++o1) {
        for (int o2 = 0; o2 < 2; ++o2) {
            out(2 * c + o1, 2 * c + o2) = arm_factor * w(2 * c + o1, 2 * c + o2);
        }
        out(2 * (1 - c) + o1, 2 * (1 - c) + o1) = ref_factor;
    }
    return out;
}

inline ComplexMatrix element_unitary(const OpticalElement& e) {
    return std::visit(
        [](const auto& el) -> ComplexMatrix {
            using T = std::decay_t<decltype(el)>;
            if constexpr (std::is_same_v<T, HalfWave>) {
                return waveplate_unitary(WaveKind::half, el.theta);
            } else if constexpr (std::is_same_v<T, QuarterWave>) {
                return waveplate_unitary(WaveKind::quarter, el.theta);
            } else if constexpr (std::is_same_v<T, Dove>) {
                return dove_unitary(el.theta);
            } else if constexpr (std::is_same_v<T, PhasePlate>) {
                return std::exp(Complex{0.0, 1.0} * el.phi) * ComplexMatrix::identity(4);
            } else if constexpr (std::is_same_v<T, Interferometer>) {
                return interferometer_unitary(el);
            } else {
                throw std::invalid_argument("element_unitary: swap_labels has no matrix; it is bench metadata");
            }
        },
        e.value);
}

inline std::string describe_element(const OpticalElement& e) {
    std::ostringstream os;
    std::visit(
        [&](const auto& el) {
            using T = std::decay_t<decltype(el)>;
            if constexpr (std::is_same_v<T, HalfWave>) {
                os << "hwp(theta=" << el.theta << " rad)";
            } else if constexpr (std::is_same_v<T, QuarterWave>) {
                os << "qwp(theta=" << el.theta << " rad)";
            } else if constexpr (std::is_same_v<T, Dove>) {
                os << "dove(theta=" << el.theta << " rad)";
            } else if constexpr (std::is_same_v<T, PhasePlate>) {
                os << "phase(phi=" << el.phi << " rad)";
            } else if constexpr (std::is_same_v<T, Interferometer>) {
                os << "interf(ctrl=" << el.ctrl_value << ", " << el.arm.size() << " arm elements)";
            } else {
                os << "swap_labels";
            }
        },
        e.value);
    return os.str();
}

}  // namespace chibench
