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

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "chibench/circuit.hpp"
#include "chibench/elements.hpp"

// The optical-bench description language, the compilers from targets to
// benches, and the bench simulator.
//
// Bench files are line oriented: one element per line in beam order,
// '#' starts a comment, blank lines are ignored. Angles are written in
// degrees with a mandatory "deg" suffix. An interferometer opens a
// '{' block whose lines form its arm; "swap_labels" may only appear as
// the final element and is metadata (a relabeling), not optics:
//
//   interf ctrl=0 {
//     dove theta=0deg
//   }
//   hwp theta=22.5deg
//   swap_labels

namespace chibench {

struct Bench {
    std::vector<OpticalElement> elements;  // beam order; never contains SwapLabels
    bool swap_labels_at_end = false;
    bool operator==(const Bench&) const = default;
};

struct BenchParseError : std::runtime_error {
    int line;
    BenchParseError(int line_number, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message), line(line_number) {}
};

// Degree/radian conversions chosen so that the dyadic angles used by the
// compilers (0, 22.5, 45, 90, ...) convert bit-exactly in both directions.
inline double deg_to_rad(double deg) { return (deg / 180.0) * M_PI; }
inline double rad_to_deg(double rad) { return (rad / M_PI) * 180.0; }

namespace detail {

inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
        if (end > pos) tokens.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return tokens;
}

// "key=<decimal>deg" -> radians.
inline double parse_angle_token(std::string_view token, std::string_view key, int line) {
    const std::string prefix = std::string(key) + "=";
    if (token.substr(0, prefix.size()) != prefix) {
        throw BenchParseError(line, "expected " + prefix + "<value>deg, got '" + std::string(token) + "'");
    }
    std::string_view rest = token.substr(prefix.size());
    if (rest.size() < 4 || rest.substr(rest.size() - 3) != "deg") {
        throw BenchParseError(line, "angle needs a deg suffix: '" + std::string(token) + "'");
    }
    std::string_view number = rest.substr(0, rest.size() - 3);
    double deg = 0.0;
    const auto res = std::from_chars(number.data(), number.data() + number.size(), deg);
    if (res.ec != std::errc{} || res.ptr != number.data() + number.size()) {
        throw BenchParseError(line, "malformed angle '" + std::string(number) + "'");
    }
    if (!std::isfinite(deg)) throw BenchParseError(line, "angle must be finite");
    return deg_to_rad(deg);
}

inline std::string render_angle(std::string_view key, double rad) {
    return std::string(key) + "=" + format_double(rad_to_deg(rad)) + "deg";
}

}  // namespace detail

inline Bench parse_bench(const std::string& text) {
    Bench bench;
    std::optional<Interferometer> open_block;
    int open_line = 0;
    bool saw_swap = false;

    int line_number = 0;
    std::istringstream in(text);
    std::string raw_line;
    while (std::getline(in, raw_line)) {
        ++line_number;
        std::string_view line = raw_line;
        if (const size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tokens = detail::split_tokens(line);
        if (tokens.empty()) continue;
        if (saw_swap) throw BenchParseError(line_number, "swap_labels must be the final element");

        const std::string_view head = tokens[0];
        auto push = [&](OpticalElement e) {
            if (open_block) open_block->arm.push_back(std::move(e));
            else bench.elements.push_back(std::move(e));
        };

        if (head == "hwp" || head == "qwp" || head == "dove") {
            if (tokens.size() != 2) throw BenchParseError(line_number, std::string(head) + " takes exactly theta=<value>deg");
            const double theta = detail::parse_angle_token(tokens[1], "theta", line_number);
            if (head == "hwp") push(OpticalElement{HalfWave{theta}});
            else if (head == "qwp") push(OpticalElement{QuarterWave{theta}});
            else push(OpticalElement{Dove{theta}});
        } else if (head == "phase") {
            if (tokens.size() != 2) throw BenchParseError(line_number, "phase takes exactly phi=<value>deg");
            push(OpticalElement{PhasePlate{detail::parse_angle_token(tokens[1], "phi", line_number)}});
        } else if (head == "interf") {
            if (open_block) throw BenchParseError(line_number, "interferometer blocks cannot nest");
            Interferometer itf;
            size_t t = 1;
            if (t >= tokens.size() || tokens[t].substr(0, 5) != "ctrl=") {
                throw BenchParseError(line_number, "interf needs ctrl=0 or ctrl=1");
            }
            const std::string_view ctrl = tokens[t].substr(5);
            if (ctrl == "0") itf.ctrl_value = 0;
            else if (ctrl == "1") itf.ctrl_value = 1;
            else throw BenchParseError(line_number, "ctrl must be 0 or 1, got '" + std::string(ctrl) + "'");
            ++t;
            if (t < tokens.size() && tokens[t].substr(0, 10) == "arm_phase=") {
                itf.arm_phase = detail::parse_angle_token(tokens[t], "arm_phase", line_number);
                ++t;
            }
            if (t < tokens.size() && tokens[t].substr(0, 10) == "ref_phase=") {
                itf.ref_phase = detail::parse_angle_token(tokens[t], "ref_phase", line_number);
                ++t;
            }
            if (t != tokens.size() - 1 || tokens[t] != "{") {
                throw BenchParseError(line_number, "interf line must end with '{'");
            }
            open_block = std::move(itf);
            open_line = line_number;
        } else if (head == "}") {
            if (tokens.size() != 1) throw BenchParseError(line_number, "'}' must stand alone");
            if (!open_block) throw BenchParseError(line_number, "'}' without an open interferometer block");
            bench.elements.push_back(OpticalElement{std::move(*open_block)});
            open_block.reset();
        } else if (head == "swap_labels") {
            if (tokens.size() != 1) throw BenchParseError(line_number, "swap_labels takes no arguments");
            if (open_block) throw BenchParseError(line_number, "swap_labels cannot appear inside an interferometer block");
            bench.swap_labels_at_end = true;
            saw_swap = true;
        } else {
            throw BenchParseError(line_number, "unknown element '" + std::string(head) + "'");
        }
    }
    if (open_block) throw BenchParseError(open_line, "unterminated interferometer block");
    return bench;
}

namespace detail {

inline void render_element(const OpticalElement& e, std::string indent, std::ostringstream& out) {
    std::visit(
        [&](const auto& el) {
            using T = std::decay_t<decltype(el)>;
            if constexpr (std::is_same_v<T, HalfWave>) {
                out << indent << "hwp " << render_angle("theta", el.theta) << "\n";
            } else if constexpr (std::is_same_v<T, QuarterWave>) {
                out << indent << "qwp " << render_angle("theta", el.theta) << "\n";
            } else if constexpr (std::is_same_v<T, Dove>) {
                out << indent << "dove " << render_angle("theta", el.theta) << "\n";
            } else if constexpr (std::is_same_v<T, PhasePlate>) {
                out << indent << "phase " << render_angle("phi", el.phi) << "\n";
            } else if constexpr (std::is_same_v<T, Interferometer>) {
                out << indent << "interf ctrl=" << el.ctrl_value;
                if (el.arm_phase != 0.0) out << " " << render_angle("arm_phase", el.arm_phase);
                if (el.ref_phase != 0.0) out << " " << render_angle("ref_phase", el.ref_phase);
                out << " {\n";
                for (const auto& inner : el.arm) render_element(inner, indent + "  ", out);
                out << indent << "}\n";
            } else {
                throw std::invalid_argument("render: swap_labels belongs to the bench, not the element list");
            }
        },
        e.value);
}

}  // namespace detail

// Canonical text form; parse_bench(render_bench(b)) == b.
inline std::string render_bench(const Bench& b) {
    std::ostringstream out;
    for (const auto& e : b.elements) detail::render_element(e, "", out);
    if (b.swap_labels_at_end) out << "swap_labels\n";
    return out.str();
}

// The optical system that prepares chi^00 from the source pair: an
// open-controlled OAM flip, Hadamard and Z half-wave plates, a
// closed-controlled OAM flip whose arm path length absorbs the residual
// quarter-wave phase (arm_phase = -90deg makes the gate an exact CNOT),
// and the final relabeling.
inline Bench compile_chi00() {
    Bench b;
    Interferometer first;
    first.ctrl_value = 0;
    first.arm = {OpticalElement{Dove{0.0}}};
    Interferometer second;
    second.ctrl_value = 1;
    second.arm = {OpticalElement{QuarterWave{deg_to_rad(90.0)}}, OpticalElement{Dove{0.0}}};
    second.arm_phase = deg_to_rad(-90.0);
    b.elements = {OpticalElement{std::move(first)}, OpticalElement{HalfWave{deg_to_rad(22.5)}},
                  OpticalElement{HalfWave{0.0}}, OpticalElement{std::move(second)}};
    b.swap_labels_at_end = true;
    return b;
}

inline Axis axis_from_pauli(Pauli p) {
    switch (p) {
        case Pauli::X: return Axis::X;
        case Pauli::Y: return Axis::Y;
        case Pauli::Z: return Axis::Z;
        case Pauli::I: break;
    }
    throw std::invalid_argument("axis_from_pauli: identity has no axis");
}

// Wave plates realizing sigma^i on polarization followed by compensated
// Dove prisms realizing sigma^j on OAM; identity factors contribute no
// elements. The composite equals sigma^i x sigma^j up to a global phase.
inline Bench compile_pauli(Pauli i, Pauli j) {
    Bench b;
    if (i != Pauli::I)
        for (auto& e : pol_pauli_bench(axis_from_pauli(i))) b.elements.push_back(std::move(e));
    if (j != Pauli::I)
        for (auto& e : oam_pauli_bench(axis_from_pauli(j))) b.elements.push_back(std::move(e));
    return b;
}

// Concatenation in beam order: the photon meets every element of `first`
// before any element of `second`. `first` must not end in a relabeling.
inline Bench concat_benches(const Bench& first, const Bench& second) {
    if (first.swap_labels_at_end) {
        throw std::invalid_argument("concat_benches: swap_labels may only end the combined bench");
    }
    Bench out;
    out.elements = first.elements;
    out.elements.insert(out.elements.end(), second.elements.begin(), second.elements.end());
    out.swap_labels_at_end = second.swap_labels_at_end;
    return out;
}

struct BenchUnitary {
    ComplexMatrix u;   // 4x4 composite of the physical elements
    bool swap_labels;  // relabeling flag, not folded into u
};

inline BenchUnitary bench_unitary(const Bench& b) {
    return BenchUnitary{composite_unitary(b.elements), b.swap_labels_at_end};
}

// Runs the pair through the bench: photon B meets every element. The
// relabeling, when present, rewrites slot order (polA, oamA, polB, oamB)
// -> (polA, oamA, oamB, polB); amplitudes move with their slots, so the
// physical state is untouched.
inline PairState simulate(const Bench& b, const PairState& input) {
    if (input.roles != kSourceRoles) {
        throw std::invalid_argument("simulate: input slots must be (polA, oamA, polB, oamB)");
    }
    const BenchUnitary bu = bench_unitary(b);
    PairState s = apply_to_photon_b(input, bu.u);
    if (!bu.swap_labels) return s;
    ComplexVector relabeled(16);
    for (int idx = 0; idx < 16; ++idx) {
        const int a = (idx >> 3) & 1, b2 = (idx >> 2) & 1, pB = (idx >> 1) & 1, oB = idx & 1;
        relabeled[8 * a + 4 * b2 + 2 * oB + pB] = s.amps[idx];
    }
    return make_pair_state(std::move(relabeled), kChiRoles);
}

}  // namespace chibench
