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

#include "chibench/states.hpp"

// The type-I SPDC source of pairs hyper-entangled in polarization and OAM,
// the odd-OAM mode filter, and the qubit encoding.
//
// Raw pair basis: (polA, oamA, polB, oamB) with pol in {H=0, V=1} and OAM
// in {R=0, G=1, L=2} (l = +1, 0, -1); mixed-radix index over dims
// (2, 3, 2, 3), i.e. 18*pA + 6*oA + 3*pB + oB.

namespace chibench {

inline constexpr int raw_index(int pA, int oA, int pB, int oB) {
    return 18 * pA + 6 * oA + 3 * pB + oB;
}

struct RawPairState {
    ComplexVector amps;  // dim 36, normalized
    Complex alpha;
    double pre_norm_sq;  // squared norm before normalization
};

// (|HH> + |VV>) x (|RL> + alpha |GG> + |LR>), normalized. alpha is set by
// the crystal's mode-matching; the filtered output never depends on it.
inline RawPairState spdc_state(Complex alpha) {
    ensure_finite(alpha, "spdc_state alpha");
    ComplexVector v(36);
    constexpr int R = 0, G = 1, L = 2;
    for (int p = 0; p < 2; ++p) {
        v[raw_index(p, R, p, L)] = 1.0;
        v[raw_index(p, L, p, R)] = 1.0;
        v[raw_index(p, G, p, G)] = alpha;
    }
    const double norm_sq = v.norm_sq();  // 2 * (2 + |alpha|^2)
    const double norm = std::sqrt(norm_sq);
    for (int k = 0; k < 36; ++k) v[k] = v[k] / norm;
    return RawPairState{std::move(v), alpha, norm_sq};
}

enum class Photon { A, B };

struct FilterResult {
    PairState filtered;  // roles (polA, oamA, polB, oamB), R -> 0, L -> 1
    double probability;  // heralding probability of passing the sorter
};

// Projects out the l = 0 component of the chosen photon (the mode sorter
// passes only odd l) and renormalizes. For the SPDC state the only l = 0
// term is |GG>, so filtering either photon removes it entirely; inputs
// whose survivor still carries l = 0 on the other photon cannot be read
// as qubits and are rejected.
inline FilterResult oam_filter(const RawPairState& raw, Photon which) {
    require_dim(raw.amps, 36, "oam_filter");
    constexpr int G = 1;
    double surviving = 0.0;
    double residual_other = 0.0;
    for (int pA = 0; pA < 2; ++pA)
        for (int oA = 0; oA < 3; ++oA)
            for (int pB = 0; pB < 2; ++pB)
                for (int oB = 0; oB < 3; ++oB) {
                    const int filtered_oam = which == Photon::A ? oA : oB;
                    const int other_oam = which == Photon::A ? oB : oA;
                    if (filtered_oam == G) continue;
                    const double w = std::norm(raw.amps[raw_index(pA, oA, pB, oB)]);
                    surviving += w;
                    if (other_oam == G) residual_other += w;
                }
    if (surviving < 1e-15) throw std::invalid_argument("oam_filter: nothing survives the mode sorter");
    if (residual_other > 1e-12 * surviving) {
        throw std::invalid_argument("oam_filter: survivor retains l=0 weight on the unfiltered photon");
    }
    const double scale = 1.0 / std::sqrt(surviving);
    ComplexVector out(16);
    for (int pA = 0; pA < 2; ++pA)
        for (int oA = 0; oA < 3; oA += 2)      // R and L only
            for (int pB = 0; pB < 2; ++pB)
                for (int oB = 0; oB < 3; oB += 2) {
                    const int qA = oA == 0 ? 0 : 1;  // R -> 0, L -> 1
                    const int qB = oB == 0 ? 0 : 1;
                    out[8 * pA + 4 * qA + 2 * pB + qB] =
                        scale * raw.amps[raw_index(pA, oA, pB, oB)];
                }
    return FilterResult{make_pair_state(std::move(out), kSourceRoles), surviving};
}

// Relabels the filtered (H/V, R/L) state in the computational basis:
// H, R -> 0 and V, L -> 1 slot for slot, so the amplitudes carry over
// unchanged and the result is the four-term X state.
inline PairState encode(const PairState& filtered) {
    require_dim(filtered.amps, 16, "encode");
    if (std::abs(filtered.amps.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("encode: input is not normalized");
    }
    return PairState{filtered.amps, filtered.roles};
}

}  // namespace chibench
