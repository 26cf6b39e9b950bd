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

#include "chibench/states.hpp"

// Entanglement structure of a pair state: von Neumann entropies across
// every bipartition, Wootters concurrence of every two-qubit reduction,
// and the expansion in the sixteen-state chi basis. Qubit letters a..d
// refer to slots 1..4 of the state.

namespace chibench {

enum class Bipartition { ab_cd = 0, ac_bd, ad_bc, a_bcd, b_acd, c_abd, d_abc };

inline constexpr std::array<Bipartition, 7> kAllBipartitions = {
    Bipartition::ab_cd, Bipartition::ac_bd, Bipartition::ad_bc, Bipartition::a_bcd,
    Bipartition::b_acd, Bipartition::c_abd, Bipartition::d_abc};

inline const char* bipartition_name(Bipartition cut) {
    switch (cut) {
        case Bipartition::ab_cd: return "ab|cd";
        case Bipartition::ac_bd: return "ac|bd";
        case Bipartition::ad_bc: return "ad|bc";
        case Bipartition::a_bcd: return "a|bcd";
        case Bipartition::b_acd: return "b|acd";
        case Bipartition::c_abd: return "c|abd";
        case Bipartition::d_abc: return "d|abc";
    }
    throw std::logic_error("bipartition_name: bad cut");
}

inline std::vector<int> bipartition_keep(Bipartition cut) {
    switch (cut) {
        case Bipartition::ab_cd: return {0, 1};
        case Bipartition::ac_bd: return {0, 2};
        case Bipartition::ad_bc: return {0, 3};
        case Bipartition::a_bcd: return {0};
        case Bipartition::b_acd: return {1};
        case Bipartition::c_abd: return {2};
        case Bipartition::d_abc: return {3};
    }
    throw std::logic_error("bipartition_keep: bad cut");
}

// Qubit pairs in slot order, used for the concurrence table.
inline constexpr std::array<std::pair<int, int>, 6> kQubitPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

inline const char* pair_name(int index) {
    constexpr const char* names[6] = {"ab", "ac", "ad", "bc", "bd", "cd"};
    return names[index];
}

struct AnalysisReport {
    std::array<double, 7> bipartition_entropies{};   // kAllBipartitions order, bits
    std::array<double, 6> pair_concurrences{};       // kQubitPairs order
    std::array<double, 16> target_fidelities{};      // |<chi^{ij}|s>|^2 at 4*i+j
};

// Entropy in bits of the reduced state on the first block of the cut.
inline double bipartition_entropy(const PairState& s, Bipartition cut) {
    const ComplexMatrix rho = outer(s.amps);
    return vn_entropy(partial_trace(rho, {2, 2, 2, 2}, bipartition_keep(cut)));
}

// Wootters concurrence of a two-qubit density matrix, via the
// Hermitian form sqrt(rho) * rho_tilde * sqrt(rho): the concurrence is
// max(0, l1 - l2 - l3 - l4) with l's the descending square roots of its
// eigenvalues.
inline double concurrence(const ComplexMatrix& rho) {
    if (rho.dim() != 4) throw std::invalid_argument("concurrence: need a 4x4 density matrix");
    if (hermitian_deviation(rho) > 1e-10) throw std::invalid_argument("concurrence: matrix is not Hermitian");
    if (std::abs(trace(rho).real() - 1.0) > 1e-9) throw std::invalid_argument("concurrence: trace must be 1");

    const ComplexMatrix yy = tensor(pauli_matrix(Pauli::Y), pauli_matrix(Pauli::Y));
    ComplexMatrix rho_conj(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rho_conj(i, j) = std::conj(rho(i, j));
    const ComplexMatrix rho_tilde = yy * rho_conj * yy;

    const ComplexMatrix root = matrix_sqrt_psd(rho);  // rejects non-PSD input
    ComplexMatrix herm = root * rho_tilde * root;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            const Complex avg = 0.5 * (herm(i, j) + std::conj(herm(j, i)));
            herm(i, j) = avg;
            herm(j, i) = std::conj(avg);
        }

    const EigenResult eig = hermitian_eigen(herm);
    std::array<double, 4> lambdas{};
    for (int k = 0; k < 4; ++k) {
        // Eigenvalues inside the clamp band are roundoff around an exact
        // zero; taking their square root would inflate them to 1e-5 scale.
        double ev = eig.eigenvalues[static_cast<size_t>(k)];
        if (ev < kPsdClampTol) ev = 0.0;
        lambdas[static_cast<size_t>(3 - k)] = std::sqrt(ev);  // descending
    }
    return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

// Largest deviation of the Gram matrix of the 16 chi states from the
// identity; the caller compares it to tol.
inline double basis_orthonormality(double tol) {
    if (tol <= 0.0) throw std::invalid_argument("basis_orthonormality: tol must be positive");
    std::array<PairState, 16> basis;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            basis[static_cast<size_t>(4 * i + j)] = chi_state(pauli_from_index(i), pauli_from_index(j));
    double deviation = 0.0;
    for (int m = 0; m < 16; ++m)
        for (int n = 0; n < 16; ++n) {
            const Complex g = inner_product(basis[static_cast<size_t>(m)].amps, basis[static_cast<size_t>(n)].amps);
            deviation = std::max(deviation, std::abs(g - (m == n ? Complex{1.0} : Complex{})));
        }
    return deviation;
}

// Coefficients <chi^{ij}|s> at 4*i+j; the squared magnitudes sum to 1 for
// a normalized s. The slots must already be in chi order.
inline std::array<Complex, 16> chi_expand(const PairState& s) {
    if (s.roles != kChiRoles) {
        throw std::invalid_argument("chi_expand: slots must be (polA, oamA, oamB, polB)");
    }
    std::array<Complex, 16> coeffs{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const PairState basis = chi_state(pauli_from_index(i), pauli_from_index(j));
            coeffs[static_cast<size_t>(4 * i + j)] = inner_product(basis.amps, s.amps);
        }
    return coeffs;
}

inline AnalysisReport report(const PairState& s) {
    if (s.roles != kChiRoles) {
        throw std::invalid_argument("report: slots must be (polA, oamA, oamB, polB)");
    }
    if (std::abs(s.amps.norm() - 1.0) > 1e-9) throw std::invalid_argument("report: state is not normalized");

    AnalysisReport r;
    for (size_t k = 0; k < kAllBipartitions.size(); ++k) {
        r.bipartition_entropies[k] = bipartition_entropy(s, kAllBipartitions[k]);
    }
    const ComplexMatrix rho = outer(s.amps);
    for (size_t k = 0; k < kQubitPairs.size(); ++k) {
        r.pair_concurrences[k] =
            concurrence(partial_trace(rho, {2, 2, 2, 2}, {kQubitPairs[k].first, kQubitPairs[k].second}));
    }
    const auto coeffs = chi_expand(s);
    for (size_t k = 0; k < coeffs.size(); ++k) r.target_fidelities[k] = std::norm(coeffs[k]);
    return r;
}

}  // namespace chibench
