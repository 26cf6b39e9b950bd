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

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "chibench/analysis.hpp"
#include "chibench/states.hpp"

// Text formats used at the CLI boundary.
//
// State dump document, version 1:
//
//   # chibench state v1
//   # roles: polA oamA oamB polB
//   0000 <re> <im>
//   ...          (exactly 16 data lines, ascending basis index,
//                 17-significant-digit scientific notation)

namespace chibench {

inline constexpr const char* kStateDumpHeader = "# chibench state v1";

namespace detail {

inline std::string format_amp(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

inline std::string bitstring(int index) {
    std::string s(4, '0');
    for (int b = 0; b < 4; ++b)
        if (index & (8 >> b)) s[static_cast<size_t>(b)] = '1';
    return s;
}

}  // namespace detail

inline std::string render_state_dump(const PairState& s) {
    std::ostringstream out;
    out << kStateDumpHeader << "\n# roles:";
    for (const QubitRole r : s.roles) out << " " << role_name(r);
    out << "\n";
    for (int idx = 0; idx < 16; ++idx) {
        out << detail::bitstring(idx) << " " << detail::format_amp(s.amps[idx].real()) << " "
            << detail::format_amp(s.amps[idx].imag()) << "\n";
    }
    return out.str();
}

struct DumpParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline PairState parse_state_dump(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.size() != 18) {
        throw DumpParseError("state dump must have 2 header lines and 16 data lines, got " +
                             std::to_string(lines.size()));
    }
    if (lines[0] != kStateDumpHeader) {
        throw DumpParseError("line 1: expected '" + std::string(kStateDumpHeader) + "'");
    }

    const std::string roles_prefix = "# roles: ";
    if (lines[1].rfind(roles_prefix, 0) != 0) throw DumpParseError("line 2: expected '# roles: ...'");
    std::istringstream roles_in(lines[1].substr(roles_prefix.size()));
    RoleOrder roles{};
    std::array<bool, 4> seen{};
    for (int k = 0; k < 4; ++k) {
        std::string name;
        if (!(roles_in >> name)) throw DumpParseError("line 2: expected four role names");
        bool matched = false;
        for (const QubitRole r : {QubitRole::polA, QubitRole::oamA, QubitRole::polB, QubitRole::oamB}) {
            if (name == role_name(r)) {
                roles[static_cast<size_t>(k)] = r;
                if (seen[static_cast<size_t>(static_cast<int>(r))]) {
                    throw DumpParseError("line 2: duplicate role '" + name + "'");
                }
                seen[static_cast<size_t>(static_cast<int>(r))] = true;
                matched = true;
                break;
            }
        }
        if (!matched) throw DumpParseError("line 2: unknown role '" + name + "'");
    }
    std::string extra;
    if (roles_in >> extra) throw DumpParseError("line 2: trailing content after the four roles");

    ComplexVector amps(16);
    for (int idx = 0; idx < 16; ++idx) {
        const int line_no = idx + 3;
        std::istringstream data(lines[static_cast<size_t>(idx + 2)]);
        std::string bits;
        double re = 0.0, im = 0.0;
        if (!(data >> bits >> re >> im)) {
            throw DumpParseError("line " + std::to_string(line_no) + ": expected 'BITSTRING RE IM'");
        }
        if (data >> extra) throw DumpParseError("line " + std::to_string(line_no) + ": trailing content");
        if (bits != detail::bitstring(idx)) {
            throw DumpParseError("line " + std::to_string(line_no) + ": expected bitstring " +
                                 detail::bitstring(idx) + ", got '" + bits + "'");
        }
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw DumpParseError("line " + std::to_string(line_no) + ": non-finite amplitude");
        }
        amps[idx] = Complex{re, im};
    }
    if (std::abs(amps.norm() - 1.0) > 1e-9) {
        throw DumpParseError("state dump is not normalized (norm = " + std::to_string(amps.norm()) + ")");
    }
    return make_pair_state(std::move(amps), roles);
}

// Human-readable table followed by a tab-separated block with the same
// numbers, for downstream tooling.
inline std::string render_analysis_report(const AnalysisReport& r, const RoleOrder& roles) {
    std::ostringstream out;
    out << "analysis report (slots a b c d =";
    for (const QubitRole role : roles) out << " " << role_name(role);
    out << ")\n\n";

    char buf[64];
    out << "bipartition entropies (bits)\n";
    for (size_t k = 0; k < kAllBipartitions.size(); ++k) {
        std::snprintf(buf, sizeof buf, "  %-6s %.12f\n", bipartition_name(kAllBipartitions[k]),
                      r.bipartition_entropies[k]);
        out << buf;
    }
    out << "\npair concurrences\n";
    for (size_t k = 0; k < kQubitPairs.size(); ++k) {
        std::snprintf(buf, sizeof buf, "  %-6s %.12f\n", pair_name(static_cast<int>(k)), r.pair_concurrences[k]);
        out << buf;
    }
    out << "\nchi-basis fidelities |<chi_ij|s>|^2\n";
    for (int i = 0; i < 4; ++i) {
        out << " ";
        for (int j = 0; j < 4; ++j) {
            std::snprintf(buf, sizeof buf, " (%d,%d) %.12f", i, j,
                          r.target_fidelities[static_cast<size_t>(4 * i + j)]);
            out << buf;
        }
        out << "\n";
    }

    out << "\n# tsv\n";
    for (size_t k = 0; k < kAllBipartitions.size(); ++k) {
        out << "entropy\t" << bipartition_name(kAllBipartitions[k]) << "\t"
            << detail::format_amp(r.bipartition_entropies[k]) << "\n";
    }
    for (size_t k = 0; k < kQubitPairs.size(); ++k) {
        out << "concurrence\t" << pair_name(static_cast<int>(k)) << "\t"
            << detail::format_amp(r.pair_concurrences[k]) << "\n";
    }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            out << "fidelity\t" << i << "," << j << "\t"
                << detail::format_amp(r.target_fidelities[static_cast<size_t>(4 * i + j)]) << "\n";
        }
    return out.str();
}

}  // namespace chibench
