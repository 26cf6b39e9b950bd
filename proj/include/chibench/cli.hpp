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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chibench/bench.hpp"
#include "chibench/io.hpp"
#include "chibench/source.hpp"

// Command-line driver. Exit codes: 0 success, 1 failed verification,
// 2 usage or parse errors.

namespace chibench::cli {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

// "pauli:1,2" / "chi:0,3" -> the two indices after the expected tag.
inline std::pair<Pauli, Pauli> parse_indexed_target(const std::string& spec, const std::string& tag) {
    const std::string prefix = tag + ":";
    if (spec.rfind(prefix, 0) != 0) throw std::runtime_error("expected target of the form " + tag + ":I,J");
    const std::string rest = spec.substr(prefix.size());
    const size_t comma = rest.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 >= rest.size()) {
        throw std::runtime_error("expected target of the form " + tag + ":I,J");
    }
    auto parse_digit = [&](const std::string& s) {
        if (s.size() != 1 || s[0] < '0' || s[0] > '3') {
            throw std::runtime_error("pauli indices must be single digits 0..3, got '" + s + "'");
        }
        return pauli_from_index(s[0] - '0');
    };
    return {parse_digit(rest.substr(0, comma)), parse_digit(rest.substr(comma + 1))};
}

inline int run(int argc, const char* const* argv) {
    CLI::App app{"chibench: compile, simulate and verify optical benches that prepare "
                 "four-qubit chi states from hyper-entangled photon pairs"};
    app.require_subcommand(1);

    std::string compile_target, compile_out;
    auto* compile_cmd = app.add_subcommand("compile", "Compile a target into a bench file");
    compile_cmd->add_option("--target", compile_target, "chi00 or pauli:I,J")->required();
    compile_cmd->add_option("--out", compile_out, "Output bench file")->required();

    std::string sim_bench, sim_input = "x", sim_dump;
    auto* sim_cmd = app.add_subcommand("simulate", "Run a state through a bench and dump the result");
    sim_cmd->add_option("--bench", sim_bench, "Bench file")->required();
    sim_cmd->add_option("--input", sim_input, "'x' for the source pair, or a state dump file");
    sim_cmd->add_option("--dump", sim_dump, "Also write the dump to this file");

    std::string verify_bench, verify_target;
    double verify_tol = 1e-9;
    auto* verify_cmd = app.add_subcommand("verify", "Check the bench output against a chi state");
    verify_cmd->add_option("--bench", verify_bench, "Bench file")->required();
    verify_cmd->add_option("--target", verify_target, "chi:I,J")->required();
    verify_cmd->add_option("--tol", verify_tol, "Pass iff fidelity >= 1 - tol");

    std::string analyze_chi, analyze_state;
    auto* analyze_cmd = app.add_subcommand("analyze", "Entanglement report of a chi state or a dump");
    auto* chi_opt = analyze_cmd->add_option("--chi", analyze_chi, "I,J selecting chi^{IJ}");
    auto* state_opt = analyze_cmd->add_option("--state", analyze_state, "State dump file");
    chi_opt->excludes(state_opt);

    double basis_tol = 1e-12;
    auto* basis_cmd = app.add_subcommand("basis-check", "Gram-matrix deviation of the 16 chi states");
    basis_cmd->add_option("--tol", basis_tol, "Pass iff deviation < tol");

    double source_alpha = 1.0;
    auto* source_cmd = app.add_subcommand("source", "Heralding probability and the encoded source pair");
    source_cmd->add_option("--alpha", source_alpha, "Mode-matching amplitude of the l=0 term");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (compile_cmd->parsed()) {
            Bench bench;
            if (compile_target == "chi00") {
                bench = compile_chi00();
            } else {
                const auto [i, j] = parse_indexed_target(compile_target, "pauli");
                bench = compile_pauli(i, j);
            }
            write_file(compile_out, render_bench(bench));
            std::cout << "wrote " << compile_out << "\n";
            return 0;
        }

        if (sim_cmd->parsed()) {
            const Bench bench = parse_bench(read_file(sim_bench));
            const PairState input = sim_input == "x" ? x_state() : parse_state_dump(read_file(sim_input));
            const PairState output = simulate(bench, input);
            const std::string dump = render_state_dump(output);
            std::cout << dump;
            if (!sim_dump.empty()) write_file(sim_dump, dump);
            return 0;
        }

        if (verify_cmd->parsed()) {
            const auto [i, j] = parse_indexed_target(verify_target, "chi");
            const Bench bench = parse_bench(read_file(verify_bench));
            const PairState output = simulate(bench, x_state());
            const double fid = fidelity(output, chi_state(i, j));
            std::cout << "target: " << verify_target << "\n";
            std::cout << "fidelity: " << detail::format_amp(fid) << "\n";
            const bool pass = fid >= 1.0 - verify_tol;
            std::cout << "result: " << (pass ? "PASS" : "FAIL") << "\n";
            return pass ? 0 : 1;
        }

        if (analyze_cmd->parsed()) {
            PairState state;
            if (!analyze_chi.empty()) {
                const auto [i, j] = parse_indexed_target("chi:" + analyze_chi, "chi");
                state = chi_state(i, j);
            } else if (!analyze_state.empty()) {
                state = parse_state_dump(read_file(analyze_state));
            } else {
                std::cerr << "error: analyze needs --chi I,J or --state FILE\n";
                return 2;
            }
            std::cout << render_analysis_report(report(state), state.roles);
            return 0;
        }

        if (basis_cmd->parsed()) {
            const double deviation = basis_orthonormality(basis_tol);
            std::cout << "gram_deviation: " << detail::format_amp(deviation) << "\n";
            const bool pass = deviation < basis_tol;
            std::cout << "result: " << (pass ? "PASS" : "FAIL") << "\n";
            return pass ? 0 : 1;
        }

        if (source_cmd->parsed()) {
            const RawPairState raw = spdc_state(Complex{source_alpha, 0.0});
            const FilterResult filtered = oam_filter(raw, Photon::B);
            std::cout << "alpha: " << detail::format_amp(source_alpha) << "\n";
            std::cout << "heralding_probability: " << detail::format_amp(filtered.probability) << "\n";
            std::cout << render_state_dump(encode(filtered.filtered));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace chibench::cli
