// Copyright 2026 The simplexq Authors
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

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "simplexq/circuit.hpp"
#include "simplexq/core.hpp"
#include "simplexq/run.hpp"

namespace {

using namespace simplexq;

// Interpret positional state tokens: a single ket like |10>, or one
// amplitude literal per basis state (dimension = token count).
HilbertState state_from_tokens(const std::vector<std::string>& tokens) {
    if (tokens.empty()) {
        throw ParseError(ParseErrorKind::syntax, 1, 1, "no state given");
    }
    if (tokens.size() == 1 && tokens[0].front() == '|') {
        const std::string& t = tokens[0];
        if (t.size() < 3 || t.back() != '>') {
            throw ParseError(ParseErrorKind::syntax, 1, 1, "malformed ket '" + t + "'");
        }
        const int bits = static_cast<int>(t.size()) - 2;
        int index = 0;
        for (int b = 0; b < bits; ++b) {
            if (t[1 + b] != '0' && t[1 + b] != '1') {
                throw ParseError(ParseErrorKind::syntax, 1, 1, "ket bits must be 0 or 1");
            }
            index = 2 * index + (t[1 + b] - '0');
        }
        Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(1 << bits);
        amps(index) = 1.0;
        return HilbertState(std::move(amps));
    }
    Eigen::VectorXcd amps(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        amps(static_cast<int>(i)) = parse_amplitude_literal(tokens[i], 1, 1);
    }
    return HilbertState(std::move(amps));
}

void print_vector(std::ostream& out, const char* label, const Eigen::VectorXd& v) {
    out << label;
    for (int i = 0; i < v.size(); ++i) {
        out << (i ? " " : "") << csv_number(v(i));
    }
    out << "\n";
}

void print_state(std::ostream& out, const char* label, const Eigen::VectorXcd& v) {
    out << label;
    for (int i = 0; i < v.size(); ++i) {
        out << (i ? " " : "") << "(" << csv_number(v(i).real()) << ","
            << csv_number(v(i).imag()) << ")";
    }
    out << "\n";
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    return f;
}

int cmd_map(const std::vector<std::string>& tokens, const std::string& out_path) {
    const HilbertState psi = state_from_tokens(tokens);
    const SimplexState s = map_state(psi);
    const PVector p = p_of(s);
    const ValidityReport report = validate(s);
    std::cout << "K = " << s.dim << "\n";
    print_vector(std::cout, "s = ", s.entries);
    print_vector(std::cout, "p = ", p.entries);
    std::cout << "sum residual " << csv_number(report.sum_residual) << ", pair residual "
              << csv_number(report.pair_residual) << ", sphere residual "
              << csv_number(report.p_norm_residual) << ", in image: "
              << (report.in_image() ? "yes" : "no") << "\n";
    if (!out_path.empty()) {
        std::ofstream f = open_out(out_path);
        for (int i = 0; i < s.size(); ++i) {
            f << (i ? "," : "") << "s" << (i + 1);
        }
        f << "\n";
        for (int i = 0; i < s.size(); ++i) {
            f << (i ? "," : "") << csv_number(s.entries(i));
        }
        f << "\n";
    }
    return 0;
}

int cmd_run(const std::string& circuit_path, const std::string& mode_str,
            const std::string& repr_str, const std::string& out_path, double tol) {
    std::string text;
    if (circuit_path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream f(circuit_path);
        if (!f) {
            throw IoError("cannot read circuit file '" + circuit_path + "'");
        }
        std::ostringstream buffer;
        buffer << f.rdbuf();
        text = buffer.str();
    }
    const CircuitProgram program = parse_circuit(text);
    const RunMode mode = mode_str == "simplex" ? RunMode::simplex
                         : mode_str == "hilbert" ? RunMode::hilbert
                                                 : RunMode::both;
    const Representation repr =
        repr_str == "tensor64" ? Representation::tensor64 : Representation::box16;

    const RunReport report = run(program, mode, repr);
    std::cout << "qubits: " << report.qubit_count << ", mode: " << mode_str
              << ", repr: " << (report.qubit_count == 1 ? "single" : repr_str) << "\n";
    if (report.has_hilbert) {
        print_state(std::cout, "hilbert final: ", report.hilbert_final);
    }
    if (report.has_simplex) {
        print_vector(std::cout, "simplex final: ", report.simplex_final);
    }
    if (mode == RunMode::both) {
        std::cout << "max deviation: " << csv_number(report.max_deviation) << "\n";
        if (!(report.max_deviation < tol)) {
            std::cerr << "deviation exceeds tolerance " << csv_number(tol) << "\n";
            return 3;
        }
    }
    if (!out_path.empty() && report.has_simplex) {
        std::ofstream f = open_out(out_path);
        for (int i = 0; i < report.simplex_final.size(); ++i) {
            f << (i ? "," : "") << "s" << (i + 1);
        }
        f << "\n";
        for (int i = 0; i < report.simplex_final.size(); ++i) {
            f << (i ? "," : "") << csv_number(report.simplex_final(i));
        }
        f << "\n";
    }
    return 0;
}

Eigen::MatrixXcd preset_hamiltonian(const std::string& name, double delta, double omega) {
    Eigen::Matrix2cd h;
    if (name == "sigma_x") {
        h << 0.0, 0.5 * omega, 0.5 * omega, 0.0;
    } else if (name == "sigma_z") {
        h << 0.0, 0.0, 0.0, omega;
    } else if (name == "detuned") {
        h << -0.5 * delta, 0.5 * omega, 0.5 * omega, 0.5 * delta;
    } else {
        throw Error("unknown Hamiltonian preset '" + name + "'");
    }
    return h;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "simplexq: qubit states and gates simulated as probability vectors, side by side\n"
        "with a reference Hilbert-space simulator"};
    app.require_subcommand(1);

    // map
    auto* map_cmd = app.add_subcommand("map", "Map a state to its probability vector");
    std::vector<std::string> map_tokens;
    std::string map_out;
    map_cmd->add_option("state", map_tokens,
                        "ket like '|0>' or one '(re,im)' literal per basis state")
        ->required();
    map_cmd->add_option("--out", map_out, "write the entries as CSV");

    // run
    auto* run_cmd = app.add_subcommand("run", "Execute a circuit file");
    std::string circuit_path, run_mode = "both", run_repr = "box16", run_out;
    double run_tol = 1e-10;
    run_cmd->add_option("circuit", circuit_path, "circuit file path, or '-' for stdin")
        ->required();
    run_cmd->add_option("--mode", run_mode, "simplex | hilbert | both")
        ->check(CLI::IsMember({"simplex", "hilbert", "both"}));
    run_cmd->add_option("--repr", run_repr, "tensor64 | box16 (2-qubit runs)")
        ->check(CLI::IsMember({"tensor64", "box16"}));
    run_cmd->add_option("--out", run_out, "write the final simplex vector as CSV");
    run_cmd->add_option("--tol", run_tol, "mode-both deviation tolerance");

    // rabi-sweep
    auto* sweep_cmd = app.add_subcommand("rabi-sweep", "Rotation-angle sweep from |0>");
    int steps = 1000;
    std::string sweep_out;
    sweep_cmd->add_option("--steps", steps, "number of samples over [0, 2pi)");
    sweep_cmd->add_option("--out", sweep_out, "CSV path (default stdout)");

    // evolve
    auto* evolve_cmd = app.add_subcommand("evolve", "Integrate the simplex evolution equation");
    std::string h_name = "sigma_x", evolve_out;
    double delta = 0.0, omega = 1.0, t_final = 2.0 * M_PI, dt = 1e-3;
    std::vector<std::string> init_tokens;
    evolve_cmd->add_option("--h", h_name, "sigma_x | sigma_z | detuned")
        ->check(CLI::IsMember({"sigma_x", "sigma_z", "detuned"}));
    evolve_cmd->add_option("--delta", delta, "detuning (detuned preset)");
    evolve_cmd->add_option("--omega", omega, "angular frequency");
    evolve_cmd->add_option("--t-final", t_final, "end time");
    evolve_cmd->add_option("--dt", dt, "integrator step");
    evolve_cmd->add_option("--init", init_tokens, "initial state (default |0>)");
    evolve_cmd->add_option("--out", evolve_out, "CSV path (default stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run the commuting-diagram suite");
    std::uint64_t seed = 20260810;
    double verify_tol = 1e-10;
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_option("--tol", verify_tol, "pass/fail tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (map_cmd->parsed()) {
            return cmd_map(map_tokens, map_out);
        }
        if (run_cmd->parsed()) {
            return cmd_run(circuit_path, run_mode, run_repr, run_out, run_tol);
        }
        if (sweep_cmd->parsed()) {
            if (sweep_out.empty()) {
                simplexq::rabi_sweep(steps, std::cout);
            } else {
                std::ofstream f = open_out(sweep_out);
                simplexq::rabi_sweep(steps, f);
            }
            return 0;
        }
        if (evolve_cmd->parsed()) {
            const simplexq::HilbertState psi0 =
                init_tokens.empty()
                    ? simplexq::HilbertState(Eigen::Vector2cd(1.0, 0.0))
                    : state_from_tokens(init_tokens);
            const Eigen::MatrixXcd h = preset_hamiltonian(h_name, delta, omega);
            if (evolve_out.empty()) {
                simplexq::evolve_to_csv(h, psi0, t_final, dt, std::cout);
            } else {
                std::ofstream f = open_out(evolve_out);
                simplexq::evolve_to_csv(h, psi0, t_final, dt, f);
            }
            return 0;
        }
        if (verify_cmd->parsed()) {
            return simplexq::verify_suite(seed, verify_tol, std::cout) == 0 ? 0 : 3;
        }
    } catch (const simplexq::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const simplexq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
