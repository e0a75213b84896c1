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

#include <doctest.h>

#include <clocale>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "helpers.hpp"
#include "simplexq/multiqubit.hpp"
#include "simplexq/run.hpp"

using namespace simplexq;
using namespace simplexq::testing;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

std::vector<double> parse_csv_row(const std::string& line) {
    std::vector<double> out;
    std::istringstream in(line);
    std::string field;
    while (std::getline(in, field, ',')) {
        out.push_back(std::strtod(field.c_str(), nullptr));
    }
    return out;
}

}  // namespace

TEST_CASE("single-qubit circuit tracks the reference in mode both") {
    const CircuitProgram p = parse_circuit("qubits 1\ninit |0>\nH 0\n");
    const RunReport r = run(p, RunMode::both, Representation::box16);
    CHECK(r.has_hilbert);
    CHECK(r.has_simplex);
    CHECK(r.max_deviation < 1e-12);
}

TEST_CASE("gate chains keep the deviation small") {
    const CircuitProgram p = parse_circuit(
        "qubits 1\ninit (0.6,0) (0,0.8)\nH 0\nPHASE 0 0.7\nRABI 0 2.1\nH 0\nPHASE 0 -1.3\n");
    const RunReport r = run(p, RunMode::both, Representation::box16);
    CHECK(r.max_deviation < 1e-12);
}

TEST_CASE("controlled-not on the compact representation recovers the flipped ket") {
    const CircuitProgram p = parse_circuit("qubits 2\ninit |10>\nCNOT 0 1\n");
    const RunReport r = run(p, RunMode::both, Representation::box16);
    CHECK(r.max_deviation == 0.0);
    const SimplexState expected = map_state(joint(basis(2, 1), basis(2, 1)));
    CHECK(max_abs_diff(r.simplex_final, expected.entries) == 0.0);
}

TEST_CASE("tensor representation runs the conjugated controlled-not") {
    const CircuitProgram p = parse_circuit("qubits 2\ninit |10>\nCNOT 0 1\n");
    const RunReport r = run(p, RunMode::both, Representation::tensor64);
    CHECK(r.simplex_final.size() == 64);
    // The 64-entry output is the conjugated permutation applied to the input
    // product; in the joint representation it carries exactly the flipped ket.
    const Eigen::VectorXd direct = apply_cnot64(
        tensor(map_state(basis(2, 1)), map_state(basis(2, 0))).combined);
    CHECK(max_abs_diff(r.simplex_final, direct) == 0.0);
    CHECK(r.max_deviation < 1e-12);
}

TEST_CASE("entangling circuit stays consistent in both representations") {
    const char* bell = "qubits 2\ninit |00>\nH 0\nCNOT 0 1\n";
    const CircuitProgram p = parse_circuit(bell);
    const RunReport box = run(p, RunMode::both, Representation::box16);
    CHECK(box.max_deviation < 1e-12);
    const RunReport tensor_run = run(p, RunMode::both, Representation::tensor64);
    CHECK(tensor_run.max_deviation < 1e-12);
    // The 64-entry state after the entangler does not factor any more.
    const Eigen::Map<const Eigen::Matrix<double, 8, 8, Eigen::RowMajor>> grid(
        tensor_run.simplex_final.data());
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(grid);
    CHECK(svd.singularValues()(1) > 1e-3);
}

TEST_CASE("second-qubit gates work in both two-qubit representations") {
    const char* text = "qubits 2\ninit |01>\nH 1\nPHASE 1 0.9\nH 0\n";
    const CircuitProgram p = parse_circuit(text);
    CHECK(run(p, RunMode::both, Representation::box16).max_deviation < 1e-12);
    CHECK(run(p, RunMode::both, Representation::tensor64).max_deviation < 1e-12);
}

TEST_CASE("controlled-U runs on the compact representation only") {
    const char* text =
        "qubits 2\ninit |10>\nCU 0 1 (1,0) (0,0) (0,0) (0,1)\n";
    const CircuitProgram p = parse_circuit(text);
    const RunReport r = run(p, RunMode::both, Representation::box16);
    CHECK(r.max_deviation < 1e-12);
    CHECK_THROWS_AS(run(p, RunMode::both, Representation::tensor64), Error);
}

TEST_CASE("tensor representation rejects entangled initial states") {
    const CircuitProgram p = parse_circuit(
        "qubits 2\ninit (0.70710678118654746,0) (0,0) (0,0) (0.70710678118654746,0)\n");
    CHECK_THROWS_AS(run(p, RunMode::simplex, Representation::tensor64), Error);
    CHECK_NOTHROW(run(p, RunMode::simplex, Representation::box16));
}

TEST_CASE("hilbert-only and simplex-only modes populate one side") {
    const CircuitProgram p = parse_circuit("qubits 1\ninit |0>\nH 0\n");
    const RunReport h = run(p, RunMode::hilbert, Representation::box16);
    CHECK(h.has_hilbert);
    CHECK(!h.has_simplex);
    const RunReport s = run(p, RunMode::simplex, Representation::box16);
    CHECK(!s.has_hilbert);
    CHECK(s.has_simplex);
}

TEST_CASE("rotation sweep emits the expected landmark rows") {
    std::ostringstream out;
    rabi_sweep(1000, out);
    const std::vector<std::string> lines = split_lines(out.str());
    REQUIRE(lines.size() == 1001);
    CHECK(lines[0] == "theta,s1,s2,s3,s4,s5,s6,s7,s8");
    const std::vector<double> at0 = parse_csv_row(lines[1]);
    CHECK(at0[0] == 0.0);
    CHECK(at0[1] == 0.25);
    const std::vector<double> at_quarter = parse_csv_row(lines[251]);
    CHECK(std::abs(at_quarter[1] - 0.125) < 1e-12);
    const std::vector<double> at_half = parse_csv_row(lines[501]);
    CHECK(std::abs(at_half[1]) < 1e-12);
    for (const std::string& line : lines) {
        CHECK(line.find(' ') == std::string::npos);
    }
}

TEST_CASE("rotation sweep validates the step count") {
    std::ostringstream out;
    CHECK_THROWS_AS(rabi_sweep(1, out), InvalidStep);
}

TEST_CASE("evolution trajectory lands in the file with diagnostics") {
    Eigen::Matrix2cd h;
    h << 0.0, 0.5, 0.5, 0.0;
    std::ostringstream out;
    evolve_to_csv(h, HilbertState(Eigen::Vector2cd(1.0, 0.0)), 2.0 * M_PI, 1e-2, out);
    const std::vector<std::string> lines = split_lines(out.str());
    REQUIRE(lines.size() >= 2);
    CHECK(lines[0] == "t,s1,s2,s3,s4,s5,s6,s7,s8,sum_residual");
    for (std::size_t i = 1; i < lines.size(); i += 63) {
        const std::vector<double> row = parse_csv_row(lines[i]);
        REQUIRE(row.size() == 10);
        CHECK(std::abs(row[1] - (1.0 + std::cos(row[0])) / 8.0) < 1e-7);
        CHECK(row[9] < 1e-10);
    }
}

TEST_CASE("zero-length evolution emits a single row") {
    Eigen::Matrix2cd h = Eigen::Matrix2cd::Zero();
    std::ostringstream out;
    evolve_to_csv(h, HilbertState(Eigen::Vector2cd(1.0, 0.0)), 0.0, 1e-3, out);
    const std::vector<std::string> lines = split_lines(out.str());
    CHECK(lines.size() == 2);
    const std::vector<double> row = parse_csv_row(lines[1]);
    CHECK(row[0] == 0.0);
    CHECK(row[1] == 0.25);
}

TEST_CASE("csv numbers round-trip exactly") {
    const double values[] = {0.0,          1.0 / 3.0,      M_PI,
                             1e-300,       -2.5e17,        0.1,
                             M_SQRT1_2,    -1.0 / 7.0,     6.02214076e23};
    for (double v : values) {
        CHECK(std::strtod(csv_number(v).c_str(), nullptr) == v);
    }
}

TEST_CASE("csv output ignores the global locale") {
    const char* previous = std::setlocale(LC_ALL, nullptr);
    const std::string saved = previous ? previous : "C";
    const bool has_locale = std::setlocale(LC_ALL, "de_DE.UTF-8") != nullptr ||
                            std::setlocale(LC_ALL, "de_DE.utf8") != nullptr;
    if (has_locale) {
        CHECK(csv_number(0.5) == "0.5");
        std::ostringstream out;
        rabi_sweep(4, out);
        CHECK(out.str().find(',') != std::string::npos);
        CHECK(out.str().find("0,5") == std::string::npos);
    } else {
        MESSAGE("no German locale installed; skipping the locale check");
    }
    std::setlocale(LC_ALL, saved.c_str());
}

TEST_CASE("verify suite passes at its default tolerance") {
    std::ostringstream out;
    const int failures = verify_suite(20260810, 1e-10, out);
    CHECK(failures == 0);
    CHECK(out.str().find("FAIL") == std::string::npos);
    CHECK(out.str().find("pass") != std::string::npos);
}
