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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "simplexq/circuit.hpp"
#include "simplexq/types.hpp"

namespace simplexq {

enum class RunMode { simplex, hilbert, both };

/// Which representation carries a 2-qubit simplex run: the 64-entry tensor
/// product of per-qubit vectors, or the 16-entry joint-state embedding.
/// Single-qubit programs use the plain 8-entry representation either way.
enum class Representation { tensor64, box16 };

struct RunReport {
    int qubit_count = 1;
    RunMode mode = RunMode::both;
    Representation repr = Representation::box16;
    bool has_hilbert = false;
    Eigen::VectorXcd hilbert_final;
    bool has_simplex = false;
    Eigen::VectorXd simplex_final;
    /// Max componentwise deviation between the mapped Hilbert result and the
    /// simplex result (mode both only). For tensor64 the comparison happens in
    /// the 16-entry joint representation recovered by bilinear extraction.
    double max_deviation = 0.0;
};

/// Execute a parsed program. In the tensor64 representation the initial joint
/// state must factor into a product; single-qubit gates extend to the
/// 64-entry vector through the per-qubit marginals, CU is not available.
RunReport run(const CircuitProgram& program, RunMode mode, Representation repr);

/// Serialize one number for CSV: shortest-general form with 17 significant
/// digits, locale independent.
std::string csv_number(double v);

/// Rotation sweep from the ground state: `steps` rows with
/// theta_k = 2*pi*k/steps and the eight simplex entries after rabi(theta_k).
/// Columns: theta,s1,...,s8.
void rabi_sweep(int steps, std::ostream& out);

/// Integrate a Hamiltonian preset from a given state and stream the stored
/// trajectory. Columns: t, s1..s{4K}, sum_residual.
void evolve_to_csv(const Eigen::MatrixXcd& h, const HilbertState& psi0, double t_final,
                   double dt, std::ostream& out);

/// Run the commuting-diagram suite against the reference simulator and print
/// one table row per check. Returns the number of failed checks.
int verify_suite(std::uint64_t seed, double tol, std::ostream& out);

}  // namespace simplexq
