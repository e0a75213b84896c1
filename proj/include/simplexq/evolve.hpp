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

#include <functional>
#include <vector>

#include "simplexq/types.hpp"

namespace simplexq {

/// Generator of simplex time evolution for a Hermitian H (hbar = 1,
/// Hamiltonians in angular-frequency units):
///   H_eff = R(x)Im(H) - I(x)Re(H).
/// Applied to any block-antisymmetric vector it yields a block-antisymmetric
/// vector, so 1ᵀ·H_eff·p = 0 and the probability sum is conserved.
struct EffectiveHamiltonian {
    int dim = 0;
    Eigen::MatrixXd entries;  ///< 4K x 4K
};

EffectiveHamiltonian effective_hamiltonian(const Eigen::MatrixXcd& h,
                                           double herm_tol = kHermitianTol);

/// Time-dependent Hamiltonian provider; must be side-effect free. Sampled at
/// the integrator substage times.
using HamiltonianProvider = std::function<Eigen::MatrixXcd(double)>;

/// Stored trajectory of the simplex evolution equation together with
/// per-step conservation diagnostics.
struct EvolutionResult {
    std::vector<double> times;
    std::vector<SimplexState> states;
    std::vector<double> sum_residuals;     ///< |sum s(t) - 1| at each stored time
    std::vector<double> p_norm_residuals;  ///< | ||p(t)|| - sqrt(2) | at each stored time
};

/// Integrate d s/dt = H_eff(t)·(s - 1/(4K)·1) with the classical fixed-step
/// fourth-order scheme. The state is advanced through its deviation vector,
/// which the generator keeps exactly block-antisymmetric, so the probability
/// sum is conserved to rounding.
///
/// Throws InvalidStep for dt <= 0 or t_final < 0, NotHermitian if the
/// provider returns a non-Hermitian sample.
EvolutionResult evolve(const SimplexState& s0, const HamiltonianProvider& h, double t_final,
                       double dt, double herm_tol = kHermitianTol);

/// Convenience entry point for a constant Hamiltonian.
EvolutionResult evolve_constant(const SimplexState& s0, const Eigen::MatrixXcd& h,
                                double t_final, double dt, double herm_tol = kHermitianTol);

template <typename Derived>
EvolutionResult evolve(const SimplexState& s0, const Eigen::MatrixBase<Derived>& h,
                       double t_final, double dt, double herm_tol = kHermitianTol) {
    return evolve_constant(s0, h.template cast<std::complex<double>>(), t_final, dt, herm_tol);
}

/// Largest |sum s(t) - 1| over the stored trajectory.
double sum_residual(const EvolutionResult& result);

}  // namespace simplexq
