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

#include "simplexq/evolve.hpp"

#include <cmath>

#include "simplexq/core.hpp"
#include "simplexq/gates.hpp"
#include "simplexq/oracle.hpp"

namespace simplexq {

namespace {

Eigen::MatrixXd generator_at(const HamiltonianProvider& h, double t, int k, double herm_tol) {
    const Eigen::MatrixXcd sample = h(t);
    if (sample.rows() != k || sample.cols() != k) {
        throw DimensionMismatch("evolve: Hamiltonian sample has wrong dimensions");
    }
    if (hermiticity_error(sample) > herm_tol) {
        throw NotHermitian("evolve: Hamiltonian sample is not Hermitian at t = " +
                           std::to_string(t));
    }
    Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(4 * k, 4 * k);
    const Eigen::MatrixXd re = sample.real();
    const Eigen::MatrixXd im = sample.imag();
    const Eigen::Matrix4d& r = block_r();
    const Eigen::Matrix4d& i = block_i();
    for (int br = 0; br < 4; ++br) {
        for (int bc = 0; bc < 4; ++bc) {
            if (r(br, bc) != 0.0) gen.block(br * k, bc * k, k, k) = im;
            if (i(br, bc) != 0.0) gen.block(br * k, bc * k, k, k) = -re;
        }
    }
    return gen;
}

void record(EvolutionResult& out, double t, int k, const Eigen::VectorXd& p) {
    SimplexState s(k, (1.0 + p.array()) / (4.0 * k));
    out.times.push_back(t);
    out.sum_residuals.push_back(std::abs(s.entries.sum() - 1.0));
    out.p_norm_residuals.push_back(std::abs(p.norm() - std::sqrt(2.0)));
    out.states.push_back(std::move(s));
}

}  // namespace

EffectiveHamiltonian effective_hamiltonian(const Eigen::MatrixXcd& h, double herm_tol) {
    if (h.rows() != h.cols() || h.rows() < 1) {
        throw DimensionMismatch("effective_hamiltonian: operator must be square");
    }
    if (hermiticity_error(h) > herm_tol) {
        throw NotHermitian("effective_hamiltonian: input is not Hermitian");
    }
    const int k = static_cast<int>(h.rows());
    const HamiltonianProvider constant = [&h](double) { return h; };
    return EffectiveHamiltonian{k, generator_at(constant, 0.0, k, herm_tol)};
}

EvolutionResult evolve(const SimplexState& s0, const HamiltonianProvider& h, double t_final,
                       double dt, double herm_tol) {
    if (!(dt > 0.0) || !std::isfinite(dt) || !(t_final >= 0.0) || !std::isfinite(t_final)) {
        throw InvalidStep("evolve: need dt > 0 and t_final >= 0");
    }
    if (t_final / dt > 5e7) {
        throw InvalidStep("evolve: step count exceeds 5e7");
    }
    const int k = s0.dim;

    EvolutionResult out;
    Eigen::VectorXd p = 4.0 * k * s0.entries.array() - 1.0;
    record(out, 0.0, k, p);

    // Evolving the deviation vector keeps the probability sum exactly
    // conserved: the generator maps block-antisymmetric vectors to
    // block-antisymmetric vectors at every substage.
    const auto advance = [&](double t, double step) {
        const Eigen::MatrixXd g1 = generator_at(h, t, k, herm_tol);
        const Eigen::MatrixXd g2 = generator_at(h, t + 0.5 * step, k, herm_tol);
        const Eigen::MatrixXd g4 = generator_at(h, t + step, k, herm_tol);
        const Eigen::VectorXd k1 = g1 * p;
        const Eigen::VectorXd k2 = g2 * (p + 0.5 * step * k1);
        const Eigen::VectorXd k3 = g2 * (p + 0.5 * step * k2);
        const Eigen::VectorXd k4 = g4 * (p + step * k3);
        p += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    };

    // Step boundaries are i*dt, not an accumulated sum, so stored times match
    // the grid an external reference would evaluate at.
    const long n_full = static_cast<long>(std::floor(t_final / dt * (1.0 + 1e-12)));
    for (long i = 0; i < n_full; ++i) {
        advance(i * dt, dt);
        record(out, (i + 1) * dt, k, p);
    }
    const double t_last = n_full * dt;
    if (t_final - t_last > 1e-9 * dt) {
        advance(t_last, t_final - t_last);
        record(out, t_final, k, p);
    }
    return out;
}

EvolutionResult evolve_constant(const SimplexState& s0, const Eigen::MatrixXcd& h,
                                double t_final, double dt, double herm_tol) {
    if (hermiticity_error(h) > herm_tol) {
        throw NotHermitian("evolve: Hamiltonian is not Hermitian");
    }
    return evolve(
        s0, [&h](double) { return h; }, t_final, dt, herm_tol);
}

double sum_residual(const EvolutionResult& result) {
    if (result.sum_residuals.empty()) {
        throw DimensionMismatch("sum_residual: empty trajectory");
    }
    double worst = 0.0;
    for (double r : result.sum_residuals) {
        worst = std::max(worst, r);
    }
    return worst;
}

}  // namespace simplexq
