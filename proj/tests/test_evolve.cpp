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

#include <cmath>

#include "helpers.hpp"
#include "simplexq/evolve.hpp"
#include "simplexq/gates.hpp"

using namespace simplexq;
using namespace simplexq::testing;

namespace {

Eigen::Matrix2cd sigma_x_half() {
    Eigen::Matrix2cd h;
    h << 0.0, 0.5, 0.5, 0.0;
    return h;
}

HilbertState rabi_solution(double t) {
    return HilbertState(Eigen::Vector2cd(std::cos(t / 2.0),
                                         std::complex<double>(0.0, -1.0) * std::sin(t / 2.0)));
}

Eigen::MatrixXcd matrix_exponential(const Eigen::MatrixXcd& h, double t) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    const std::complex<double> minus_i(0.0, -1.0);
    const Eigen::VectorXcd phases =
        (minus_i * t * es.eigenvalues().cast<std::complex<double>>().array()).exp();
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

TEST_CASE("zero Hamiltonian has zero generator") {
    const EffectiveHamiltonian h = effective_hamiltonian(Eigen::Matrix2cd::Zero());
    CHECK(h.entries.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("real Hamiltonians produce a generator with no diagonal blocks") {
    const EffectiveHamiltonian h = effective_hamiltonian(sigma_x_half());
    // Im(H) = 0 kills the block-diagonal part; what remains couples the x and
    // y sectors through -Re(H) on the paired block positions.
    for (int b = 0; b < 4; ++b) {
        CHECK(h.entries.block(2 * b, 2 * b, 2, 2).cwiseAbs().maxCoeff() == 0.0);
    }
    CHECK(max_abs_diff(h.entries.block(0, 6, 2, 2), (-sigma_x_half().real()).eval()) == 0.0);
}

TEST_CASE("the generator annihilates the probability sum") {
    const Eigen::MatrixXcd a = Eigen::MatrixXcd::Random(2, 2);
    const Eigen::MatrixXcd h = 0.5 * (a + a.adjoint());
    const EffectiveHamiltonian gen = effective_hamiltonian(h);
    for (int i = 0; i < 100; ++i) {
        const PVector p = random_p(2, 4200 + i);
        CHECK(std::abs((gen.entries * p.entries).sum()) < 1e-14);
    }
}

TEST_CASE("effective_hamiltonian rejects non-Hermitian input") {
    Eigen::Matrix2cd h;
    h << 0.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(effective_hamiltonian(h), NotHermitian);
}

TEST_CASE("free evolution is the constant trajectory") {
    const SimplexState s0 = map_state(random_state(2, 31));
    const EvolutionResult r = evolve(s0, Eigen::Matrix2cd::Zero(), 1.0, 0.01);
    CHECK(r.times.size() == 101);
    for (const SimplexState& s : r.states) {
        CHECK(max_abs_diff(s.entries, s0.entries) == 0.0);
    }
    CHECK(sum_residual(r) == 0.0);
}

TEST_CASE("resonant drive matches the closed-form solution") {
    const SimplexState s0 = map_state(ket2(1.0, 0.0));
    const EvolutionResult r = evolve(s0, sigma_x_half(), 2.0 * M_PI, 1e-3);
    double worst = 0.0;
    for (std::size_t i = 0; i < r.times.size(); i += 97) {
        worst = std::max(worst, max_abs_diff(r.states[i].entries,
                                             map_state(rabi_solution(r.times[i])).entries));
    }
    CHECK(worst < 1e-8);
    CHECK(sum_residual(r) < 1e-10);
    // The deviation norm stays on the sphere along the whole trajectory.
    for (double res : r.p_norm_residuals) {
        CHECK(res < 1e-8);
    }
}

TEST_CASE("diagonal Hamiltonian evolution equals the phase transform") {
    const double omega = 1.3;
    Eigen::Matrix2cd h = Eigen::Matrix2cd::Zero();
    h(1, 1) = omega;
    const SimplexState s0 = map_state(random_state(2, 57));
    const EvolutionResult r = evolve(s0, h, 2.0, 1e-3);
    for (std::size_t i = 0; i < r.times.size(); i += 211) {
        const SimplexState expected = apply(phase(-omega * r.times[i]), s0);
        CHECK(max_abs_diff(r.states[i].entries, expected.entries) < 1e-9);
    }
}

TEST_CASE("evolution matches the reference propagator for random Hamiltonians") {
    for (int k : {2, 4}) {
        const Eigen::MatrixXcd a = Eigen::MatrixXcd::Random(k, k);
        const Eigen::MatrixXcd h = 0.5 * (a + a.adjoint());
        const HilbertState psi0 = random_state(k, 71 + k);
        const EvolutionResult r = evolve(map_state(psi0), h, 1.5, 1e-3);
        const HilbertState ref = schrodinger_reference(psi0, h, 1.5);
        CHECK(max_abs_diff(r.states.back().entries, map_state(ref).entries) < 1e-8);
    }
}

TEST_CASE("one integrator step agrees with the embedded differential operator") {
    // The first-order step I - dt * M(iH) approximates the transform of the
    // exact step operator to second order: halving dt divides the gap by
    // about four.
    const Eigen::MatrixXcd h = sigma_x_half();
    const std::complex<double> im(0.0, 1.0);
    const auto gap = [&](double dt) {
        const Eigen::MatrixXd first_order =
            Eigen::MatrixXd::Identity(8, 8) - dt * block_embedding(im * h);
        const Eigen::MatrixXd exact =
            build_transform(matrix_exponential(h, dt)).entries;
        return (first_order - exact).cwiseAbs().maxCoeff();
    };
    const double g1 = gap(1e-3);
    const double g2 = gap(5e-4);
    CHECK(g1 / g2 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("time-dependent drive integrates through the substage samples") {
    // H(t) = cos(t) * (sigma_x / 2) commutes with itself at all times, so the
    // exact solution is the rotation by the integrated area sin(t).
    const HamiltonianProvider h = [](double t) {
        return (std::cos(t) * sigma_x_half()).eval();
    };
    const SimplexState s0 = map_state(ket2(1.0, 0.0));
    const EvolutionResult r = evolve(s0, h, 3.0, 1e-3);
    double worst = 0.0;
    for (std::size_t i = 0; i < r.times.size(); i += 139) {
        const double area = std::sin(r.times[i]);
        worst = std::max(worst, max_abs_diff(r.states[i].entries,
                                             map_state(rabi_solution(area)).entries));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("zero final time stores only the initial state") {
    const SimplexState s0 = map_state(random_state(2, 3));
    const EvolutionResult r = evolve(s0, sigma_x_half(), 0.0, 0.1);
    CHECK(r.times.size() == 1);
    CHECK(r.times[0] == 0.0);
    CHECK(max_abs_diff(r.states[0].entries, s0.entries) == 0.0);
}

TEST_CASE("partial final step lands exactly on the requested time") {
    const HilbertState psi0 = random_state(2, 4);
    const EvolutionResult r = evolve(map_state(psi0), sigma_x_half(), 0.25, 0.1);
    CHECK(r.times.size() == 4);
    CHECK(r.times.back() == 0.25);
    const HilbertState ref = schrodinger_reference(psi0, sigma_x_half(), 0.25);
    CHECK(max_abs_diff(r.states.back().entries, map_state(ref).entries) < 1e-10);
}

TEST_CASE("step errors reduce at fourth order") {
    const SimplexState s0 = map_state(ket2(1.0, 0.0));
    const auto error_at = [&](double dt) {
        const EvolutionResult r = evolve(s0, sigma_x_half(), 2.0 * M_PI, dt);
        return max_abs_diff(r.states.back().entries,
                            map_state(rabi_solution(r.times.back())).entries);
    };
    const double e1 = error_at(0.1);
    const double e2 = error_at(0.05);
    MESSAGE("errors: dt=0.1 -> ", e1, ", dt=0.05 -> ", e2, ", ratio ", e1 / e2);
    CHECK(e1 / e2 > 12.0);
    CHECK(e1 / e2 < 20.0);
}

TEST_CASE("invalid step parameters are rejected") {
    const SimplexState s0 = map_state(random_state(2, 5));
    CHECK_THROWS_AS(evolve(s0, sigma_x_half(), 1.0, 0.0), InvalidStep);
    CHECK_THROWS_AS(evolve(s0, sigma_x_half(), 1.0, -0.1), InvalidStep);
    CHECK_THROWS_AS(evolve(s0, sigma_x_half(), -1.0, 0.1), InvalidStep);
}

TEST_CASE("non-Hermitian provider samples are rejected") {
    const SimplexState s0 = map_state(random_state(2, 6));
    const HamiltonianProvider h = [](double t) {
        Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
        m(0, 1) = t >= 0.05 ? 1.0 : 0.0;  // turns non-Hermitian mid-run
        return m;
    };
    CHECK_THROWS_AS(evolve(s0, h, 1.0, 0.01), NotHermitian);
}

TEST_CASE("sum_residual rejects empty results") {
    CHECK_THROWS_AS(sum_residual(EvolutionResult{}), DimensionMismatch);
}
