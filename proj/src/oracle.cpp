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

#include "simplexq/oracle.hpp"

#include <cmath>
#include <random>

namespace simplexq {

namespace {

Eigen::MatrixXcd random_gaussian_matrix(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(i, j) = std::complex<double>(re, im);
        }
    }
    return m;
}

}  // namespace

double unitarity_error(const Eigen::MatrixXcd& u) {
    const Eigen::MatrixXcd gram = u.adjoint() * u;
    return (gram - Eigen::MatrixXcd::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

double hermiticity_error(const Eigen::MatrixXcd& h) {
    return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

HilbertState apply_unitary(const UnitaryMatrix& u, const HilbertState& psi) {
    if (u.dim() != psi.dim()) {
        throw DimensionMismatch("apply_unitary: operator and state dimensions differ");
    }
    return HilbertState(u.entries * psi.amplitudes);
}

HilbertState random_state(int k, std::uint64_t seed) {
    if (k < 1) {
        throw DimensionMismatch("random_state: dimension must be positive");
    }
    std::mt19937_64 rng(seed);
    Eigen::VectorXcd v = random_gaussian_matrix(k, 1, rng).col(0);
    // A zero draw has probability zero but a deterministic sampler still
    // guards against it.
    while (v.norm() < 1e-12) {
        v = random_gaussian_matrix(k, 1, rng).col(0);
    }
    v /= v.norm();
    return HilbertState(std::move(v));
}

UnitaryMatrix random_unitary(int k, std::uint64_t seed) {
    if (k < 1) {
        throw DimensionMismatch("random_unitary: dimension must be positive");
    }
    std::mt19937_64 rng(seed);
    constexpr int kMaxRetries = 8;
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        const Eigen::MatrixXcd a = random_gaussian_matrix(k, k, rng);
        const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
        const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
        if (r.diagonal().cwiseAbs().minCoeff() < 1e-12) {
            continue;  // rank-deficient draw, try again
        }
        Eigen::MatrixXcd q = qr.householderQ();
        // Fix the gauge so the distribution is Haar: absorb the phases of the
        // R diagonal into Q.
        for (int j = 0; j < k; ++j) {
            q.col(j) *= r(j, j) / std::abs(r(j, j));
        }
        return UnitaryMatrix(std::move(q), 1e-12);
    }
    throw DegenerateDraw("random_unitary: repeated rank-deficient draws");
}

HilbertState schrodinger_reference(const HilbertState& psi0, const Eigen::MatrixXcd& h,
                                   double t, double herm_tol) {
    if (h.rows() != h.cols() || h.rows() != psi0.dim()) {
        throw DimensionMismatch("schrodinger_reference: Hamiltonian/state dimensions differ");
    }
    if (hermiticity_error(h) > herm_tol) {
        throw NotHermitian("schrodinger_reference: Hamiltonian is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    const Eigen::VectorXd evals = es.eigenvalues();
    const Eigen::MatrixXcd evecs = es.eigenvectors();
    const std::complex<double> minus_i(0.0, -1.0);
    const Eigen::VectorXcd phases =
        (minus_i * t * evals.cast<std::complex<double>>().array()).exp();
    return HilbertState(evecs * phases.asDiagonal() * evecs.adjoint() * psi0.amplitudes);
}

Eigen::Matrix2cd u_hadamard() {
    Eigen::Matrix2cd u;
    u << M_SQRT1_2, -M_SQRT1_2, M_SQRT1_2, M_SQRT1_2;
    return u;
}

Eigen::Matrix2cd u_rabi(double theta) {
    Eigen::Matrix2cd u;
    u << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    return u;
}

Eigen::Matrix2cd u_phase(double alpha) {
    Eigen::Matrix2cd u;
    u << 1.0, 0.0, 0.0, std::exp(std::complex<double>(0.0, alpha));
    return u;
}

Eigen::Matrix4cd u_cnot() {
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
    u(0, 0) = 1.0;
    u(1, 1) = 1.0;
    u(2, 3) = 1.0;
    u(3, 2) = 1.0;
    return u;
}

Eigen::Matrix4cd u_controlled(const Eigen::Matrix2cd& u) {
    Eigen::Matrix4cd c = Eigen::Matrix4cd::Identity();
    c.block<2, 2>(2, 2) = u;
    return c;
}

}  // namespace simplexq
