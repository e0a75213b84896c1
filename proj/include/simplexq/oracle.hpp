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

#include "simplexq/types.hpp"

namespace simplexq {

/// Max-abs entry of U†U - I.
double unitarity_error(const Eigen::MatrixXcd& u);

/// Max-abs entry of H - H†.
double hermiticity_error(const Eigen::MatrixXcd& h);

/// A unitary operator on a K-level system, checked on construction.
struct UnitaryMatrix {
    Eigen::MatrixXcd entries;

    explicit UnitaryMatrix(Eigen::MatrixXcd u, double tol = kUnitaryTol)
        : entries(std::move(u)) {
        if (entries.rows() != entries.cols() || entries.rows() < 1) {
            throw DimensionMismatch("UnitaryMatrix must be square");
        }
        if (unitarity_error(entries) > tol) {
            throw NotUnitary("UnitaryMatrix: U†U deviates from identity");
        }
    }

    int dim() const { return static_cast<int>(entries.rows()); }
};

/// Reference Hilbert-space evolution: psi -> U psi.
HilbertState apply_unitary(const UnitaryMatrix& u, const HilbertState& psi);

/// Normalized state with complex-Gaussian amplitudes; deterministic per seed.
HilbertState random_state(int k, std::uint64_t seed);

/// Haar-distributed unitary via QR orthonormalization of a complex-Gaussian
/// matrix; deterministic per seed. Redraws internally on rank deficiency and
/// throws DegenerateDraw only after bounded retries.
UnitaryMatrix random_unitary(int k, std::uint64_t seed);

/// exp(-i H t) psi0 via Hermitian eigendecomposition, hbar = 1.
HilbertState schrodinger_reference(const HilbertState& psi0, const Eigen::MatrixXcd& h,
                                   double t, double herm_tol = kHermitianTol);

// The named gates used throughout: a rotation-by-pi/4 Hadamard, the general
// rotation it specializes, the phase gate, and the two-qubit controlled ops.
Eigen::Matrix2cd u_hadamard();
Eigen::Matrix2cd u_rabi(double theta);
Eigen::Matrix2cd u_phase(double alpha);
Eigen::Matrix4cd u_cnot();
Eigen::Matrix4cd u_controlled(const Eigen::Matrix2cd& u);

}  // namespace simplexq
