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

#include <Eigen/Dense>
#include <cmath>

#include "simplexq/errors.hpp"

namespace simplexq {

// Default tolerances. Chosen with double-precision headroom over the error
// accumulated by cascades of gate products; every entry point that checks an
// invariant takes the tolerance as an overridable parameter.
inline constexpr double kNormTol = 1e-9;
inline constexpr double kStructTol = 1e-9;
inline constexpr double kUnitaryTol = 1e-9;
inline constexpr double kHermitianTol = 1e-9;

/// Pure state of a K-level quantum system: K complex amplitudes.
/// Consumers that require unit norm check norm_error() against a tolerance.
struct HilbertState {
    Eigen::VectorXcd amplitudes;

    HilbertState() = default;
    explicit HilbertState(Eigen::VectorXcd amps) : amplitudes(std::move(amps)) {
        if (amplitudes.size() < 1) {
            throw DimensionMismatch("HilbertState needs at least one amplitude");
        }
    }

    int dim() const { return static_cast<int>(amplitudes.size()); }
    double norm() const { return amplitudes.norm(); }
    double norm_error() const { return std::abs(norm() - 1.0); }
    Eigen::VectorXd re() const { return amplitudes.real(); }
    Eigen::VectorXd im() const { return amplitudes.imag(); }
};

/// Probability vector of dimension 4K holding the image of a K-level state.
///
/// Entry layout is four contiguous blocks of length K: (x, -x, y, -y), where
/// x and y are the real and imaginary parts of the amplitudes, each entry
/// offset by 1 and scaled by 1/4K. Value invariants (entries in [0,1], unit
/// sum, block-pair sums equal to 1/2K) are contracts measured by validate(),
/// not enforced on construction, so that diagnostics can be run on broken
/// vectors and on convex mixtures.
struct SimplexState {
    int dim = 0;              ///< Hilbert dimension K.
    Eigen::VectorXd entries;  ///< 4K probabilities.

    SimplexState() = default;
    SimplexState(int k, Eigen::VectorXd e) : dim(k), entries(std::move(e)) {
        if (dim < 1 || entries.size() != 4 * static_cast<Eigen::Index>(dim)) {
            throw DimensionMismatch("SimplexState requires 4*K entries");
        }
    }

    int size() const { return static_cast<int>(entries.size()); }
};

/// Deviation vector p = 4K*s - 1 in block layout (x, -x, y, -y).
///
/// For the image of a normalized state: entries sum to zero, the second and
/// fourth blocks are the negatives of the first and third, and the Euclidean
/// norm is sqrt(2).
struct PVector {
    int dim = 0;              ///< Hilbert dimension K.
    Eigen::VectorXd entries;  ///< 4K entries.

    PVector() = default;
    PVector(int k, Eigen::VectorXd e) : dim(k), entries(std::move(e)) {
        if (dim < 1 || entries.size() != 4 * static_cast<Eigen::Index>(dim)) {
            throw DimensionMismatch("PVector requires 4*K entries");
        }
    }

    Eigen::VectorXd x() const { return entries.segment(0, dim); }
    Eigen::VectorXd y() const { return entries.segment(2 * dim, dim); }
};

// Combining systems with the box product yields deviation vectors with the
// same block layout at the product dimension.
using BoxPVector = PVector;

}  // namespace simplexq
