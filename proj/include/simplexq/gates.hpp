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

#include "simplexq/types.hpp"

namespace simplexq {

/// How a transform matrix is laid out over the four (x, -x, y, -y) blocks.
///
/// Matrices that differ by terms annihilating every block-antisymmetric
/// vector act identically on deviation vectors; `canonical` is the unique
/// representative R(x)Re(U) + I(x)Im(U) used for matrix-equality arguments.
enum class TransformForm {
    canonical,  ///< R(x)A + I(x)B with A = Re(U), B = Im(U)
    alternate,  ///< -I²(x)Re(U) + I(x)Im(U)
    general,    ///< anything else (closed-form gates, raw products, ...)
};

/// Real 4K x 4K matrix acting on deviation vectors.
struct TransformMatrix {
    int dim = 0;              ///< Hilbert dimension K.
    Eigen::MatrixXd entries;  ///< 4K x 4K.
    TransformForm form = TransformForm::general;

    TransformMatrix() = default;
    TransformMatrix(int k, Eigen::MatrixXd m, TransformForm f)
        : dim(k), entries(std::move(m)), form(f) {
        if (dim < 1 || entries.rows() != 4 * static_cast<Eigen::Index>(dim) ||
            entries.cols() != entries.rows()) {
            throw DimensionMismatch("TransformMatrix must be 4K x 4K");
        }
    }
};

/// The 4x4 constants acting on the block index. block_r() is the identity;
/// block_i() is the permutation pairing each x block with a y block, and its
/// square is the sign-flipping block swap: (block_i()^2 (x) X) p = -(R (x) X) p
/// on every block-antisymmetric p.
const Eigen::Matrix4d& block_r();
const Eigen::Matrix4d& block_i();

/// R(x)Re(op) + I(x)Im(op) for an arbitrary K x K complex operator.
/// No unitarity requirement; build_transform() is the checked entry point.
Eigen::MatrixXd block_embedding(const Eigen::MatrixXcd& op);

/// Canonical transform matrix of a unitary. Throws NotUnitary beyond tol.
TransformMatrix build_transform(const Eigen::MatrixXcd& u, double unitary_tol = kUnitaryTol);

/// The equivalent alternate layout -I²(x)Re(U) + I(x)Im(U); acts identically
/// to build_transform(u) on every valid deviation vector.
TransformMatrix alternate_transform(const Eigen::MatrixXcd& u, double unitary_tol = kUnitaryTol);

/// Affine simplex map T(s) = (1/4K)(I - M)·1 + M·s induced by a transform
/// matrix. Maps structurally valid states to structurally valid states and is
/// affine but, because of the offset, not linear.
struct AffineTransform {
    TransformMatrix matrix;
    Eigen::VectorXd offset;

    explicit AffineTransform(TransformMatrix m);
};

/// Apply the affine map; equals (1/4K)(1 + M·p(s)).
SimplexState apply(const AffineTransform& t, const SimplexState& s);
SimplexState apply(const TransformMatrix& m, const SimplexState& s);

/// The 8x8 Hadamard transform with nonnegative entries: every row mixes two
/// entries of the input with weight 1/sqrt(2), drawing the sign of a
/// coefficient from its negated block.
TransformMatrix hadamard();

/// The 8x8 rotation transform; rabi(pi/4) equals hadamard().
TransformMatrix rabi(double theta);

/// The 8x8 phase-gate transform (already in canonical layout).
TransformMatrix phase(double alpha);

/// Reduce a matrix of the form R(x)A + I(x)B + I²(x)C + I³(x)D to the
/// canonical representative R(x)(A-C) + I(x)(B-D), which acts identically on
/// every block-antisymmetric vector. Throws NotBlockStructured when the 4x4
/// grid of K x K blocks is not constant along the four orbit classes.
TransformMatrix canonicalize(const TransformMatrix& m, double tol = kStructTol);

/// Matrix product m2 * m1: the transform of the cascade "m1 then m2".
TransformMatrix compose(const TransformMatrix& m2, const TransformMatrix& m1);

/// Realization of the first Hadamard row as the probability of a logical OR.
struct OrRealization {
    double p_and = 0.0;       ///< required joint probability p(a AND b)
    double p_or = 0.0;        ///< p(a) + p(b) - p_and: the transformed first entry
    double feasible_lo = 0.0; ///< max(0, pa + pb - 1)
    double feasible_hi = 0.0; ///< min(pa, pb)
    bool feasible = false;    ///< p_and inside [feasible_lo, feasible_hi]
};

/// Demonstrative calculator for the OR construction: with pa and pb the first
/// and fourth simplex entries, chooses p(a AND b) so that p(a OR b) equals the
/// Hadamard-transformed first entry, and flags whether that joint probability
/// is achievable by any correlated pair of events. Inputs must lie in
/// [0, 1/4], the range of simplex entries at K = 2.
OrRealization hadamard_row_via_or(double pa, double pb);

}  // namespace simplexq
