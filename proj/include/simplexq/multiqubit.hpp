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

#include <vector>

#include "simplexq/types.hpp"

namespace simplexq {

/// Tensor-product combination of per-qubit simplex vectors. The combined
/// vector is the Kronecker product with the first factor as the slow index;
/// it sums to 1 but is NOT the image of the joint wavefunction under the
/// state map (the box product provides the map-preserving combination).
struct ProductSimplexState {
    std::vector<SimplexState> factors;  ///< each with dim K = 2
    Eigen::VectorXd combined;           ///< 8^N entries
};

/// Combine two single-qubit simplex vectors into a 64-entry product vector.
ProductSimplexState tensor(const SimplexState& s1, const SimplexState& s2);

/// Permutation converting between per-coefficient stacking and the standard
/// simplex entry order.
struct ShuffleMatrix {
    int size = 0;
    Eigen::MatrixXd entries;

    Eigen::MatrixXd inverse() const { return entries.transpose(); }
};

/// 8x8 shuffle: maps the stacked pair (coefficient-0 block; coefficient-1
/// block) of a single qubit to the interleaved simplex order.
const ShuffleMatrix& shuffle8();

/// 64x64 shuffle built as (S8 (x) S8)(I2 (x) S8 (x) I4): maps the stacked
/// four coefficient-pair blocks of a two-qubit product to s1 (x) s2.
const ShuffleMatrix& shuffle64();

/// Per-coefficient stacked form of a two-qubit product: the four 16-entry
/// blocks (b0_1 (x) b0_2; b0_1 (x) b1_2; b1_1 (x) b0_2; b1_1 (x) b1_2), where
/// b0 and b1 are the 4-entry coefficient blocks of each factor. Satisfies
/// shuffle64() * stack = s1 (x) s2.
Eigen::VectorXd coefficient_stack(const SimplexState& s1, const SimplexState& s2);

/// 64x64 block permutation acting on stacked vectors: identity on the two
/// control-coefficient-0 blocks, swapping the two control-coefficient-1
/// blocks (first qubit controls, second is the target).
Eigen::MatrixXd cnot64();

/// The conjugated operator shuffle64 * cnot64 * shuffle64^-1 acting on
/// interleaved 64-entry vectors; a stochastic permutation matrix.
Eigen::MatrixXd cnot64_conjugated();

/// Apply the conjugated operator to a 64-entry vector. Output sums to 1 for
/// unit-sum input; for generic product inputs the output is no longer a
/// tensor product of two valid single-qubit vectors.
Eigen::VectorXd apply_cnot64(const Eigen::VectorXd& v);
Eigen::VectorXd apply_cnot64(const ProductSimplexState& ps);

/// Per-qubit marginals of a 64-entry vector: sums over the other factor's
/// index. For a product input these are exactly the factors.
Eigen::VectorXd marginal_first(const Eigen::VectorXd& v);
Eigen::VectorXd marginal_second(const Eigen::VectorXd& v);

/// Recover the joint two-qubit deviation vector carried by a 64-entry product
/// vector via bilinear contractions: each product of coefficient components
/// is a fixed signed sum of four entries. For v = map(psi1) (x) map(psi2) the
/// result equals the deviation vector of map(psi1 (x) psi2), and the
/// conjugated controlled-not commutes with this extraction.
PVector extract_joint_p(const Eigen::VectorXd& v);

}  // namespace simplexq
