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
#include <vector>

#include "simplexq/gates.hpp"
#include "simplexq/types.hpp"

namespace simplexq {

/// Real and imaginary parts of the Kronecker product a (x) b, computed from
/// the parts of the factors:
///   Re(a (x) b) = Re(a)(x)Re(b) - Im(a)(x)Im(b)
///   Im(a (x) b) = Re(a)(x)Im(b) + Im(a)(x)Re(b)
struct KronParts {
    Eigen::MatrixXd re;
    Eigen::MatrixXd im;
};
KronParts kron_complex_parts(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Map-preserving combination of deviation vectors: with p1 = (x1,-x1,y1,-y1)
/// and p2 likewise, the result has X = x1(x)x2 - y1(x)y2 and
/// Y = x1(x)y2 + y1(x)x2, i.e. the real/imaginary coordinates of the complex
/// tensor product. Satisfies (1/4K1K2)(1 + box_p(p1,p2)) = map of the joint
/// state. Bilinear in both arguments.
BoxPVector box_p(const PVector& p1, const PVector& p2);

/// Combination of canonical transform matrices mirroring the tensor product
/// of the underlying unitaries: equals build_transform(U1 (x) U2) when the
/// inputs are build_transform(U1) and build_transform(U2).
/// Throws NotCanonical unless both inputs carry the canonical form.
TransformMatrix box_m(const TransformMatrix& m1, const TransformMatrix& m2);

/// Left fold of single-qubit deviation vectors into the mapped simplex vector
/// of the N-qubit product state: s = (1/2^(N+2))(1 + ((p1 ⊠ p2) ⊠ ...) ⊠ pN).
/// The fold order is pinned left-to-right.
SimplexState combine_n(const std::vector<PVector>& ps);

/// Outcome of the randomized search for an associativity counterexample.
struct AssociativityReport {
    bool found = false;       ///< true when a witness beyond the threshold exists
    double max_residual = 0;  ///< largest ||(p1⊠p2)⊠p3 - p1⊠(p2⊠p3)|| observed
    double threshold = 1e-6;
    int trials = 0;
    std::uint64_t seed = 0;
    PVector p1, p2, p3;       ///< the witness triple when found
};

/// Search random single-qubit triples for an associativity violation of the
/// box product. The product mirrors the complex tensor product component-wise,
/// so the search is expected to come back empty; the report records the
/// residual ceiling actually observed.
AssociativityReport box_nonassociativity_witness(int trials = 500,
                                                 std::uint64_t seed = 20260810);

/// 16x16 transform of the two-qubit controlled-not in the compact joint
/// representation: four copies of the (real) controlled-not on the diagonal.
TransformMatrix m_cnot16();

/// Transform of a general controlled unitary (control on the first qubit in
/// its second basis state): R(x)C_Re(U) + I(x)(P1 (x) Im(U)).
/// Equals build_transform of the controlled operator.
TransformMatrix m_controlled_u(const Eigen::Matrix2cd& u, double unitary_tol = kUnitaryTol);

}  // namespace simplexq
