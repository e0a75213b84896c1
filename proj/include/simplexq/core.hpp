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

/// Measured residuals of the simplex-state invariants.
///
/// The first three (entry range, unit sum, block-pair sums) hold for every
/// vector reachable by affine gate maps and for convex mixtures of mapped
/// states. The sphere residual (deviation of ||p|| from sqrt(2)) additionally
/// pins membership in the image of the state map; mixtures generically fail
/// it.
struct ValidityReport {
    double tol = kStructTol;
    double range_violation = 0.0;  ///< distance of worst entry outside [0, 1]
    double sum_residual = 0.0;     ///< |sum(s) - 1|
    double pair_residual = 0.0;    ///< max |s_i + s_{i+K} - 1/2K| over the x and y pair blocks
    double p_norm_residual = 0.0;  ///< | ||4K*s - 1|| - sqrt(2) |

    bool range_ok() const { return range_violation <= tol; }
    bool sum_ok() const { return sum_residual <= tol; }
    bool pair_ok() const { return pair_residual <= tol; }
    bool p_norm_ok() const { return p_norm_residual <= tol; }
    /// Range, sum and pair checks together.
    bool structurally_valid() const { return range_ok() && sum_ok() && pair_ok(); }
    /// All checks: the vector is (within tol) the image of a normalized state.
    bool in_image() const { return structurally_valid() && p_norm_ok(); }
};

/// Map a normalized K-level state to its 4K-dimensional probability vector
/// s = (1/4K)(1 + (x, -x, y, -y)).
///
/// Throws NotNormalized when | ||psi|| - 1 | exceeds norm_tol.
SimplexState map_state(const HilbertState& psi, double norm_tol = kNormTol);

/// Invert map_state. Reads x from block 1 and y from block 3; blocks 2 and 4
/// are redundant and only consulted by the validity checks.
///
/// Throws NotInImage when the pair structure or the sphere constraint fails
/// beyond struct_tol.
HilbertState unmap_state(const SimplexState& s, double struct_tol = kStructTol);

/// Deviation vector p = 4K*s - 1.
PVector p_of(const SimplexState& s);

/// Rebuild the probability vector s = (1/4K)(1 + p).
SimplexState simplex_from_p(const PVector& p);

/// Measure every invariant of s; never throws.
ValidityReport validate(const SimplexState& s, double tol = kStructTol);

}  // namespace simplexq
