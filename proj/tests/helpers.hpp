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

#include <complex>
#include <unsupported/Eigen/KroneckerProduct>

#include "simplexq/core.hpp"
#include "simplexq/oracle.hpp"

namespace simplexq::testing {

inline HilbertState ket2(std::complex<double> c0, std::complex<double> c1) {
    return HilbertState(Eigen::Vector2cd(c0, c1));
}

inline HilbertState basis(int dim, int index) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    v(index) = 1.0;
    return HilbertState(std::move(v));
}

inline HilbertState joint(const HilbertState& a, const HilbertState& b) {
    return HilbertState(Eigen::kroneckerProduct(a.amplitudes, b.amplitudes).eval());
}

inline double max_abs_diff(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

/// Random valid deviation vector (the image of a random state).
inline PVector random_p(int k, std::uint64_t seed) {
    return p_of(map_state(random_state(k, seed)));
}

}  // namespace simplexq::testing
