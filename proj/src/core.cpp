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

#include "simplexq/core.hpp"

#include <cmath>

namespace simplexq {

SimplexState map_state(const HilbertState& psi, double norm_tol) {
    if (psi.norm_error() > norm_tol) {
        throw NotNormalized("map_state: wavefunction norm deviates by " +
                            std::to_string(psi.norm_error()));
    }
    const int k = psi.dim();
    const double scale = 1.0 / (4.0 * k);
    const Eigen::VectorXd x = psi.re();
    const Eigen::VectorXd y = psi.im();
    Eigen::VectorXd s(4 * k);
    s.segment(0, k) = (1.0 + x.array()) * scale;
    s.segment(k, k) = (1.0 - x.array()) * scale;
    s.segment(2 * k, k) = (1.0 + y.array()) * scale;
    s.segment(3 * k, k) = (1.0 - y.array()) * scale;
    return SimplexState(k, std::move(s));
}

HilbertState unmap_state(const SimplexState& s, double struct_tol) {
    const ValidityReport report = validate(s, struct_tol);
    if (!report.in_image()) {
        throw NotInImage("unmap_state: vector is not the image of a normalized state "
                         "(pair residual " + std::to_string(report.pair_residual) +
                         ", sphere residual " + std::to_string(report.p_norm_residual) + ")");
    }
    const int k = s.dim;
    const double scale = 4.0 * k;
    Eigen::VectorXcd amps(k);
    for (int i = 0; i < k; ++i) {
        amps(i) = std::complex<double>(scale * s.entries(i) - 1.0,
                                       scale * s.entries(i + 2 * k) - 1.0);
    }
    return HilbertState(std::move(amps));
}

PVector p_of(const SimplexState& s) {
    return PVector(s.dim, 4.0 * s.dim * s.entries.array() - 1.0);
}

SimplexState simplex_from_p(const PVector& p) {
    return SimplexState(p.dim, (1.0 + p.entries.array()) / (4.0 * p.dim));
}

ValidityReport validate(const SimplexState& s, double tol) {
    ValidityReport r;
    r.tol = tol;
    const int k = s.dim;

    const double lo = s.entries.minCoeff();
    const double hi = s.entries.maxCoeff();
    r.range_violation = std::max({0.0, -lo, hi - 1.0});

    r.sum_residual = std::abs(s.entries.sum() - 1.0);

    const double pair_target = 1.0 / (2.0 * k);
    double worst = 0.0;
    for (int i = 0; i < k; ++i) {
        worst = std::max(worst, std::abs(s.entries(i) + s.entries(i + k) - pair_target));
        worst = std::max(worst,
                         std::abs(s.entries(i + 2 * k) + s.entries(i + 3 * k) - pair_target));
    }
    r.pair_residual = worst;

    const Eigen::VectorXd p = 4.0 * k * s.entries.array() - 1.0;
    r.p_norm_residual = std::abs(p.norm() - std::sqrt(2.0));
    return r;
}

}  // namespace simplexq
