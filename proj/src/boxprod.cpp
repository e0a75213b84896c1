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

#include "simplexq/boxprod.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include "simplexq/core.hpp"
#include "simplexq/oracle.hpp"

namespace simplexq {

KronParts kron_complex_parts(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    const Eigen::MatrixXd ar = a.real(), ai = a.imag();
    const Eigen::MatrixXd br = b.real(), bi = b.imag();
    KronParts parts;
    parts.re = Eigen::kroneckerProduct(ar, br) - Eigen::kroneckerProduct(ai, bi);
    parts.im = Eigen::kroneckerProduct(ar, bi) + Eigen::kroneckerProduct(ai, br);
    return parts;
}

BoxPVector box_p(const PVector& p1, const PVector& p2) {
    const int k = p1.dim * p2.dim;
    const Eigen::VectorXd x1 = p1.x(), y1 = p1.y();
    const Eigen::VectorXd x2 = p2.x(), y2 = p2.y();
    Eigen::VectorXd out(4 * k);
    out.segment(0, k) = Eigen::kroneckerProduct(x1, x2) - Eigen::kroneckerProduct(y1, y2);
    out.segment(2 * k, k) = Eigen::kroneckerProduct(x1, y2) + Eigen::kroneckerProduct(y1, x2);
    out.segment(k, k) = -out.segment(0, k);
    out.segment(3 * k, k) = -out.segment(2 * k, k);
    return BoxPVector(k, std::move(out));
}

TransformMatrix box_m(const TransformMatrix& m1, const TransformMatrix& m2) {
    if (m1.form != TransformForm::canonical || m2.form != TransformForm::canonical) {
        throw NotCanonical("box_m: both inputs must be canonical-form transforms");
    }
    const int k1 = m1.dim, k2 = m2.dim;
    const Eigen::MatrixXd re1 = m1.entries.block(0, 0, k1, k1);
    const Eigen::MatrixXd im1 = m1.entries.block(2 * k1, 0, k1, k1);
    const Eigen::MatrixXd re2 = m2.entries.block(0, 0, k2, k2);
    const Eigen::MatrixXd im2 = m2.entries.block(2 * k2, 0, k2, k2);

    const int k = k1 * k2;
    const Eigen::MatrixXd re =
        Eigen::kroneckerProduct(re1, re2) - Eigen::kroneckerProduct(im1, im2);
    const Eigen::MatrixXd im =
        Eigen::kroneckerProduct(re1, im2) + Eigen::kroneckerProduct(im1, re2);
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(4 * k, 4 * k);
    const Eigen::Matrix4d& r = block_r();
    const Eigen::Matrix4d& i = block_i();
    out += Eigen::kroneckerProduct(r, re);
    out += Eigen::kroneckerProduct(i, im);
    return TransformMatrix(k, std::move(out), TransformForm::canonical);
}

SimplexState combine_n(const std::vector<PVector>& ps) {
    if (ps.empty()) {
        throw DimensionMismatch("combine_n: need at least one deviation vector");
    }
    for (const PVector& p : ps) {
        if (p.dim != 2) {
            throw DimensionMismatch("combine_n: inputs must be single-qubit vectors");
        }
    }
    PVector acc = ps.front();
    for (std::size_t i = 1; i < ps.size(); ++i) {
        acc = box_p(acc, ps[i]);
    }
    return simplex_from_p(acc);
}

AssociativityReport box_nonassociativity_witness(int trials, std::uint64_t seed) {
    AssociativityReport report;
    report.trials = trials;
    report.seed = seed;
    for (int i = 0; i < trials; ++i) {
        const PVector p1 = p_of(map_state(random_state(2, seed + 3 * i)));
        const PVector p2 = p_of(map_state(random_state(2, seed + 3 * i + 1)));
        const PVector p3 = p_of(map_state(random_state(2, seed + 3 * i + 2)));
        const BoxPVector left = box_p(box_p(p1, p2), p3);
        const BoxPVector right = box_p(p1, box_p(p2, p3));
        const double residual = (left.entries - right.entries).norm();
        if (residual > report.max_residual) {
            report.max_residual = residual;
            report.p1 = p1;
            report.p2 = p2;
            report.p3 = p3;
        }
    }
    report.found = report.max_residual > report.threshold;
    return report;
}

TransformMatrix m_cnot16() {
    return build_transform(u_cnot());
}

TransformMatrix m_controlled_u(const Eigen::Matrix2cd& u, double unitary_tol) {
    if (unitarity_error(u) > unitary_tol) {
        throw NotUnitary("m_controlled_u: conditioned operator is not unitary");
    }
    const Eigen::Matrix2d p0 = Eigen::Vector2d(1.0, 0.0).asDiagonal();
    const Eigen::Matrix2d p1 = Eigen::Vector2d(0.0, 1.0).asDiagonal();
    const Eigen::Matrix4d c_re =
        Eigen::kroneckerProduct(p0, Eigen::Matrix2d::Identity()) +
        Eigen::kroneckerProduct(p1, u.real().eval()).eval();
    const Eigen::Matrix4d im = Eigen::kroneckerProduct(p1, u.imag().eval());
    Eigen::MatrixXd out = Eigen::kroneckerProduct(block_r(), c_re).eval();
    out += Eigen::kroneckerProduct(block_i(), im);
    return TransformMatrix(4, std::move(out), TransformForm::canonical);
}

}  // namespace simplexq
