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

#include "simplexq/gates.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "simplexq/oracle.hpp"

namespace simplexq {

namespace {

Eigen::Matrix4d make_block_i() {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 3) = 1.0;
    m(1, 2) = 1.0;
    m(2, 0) = 1.0;
    m(3, 1) = 1.0;
    return m;
}

// Positions of the 1-entries of R, I, I², I³ inside the 4x4 block grid.
// Together they tile the grid, so a matrix decomposes over the group exactly
// when its block grid is constant on each class.
using BlockClass = std::array<std::pair<int, int>, 4>;
constexpr BlockClass kClassR{{{0, 0}, {1, 1}, {2, 2}, {3, 3}}};
constexpr BlockClass kClassI{{{0, 3}, {1, 2}, {2, 0}, {3, 1}}};
constexpr BlockClass kClassI2{{{0, 1}, {1, 0}, {2, 3}, {3, 2}}};
constexpr BlockClass kClassI3{{{0, 2}, {1, 3}, {2, 1}, {3, 0}}};

Eigen::MatrixXd class_block(const Eigen::MatrixXd& m, int k, const BlockClass& cls,
                            double tol, bool* ok) {
    const auto [r0, c0] = cls[0];
    Eigen::MatrixXd rep = m.block(r0 * k, c0 * k, k, k);
    for (int i = 1; i < 4; ++i) {
        const auto [r, c] = cls[i];
        if ((m.block(r * k, c * k, k, k) - rep).cwiseAbs().maxCoeff() > tol) {
            *ok = false;
            return rep;
        }
    }
    return rep;
}

}  // namespace

const Eigen::Matrix4d& block_r() {
    static const Eigen::Matrix4d r = Eigen::Matrix4d::Identity();
    return r;
}

const Eigen::Matrix4d& block_i() {
    static const Eigen::Matrix4d i = make_block_i();
    return i;
}

Eigen::MatrixXd block_embedding(const Eigen::MatrixXcd& op) {
    if (op.rows() != op.cols() || op.rows() < 1) {
        throw DimensionMismatch("block_embedding: operator must be square");
    }
    const int k = static_cast<int>(op.rows());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4 * k, 4 * k);
    const Eigen::MatrixXd re = op.real();
    const Eigen::MatrixXd im = op.imag();
    for (const auto& [r, c] : kClassR) m.block(r * k, c * k, k, k) = re;
    for (const auto& [r, c] : kClassI) m.block(r * k, c * k, k, k) = im;
    return m;
}

TransformMatrix build_transform(const Eigen::MatrixXcd& u, double unitary_tol) {
    if (u.rows() != u.cols() || u.rows() < 1) {
        throw DimensionMismatch("build_transform: operator must be square");
    }
    if (unitarity_error(u) > unitary_tol) {
        throw NotUnitary("build_transform: input is not unitary");
    }
    return TransformMatrix(static_cast<int>(u.rows()), block_embedding(u),
                           TransformForm::canonical);
}

TransformMatrix alternate_transform(const Eigen::MatrixXcd& u, double unitary_tol) {
    if (u.rows() != u.cols() || u.rows() < 1) {
        throw DimensionMismatch("alternate_transform: operator must be square");
    }
    if (unitarity_error(u) > unitary_tol) {
        throw NotUnitary("alternate_transform: input is not unitary");
    }
    const int k = static_cast<int>(u.rows());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4 * k, 4 * k);
    const Eigen::MatrixXd re = u.real();
    const Eigen::MatrixXd im = u.imag();
    for (const auto& [r, c] : kClassI2) m.block(r * k, c * k, k, k) = -re;
    for (const auto& [r, c] : kClassI) m.block(r * k, c * k, k, k) = im;
    return TransformMatrix(k, std::move(m), TransformForm::alternate);
}

AffineTransform::AffineTransform(TransformMatrix m)
    : matrix(std::move(m)),
      offset((Eigen::MatrixXd::Identity(matrix.entries.rows(), matrix.entries.cols()) -
              matrix.entries) *
             Eigen::VectorXd::Ones(matrix.entries.rows()) / (4.0 * matrix.dim)) {}

SimplexState apply(const AffineTransform& t, const SimplexState& s) {
    if (t.matrix.dim != s.dim) {
        throw DimensionMismatch("apply: transform and state dimensions differ");
    }
    return SimplexState(s.dim, t.offset + t.matrix.entries * s.entries);
}

SimplexState apply(const TransformMatrix& m, const SimplexState& s) {
    return apply(AffineTransform(m), s);
}

TransformMatrix hadamard() {
    const double c = M_SQRT1_2;
    Eigen::Matrix4d sector;
    sector << c, 0, 0, c,
              c, c, 0, 0,
              0, c, c, 0,
              0, 0, c, c;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(8, 8);
    m.block<4, 4>(0, 0) = sector;
    m.block<4, 4>(4, 4) = sector;
    return TransformMatrix(2, std::move(m), TransformForm::general);
}

TransformMatrix rabi(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    Eigen::Matrix4d sector;
    // Each sector row takes cos(theta) from a coefficient and sin(theta)
    // from the block holding the other coefficient with the needed sign.
    sector << c, 0, 0, s,
              s, c, 0, 0,
              0, s, c, 0,
              0, 0, s, c;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(8, 8);
    m.block<4, 4>(0, 0) = sector;
    m.block<4, 4>(4, 4) = sector;
    return TransformMatrix(2, std::move(m), TransformForm::general);
}

TransformMatrix phase(double alpha) {
    const double c = std::cos(alpha);
    const double s = std::sin(alpha);
    Eigen::MatrixXd m(8, 8);
    m << 1, 0, 0, 0, 0, 0, 0, 0,
         0, c, 0, 0, 0, 0, 0, s,
         0, 0, 1, 0, 0, 0, 0, 0,
         0, 0, 0, c, 0, s, 0, 0,
         0, 0, 0, 0, 1, 0, 0, 0,
         0, s, 0, 0, 0, c, 0, 0,
         0, 0, 0, 0, 0, 0, 1, 0,
         0, 0, 0, s, 0, 0, 0, c;
    return TransformMatrix(2, std::move(m), TransformForm::canonical);
}

TransformMatrix canonicalize(const TransformMatrix& m, double tol) {
    const int k = m.dim;
    bool ok = true;
    const Eigen::MatrixXd a = class_block(m.entries, k, kClassR, tol, &ok);
    const Eigen::MatrixXd b = class_block(m.entries, k, kClassI, tol, &ok);
    const Eigen::MatrixXd c = class_block(m.entries, k, kClassI2, tol, &ok);
    const Eigen::MatrixXd d = class_block(m.entries, k, kClassI3, tol, &ok);
    if (!ok) {
        throw NotBlockStructured("canonicalize: block grid is not constant per orbit class");
    }
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(4 * k, 4 * k);
    const Eigen::MatrixXd re = a - c;
    const Eigen::MatrixXd im = b - d;
    for (const auto& [r, cc] : kClassR) out.block(r * k, cc * k, k, k) = re;
    for (const auto& [r, cc] : kClassI) out.block(r * k, cc * k, k, k) = im;
    return TransformMatrix(k, std::move(out), TransformForm::canonical);
}

TransformMatrix compose(const TransformMatrix& m2, const TransformMatrix& m1) {
    if (m2.dim != m1.dim) {
        throw DimensionMismatch("compose: transform dimensions differ");
    }
    return TransformMatrix(m1.dim, m2.entries * m1.entries, TransformForm::general);
}

OrRealization hadamard_row_via_or(double pa, double pb) {
    if (pa < 0.0 || pa > 0.25 || pb < 0.0 || pb > 0.25) {
        throw OutOfRange("hadamard_row_via_or: inputs must lie in [0, 1/4]");
    }
    OrRealization r;
    const double w = 1.0 - M_SQRT1_2;
    r.p_and = w * pa + w * pb + (M_SQRT2 - 1.0) / 8.0;
    r.p_or = pa + pb - r.p_and;
    r.feasible_lo = std::max(0.0, pa + pb - 1.0);
    r.feasible_hi = std::min(pa, pb);
    r.feasible = r.p_and >= r.feasible_lo && r.p_and <= r.feasible_hi;
    return r;
}

}  // namespace simplexq
