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

#include "simplexq/multiqubit.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace simplexq {

namespace {

void require_qubit(const SimplexState& s, const char* who) {
    if (s.dim != 2) {
        throw DimensionMismatch(std::string(who) + ": factors must be single-qubit (K = 2)");
    }
}

void require_64(const Eigen::VectorXd& v, const char* who) {
    if (v.size() != 64) {
        throw DimensionMismatch(std::string(who) + ": expected a 64-entry vector");
    }
}

Eigen::MatrixXd make_shuffle8() {
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(8, 8);
    // Column 4a + j (coefficient a, component j) feeds row 2j + a.
    for (int a = 0; a < 2; ++a) {
        for (int j = 0; j < 4; ++j) {
            s(2 * j + a, 4 * a + j) = 1.0;
        }
    }
    return s;
}

}  // namespace

ProductSimplexState tensor(const SimplexState& s1, const SimplexState& s2) {
    require_qubit(s1, "tensor");
    require_qubit(s2, "tensor");
    ProductSimplexState out;
    out.factors = {s1, s2};
    out.combined = Eigen::kroneckerProduct(s1.entries, s2.entries);
    return out;
}

const ShuffleMatrix& shuffle8() {
    static const ShuffleMatrix s{8, make_shuffle8()};
    return s;
}

const ShuffleMatrix& shuffle64() {
    static const ShuffleMatrix s = [] {
        const Eigen::MatrixXd& s8 = shuffle8().entries;
        const Eigen::MatrixXd left = Eigen::kroneckerProduct(s8, s8);
        const Eigen::MatrixXd right = Eigen::kroneckerProduct(
            Eigen::MatrixXd::Identity(2, 2),
            Eigen::kroneckerProduct(s8, Eigen::MatrixXd::Identity(4, 4)).eval());
        return ShuffleMatrix{64, left * right};
    }();
    return s;
}

Eigen::VectorXd coefficient_stack(const SimplexState& s1, const SimplexState& s2) {
    require_qubit(s1, "coefficient_stack");
    require_qubit(s2, "coefficient_stack");
    const Eigen::MatrixXd unshuffle = shuffle8().inverse();
    const Eigen::VectorXd u1 = unshuffle * s1.entries;
    const Eigen::VectorXd u2 = unshuffle * s2.entries;
    Eigen::VectorXd w(64);
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            w.segment(32 * a + 16 * b, 16) =
                Eigen::kroneckerProduct(u1.segment(4 * a, 4).eval(),
                                        u2.segment(4 * b, 4).eval());
        }
    }
    return w;
}

Eigen::MatrixXd cnot64() {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(64, 64);
    const Eigen::MatrixXd i16 = Eigen::MatrixXd::Identity(16, 16);
    m.block(0, 0, 16, 16) = i16;
    m.block(16, 16, 16, 16) = i16;
    m.block(32, 48, 16, 16) = i16;
    m.block(48, 32, 16, 16) = i16;
    return m;
}

Eigen::MatrixXd cnot64_conjugated() {
    const ShuffleMatrix& s = shuffle64();
    return s.entries * cnot64() * s.inverse();
}

Eigen::VectorXd apply_cnot64(const Eigen::VectorXd& v) {
    require_64(v, "apply_cnot64");
    static const Eigen::MatrixXd op = cnot64_conjugated();
    return op * v;
}

Eigen::VectorXd apply_cnot64(const ProductSimplexState& ps) {
    return apply_cnot64(ps.combined);
}

Eigen::VectorXd marginal_first(const Eigen::VectorXd& v) {
    require_64(v, "marginal_first");
    Eigen::VectorXd m = Eigen::VectorXd::Zero(8);
    for (int a = 0; a < 8; ++a) {
        m(a) = v.segment(8 * a, 8).sum();
    }
    return m;
}

Eigen::VectorXd marginal_second(const Eigen::VectorXd& v) {
    require_64(v, "marginal_second");
    Eigen::VectorXd m = Eigen::VectorXd::Zero(8);
    for (int a = 0; a < 8; ++a) {
        m += v.segment(8 * a, 8);
    }
    return m;
}

PVector extract_joint_p(const Eigen::VectorXd& v) {
    require_64(v, "extract_joint_p");
    // Entry (2t1 + c1, 2t2 + c2) of the 8x8 layout holds
    // (1 ± part1[c1])(1 ± part2[c2]) / 64; the alternating sum over a
    // (+part, -part) row pair and column pair isolates 4 * part1 * part2 / 64.
    auto bilinear = [&v](int part1, int part2) {
        const int tp1 = part1 == 0 ? 0 : 2, tm1 = tp1 + 1;
        const int tp2 = part2 == 0 ? 0 : 2, tm2 = tp2 + 1;
        Eigen::Matrix2d out;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                out(i, j) = 16.0 * (v(8 * (2 * tp1 + i) + 2 * tp2 + j) -
                                    v(8 * (2 * tp1 + i) + 2 * tm2 + j) -
                                    v(8 * (2 * tm1 + i) + 2 * tp2 + j) +
                                    v(8 * (2 * tm1 + i) + 2 * tm2 + j));
            }
        }
        return out;
    };
    const Eigen::Matrix2d xx = bilinear(0, 0);
    const Eigen::Matrix2d yy = bilinear(1, 1);
    const Eigen::Matrix2d xy = bilinear(0, 1);
    const Eigen::Matrix2d yx = bilinear(1, 0);
    const Eigen::Matrix2d xm = xx - yy;
    const Eigen::Matrix2d ym = xy + yx;
    Eigen::VectorXd p(16);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            p(2 * i + j) = xm(i, j);
            p(8 + 2 * i + j) = ym(i, j);
        }
    }
    p.segment(4, 4) = -p.segment(0, 4);
    p.segment(12, 4) = -p.segment(8, 4);
    return PVector(4, std::move(p));
}

}  // namespace simplexq
