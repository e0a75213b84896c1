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

#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "simplexq/core.hpp"

using namespace simplexq;
using namespace simplexq::testing;

namespace {

Eigen::VectorXd vec8(std::initializer_list<double> eighths) {
    Eigen::VectorXd v(8);
    int i = 0;
    for (double e : eighths) {
        v(i++) = e / 8.0;
    }
    return v;
}

}  // namespace

TEST_CASE("ground state maps to its probability vector") {
    const SimplexState s = map_state(ket2(1.0, 0.0));
    CHECK(max_abs_diff(s.entries, vec8({2, 1, 0, 1, 1, 1, 1, 1})) == 0.0);
}

TEST_CASE("imaginary excited state maps to its probability vector") {
    const SimplexState s = map_state(ket2(0.0, std::complex<double>(0.0, 1.0)));
    CHECK(max_abs_diff(s.entries, vec8({1, 1, 1, 1, 1, 2, 1, 0})) == 0.0);
}

TEST_CASE("mapped vectors sum to one and sit on the fixed sphere") {
    // Independent route: accumulate the norm entry by entry instead of
    // trusting the closed-form radius.
    for (int k : {1, 2, 4, 8}) {
        const SimplexState s = map_state(random_state(k, 1000 + k));
        CHECK(std::abs(s.entries.sum() - 1.0) < 1e-15);
        double sumsq = 0.0;
        for (int i = 0; i < s.size(); ++i) {
            sumsq += s.entries(i) * s.entries(i);
        }
        const double expected_norm = std::sqrt(4.0 * k + 2.0) / (4.0 * k);
        CHECK(std::abs(std::sqrt(sumsq) - expected_norm) < 1e-14);
    }
}

TEST_CASE("map rejects unnormalized input") {
    CHECK_THROWS_AS(map_state(ket2(1.0, 0.5)), NotNormalized);
    // Tolerance is overridable.
    CHECK_NOTHROW(map_state(ket2(1.0 + 5e-7, 0.0), 1e-5));
}

TEST_CASE("unmapping the ground-state vector returns the ground state") {
    const HilbertState psi = unmap_state(SimplexState(2, vec8({2, 1, 0, 1, 1, 1, 1, 1})));
    CHECK(std::abs(psi.amplitudes(0) - 1.0) == 0.0);
    CHECK(std::abs(psi.amplitudes(1)) == 0.0);
}

TEST_CASE("unmap inverts map to roundoff") {
    for (int i = 0; i < 100; ++i) {
        const int k = 1 + i % 5;
        const HilbertState psi = random_state(k, 2000 + i);
        const HilbertState back = unmap_state(map_state(psi));
        CHECK((psi.amplitudes - back.amplitudes).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("the uniform vector is not a mapped state") {
    const SimplexState uniform(2, Eigen::VectorXd::Constant(8, 1.0 / 8.0));
    CHECK_THROWS_AS(unmap_state(uniform), NotInImage);
}

TEST_CASE("deviation vector of the ground state") {
    Eigen::VectorXd expected(8);
    expected << 1, 0, -1, 0, 0, 0, 0, 0;
    const PVector p = p_of(map_state(ket2(1.0, 0.0)));
    CHECK(max_abs_diff(p.entries, expected) == 0.0);
}

TEST_CASE("deviation vectors sum to zero and have norm sqrt(2)") {
    for (int i = 0; i < 100; ++i) {
        const PVector p = random_p(2, 3000 + i);
        CHECK(std::abs(p.entries.sum()) < 1e-12);
        CHECK(std::abs(p.entries.norm() - std::sqrt(2.0)) < 1e-12);
    }
}

TEST_CASE("simplex_from_p inverts p_of") {
    const SimplexState s = map_state(random_state(4, 99));
    const SimplexState back = simplex_from_p(p_of(s));
    CHECK(max_abs_diff(s.entries, back.entries) < 1e-16);
}

TEST_CASE("validate passes a mapped state") {
    const ValidityReport r = validate(map_state(random_state(2, 7)));
    CHECK(r.structurally_valid());
    CHECK(r.in_image());
}

TEST_CASE("negating one entry breaks the range and sum checks") {
    SimplexState s = map_state(ket2(M_SQRT1_2, M_SQRT1_2));
    s.entries(0) = -s.entries(0);
    const ValidityReport r = validate(s);
    CHECK(!r.range_ok());
    CHECK(!r.sum_ok());
}

TEST_CASE("convex mixtures stay on the simplex but leave the sphere") {
    const SimplexState a = map_state(random_state(2, 41));
    const SimplexState b = map_state(random_state(2, 42));
    const double lambda = 0.4;
    const SimplexState mix(2, lambda * a.entries + (1.0 - lambda) * b.entries);
    const ValidityReport r = validate(mix);
    CHECK(r.range_ok());
    CHECK(r.sum_residual < 1e-15);
    CHECK(r.pair_residual < 1e-15);
    // Distinct states mix strictly inside the sphere.
    CHECK(r.p_norm_residual > 1e-3);
    MESSAGE("mixture sphere residual: ", r.p_norm_residual);
    CHECK_THROWS_AS(unmap_state(mix), NotInImage);
}

TEST_CASE("the map is not linear: an explicit counterexample") {
    const HilbertState a = ket2(1.0, 0.0);
    const HilbertState b = ket2(0.0, 1.0);
    const HilbertState combo = ket2(M_SQRT1_2, M_SQRT1_2);
    const Eigen::VectorXd superposed =
        M_SQRT1_2 * map_state(a).entries + M_SQRT1_2 * map_state(b).entries;
    CHECK(max_abs_diff(map_state(combo).entries, superposed) > 1e-6);
}

TEST_CASE("mixtures of mapped states keep range and unit sum") {
    for (int i = 0; i < 50; ++i) {
        const SimplexState a = map_state(random_state(2, 5000 + 2 * i));
        const SimplexState b = map_state(random_state(2, 5001 + 2 * i));
        const double lambda = (i + 1) / 52.0;
        const SimplexState mix(2, lambda * a.entries + (1.0 - lambda) * b.entries);
        const ValidityReport r = validate(mix);
        CHECK(r.range_ok());
        CHECK(r.sum_ok());
    }
}

TEST_CASE("dimension checks on the plain types") {
    CHECK_THROWS_AS(SimplexState(2, Eigen::VectorXd::Zero(6)), DimensionMismatch);
    CHECK_THROWS_AS(PVector(3, Eigen::VectorXd::Zero(8)), DimensionMismatch);
    CHECK_THROWS_AS(HilbertState(Eigen::VectorXcd()), DimensionMismatch);
}
