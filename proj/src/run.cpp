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

#include "simplexq/run.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <unsupported/Eigen/KroneckerProduct>

#include "simplexq/boxprod.hpp"
#include "simplexq/core.hpp"
#include "simplexq/evolve.hpp"
#include "simplexq/gates.hpp"
#include "simplexq/multiqubit.hpp"
#include "simplexq/oracle.hpp"

namespace simplexq {

namespace {

Eigen::Matrix2cd gate_unitary(const GateOp& op) {
    switch (op.kind) {
        case GateKind::h:
            return u_hadamard();
        case GateKind::rabi:
            return u_rabi(op.angle);
        case GateKind::phase:
            return u_phase(op.angle);
        default:
            throw Error("gate_unitary: not a single-qubit gate");
    }
}

TransformMatrix gate_transform(const GateOp& op) {
    switch (op.kind) {
        case GateKind::h:
            return hadamard();
        case GateKind::rabi:
            return rabi(op.angle);
        case GateKind::phase:
            return phase(op.angle);
        default:
            throw Error("gate_transform: not a single-qubit gate");
    }
}

Eigen::VectorXcd hilbert_run(const CircuitProgram& program) {
    Eigen::VectorXcd psi = program.initial_amplitudes;
    for (const GateOp& op : program.ops) {
        if (op.kind == GateKind::cnot) {
            psi = u_cnot() * psi;
        } else if (op.kind == GateKind::cu) {
            psi = u_controlled(op.unitary) * psi;
        } else if (program.qubit_count == 1) {
            psi = gate_unitary(op) * psi;
        } else {
            const Eigen::Matrix2cd u = gate_unitary(op);
            const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
            const Eigen::Matrix4cd lifted = op.target == 0 ? Eigen::kroneckerProduct(u, id).eval()
                                                           : Eigen::kroneckerProduct(id, u).eval();
            psi = lifted * psi;
        }
    }
    return psi;
}

Eigen::VectorXd simplex_run_single(const CircuitProgram& program) {
    SimplexState s = map_state(program.initial_state());
    for (const GateOp& op : program.ops) {
        s = apply(gate_transform(op), s);
    }
    return s.entries;
}

Eigen::VectorXd simplex_run_box16(const CircuitProgram& program) {
    SimplexState s = map_state(program.initial_state());
    for (const GateOp& op : program.ops) {
        if (op.kind == GateKind::cnot) {
            s = apply(m_cnot16(), s);
        } else if (op.kind == GateKind::cu) {
            s = apply(m_controlled_u(op.unitary), s);
        } else {
            const Eigen::Matrix2cd u = gate_unitary(op);
            const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
            const Eigen::Matrix4cd lifted = op.target == 0 ? Eigen::kroneckerProduct(u, id).eval()
                                                           : Eigen::kroneckerProduct(id, u).eval();
            s = apply(build_transform(lifted), s);
        }
    }
    return s.entries;
}

/// Split a 4-entry joint state into single-qubit factors, fixing the phase
/// gauge so the largest-magnitude amplitude of the first factor is real and
/// nonnegative. Throws when the state is not a product.
std::pair<Eigen::Vector2cd, Eigen::Vector2cd> factor_product(const Eigen::VectorXcd& joint) {
    Eigen::Matrix2cd coeff;
    coeff << joint(0), joint(1), joint(2), joint(3);
    const Eigen::JacobiSVD<Eigen::Matrix2cd> svd(coeff,
                                                 Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.singularValues()(1) > 1e-9) {
        throw Error("tensor64 representation needs a product initial state");
    }
    const double scale = std::sqrt(svd.singularValues()(0));
    Eigen::Vector2cd a = scale * svd.matrixU().col(0);
    Eigen::Vector2cd b = scale * svd.matrixV().col(0).conjugate();
    const int lead = std::abs(a(0)) >= std::abs(a(1)) ? 0 : 1;
    const std::complex<double> gauge = a(lead) / std::abs(a(lead));
    a /= gauge;
    b *= gauge;
    return {a, b};
}

/// Single-qubit affine gate extended to the 64-entry representation: the
/// matrix acts on the gated factor's index and the offset enters tensored
/// with the other factor's marginal. Exact on product states.
Eigen::VectorXd extend_gate_64(const Eigen::VectorXd& v, const TransformMatrix& m, int target) {
    const AffineTransform t(m);
    Eigen::Map<const Eigen::Matrix<double, 8, 8, Eigen::RowMajor>> grid(v.data());
    Eigen::Matrix<double, 8, 8, Eigen::RowMajor> out;
    if (target == 0) {
        out = t.matrix.entries * grid;
        const Eigen::VectorXd marg2 = grid.colwise().sum().transpose();
        out += t.offset * marg2.transpose();
    } else {
        out = grid * t.matrix.entries.transpose();
        const Eigen::VectorXd marg1 = grid.rowwise().sum();
        out += marg1 * t.offset.transpose();
    }
    return Eigen::Map<const Eigen::VectorXd>(out.data(), 64);
}

Eigen::VectorXd simplex_run_tensor64(const CircuitProgram& program) {
    const auto [a, b] = factor_product(program.initial_amplitudes);
    const ProductSimplexState init =
        tensor(map_state(HilbertState(a)), map_state(HilbertState(b)));
    Eigen::VectorXd v = init.combined;
    for (const GateOp& op : program.ops) {
        if (op.kind == GateKind::cnot) {
            v = apply_cnot64(v);
        } else if (op.kind == GateKind::cu) {
            throw Error("CU is not available in the tensor64 representation; use box16");
        } else {
            v = extend_gate_64(v, gate_transform(op), op.target);
        }
    }
    return v;
}

}  // namespace

RunReport run(const CircuitProgram& program, RunMode mode, Representation repr) {
    RunReport report;
    report.qubit_count = program.qubit_count;
    report.mode = mode;
    report.repr = repr;

    if (mode == RunMode::hilbert || mode == RunMode::both) {
        report.hilbert_final = hilbert_run(program);
        report.has_hilbert = true;
    }
    if (mode == RunMode::simplex || mode == RunMode::both) {
        if (program.qubit_count == 1) {
            report.simplex_final = simplex_run_single(program);
        } else if (repr == Representation::box16) {
            report.simplex_final = simplex_run_box16(program);
        } else {
            report.simplex_final = simplex_run_tensor64(program);
        }
        report.has_simplex = true;
    }
    if (mode == RunMode::both) {
        const SimplexState mapped = map_state(HilbertState(report.hilbert_final));
        Eigen::VectorXd simplex_side = report.simplex_final;
        if (program.qubit_count == 2 && repr == Representation::tensor64) {
            simplex_side = simplex_from_p(extract_joint_p(report.simplex_final)).entries;
        }
        report.max_deviation = (mapped.entries - simplex_side).cwiseAbs().maxCoeff();
    }
    return report;
}

std::string csv_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void rabi_sweep(int steps, std::ostream& out) {
    if (steps < 2) {
        throw InvalidStep("rabi_sweep: need at least 2 steps");
    }
    const SimplexState s0 = map_state(HilbertState(Eigen::Vector2cd(1.0, 0.0)));
    out << "theta,s1,s2,s3,s4,s5,s6,s7,s8\n";
    for (int k = 0; k < steps; ++k) {
        const double theta = 2.0 * M_PI * k / steps;
        const SimplexState s = apply(rabi(theta), s0);
        out << csv_number(theta);
        for (int i = 0; i < 8; ++i) {
            out << "," << csv_number(s.entries(i));
        }
        out << "\n";
    }
    if (!out) {
        throw IoError("rabi_sweep: write failed");
    }
}

void evolve_to_csv(const Eigen::MatrixXcd& h, const HilbertState& psi0, double t_final,
                   double dt, std::ostream& out) {
    const SimplexState s0 = map_state(psi0);
    const EvolutionResult result = evolve(s0, h, t_final, dt);
    out << "t";
    for (int i = 0; i < s0.size(); ++i) {
        out << ",s" << (i + 1);
    }
    out << ",sum_residual\n";
    for (std::size_t row = 0; row < result.times.size(); ++row) {
        out << csv_number(result.times[row]);
        const Eigen::VectorXd& s = result.states[row].entries;
        for (int i = 0; i < s.size(); ++i) {
            out << "," << csv_number(s(i));
        }
        out << "," << csv_number(result.sum_residuals[row]) << "\n";
    }
    if (!out) {
        throw IoError("evolve_to_csv: write failed");
    }
}

namespace {

struct CheckRow {
    std::string name;
    int samples = 0;
    double max_dev = 0.0;
};

void print_row(std::ostream& out, const CheckRow& row, double tol, int* failures) {
    const bool pass = row.max_dev < tol;
    if (!pass) {
        ++(*failures);
    }
    out << std::left << std::setw(44) << row.name << std::right << std::setw(6) << row.samples
        << "  " << std::scientific << std::setprecision(2) << row.max_dev << "  "
        << (pass ? "pass" : "FAIL") << "\n";
}

}  // namespace

int verify_suite(std::uint64_t seed, double tol, std::ostream& out) {
    int failures = 0;
    out << "commuting-diagram suite (seed " << seed << ", tolerance " << std::scientific
        << std::setprecision(1) << tol << ")\n";
    out << std::left << std::setw(44) << "check" << std::right << std::setw(6) << "n"
        << "  " << "max_dev" << "   " << "result\n";

    const auto commute_gate = [&](const char* name, auto make_u, auto make_m, int n) {
        CheckRow row{name, n, 0.0};
        for (int i = 0; i < n; ++i) {
            const HilbertState psi = random_state(2, seed + 1000 * row.samples + i);
            const double x = 2.0 * M_PI * i / n;
            const Eigen::Matrix2cd u = make_u(x);
            const TransformMatrix m = make_m(x);
            const SimplexState via_hilbert =
                map_state(apply_unitary(UnitaryMatrix(u), psi));
            const SimplexState via_simplex = apply(m, map_state(psi));
            row.max_dev = std::max(
                row.max_dev,
                (via_hilbert.entries - via_simplex.entries).cwiseAbs().maxCoeff());
        }
        print_row(out, row, tol, &failures);
    };

    commute_gate(
        "hadamard commutes with map", [](double) { return u_hadamard(); },
        [](double) { return hadamard(); }, 100);
    commute_gate(
        "rabi(theta) commutes with map", [](double t) { return u_rabi(t); },
        [](double t) { return rabi(t); }, 100);
    commute_gate(
        "phase(alpha) commutes with map", [](double a) { return u_phase(a); },
        [](double a) { return phase(a); }, 100);

    for (const int k : {2, 4}) {
        CheckRow row{"random unitary commutes with map (K=" + std::to_string(k) + ")",
                     k == 2 ? 200 : 50, 0.0};
        for (int i = 0; i < row.samples; ++i) {
            const UnitaryMatrix u = random_unitary(k, seed + 7919 * k + i);
            const HilbertState psi = random_state(k, seed + 104729 * k + i);
            const SimplexState lhs = map_state(apply_unitary(u, psi));
            const SimplexState rhs = apply(build_transform(u.entries), map_state(psi));
            row.max_dev =
                std::max(row.max_dev, (lhs.entries - rhs.entries).cwiseAbs().maxCoeff());
        }
        print_row(out, row, tol, &failures);
    }

    {
        CheckRow row{"cascading: M(U2)M(U1) acts as M(U2 U1)", 100, 0.0};
        for (int i = 0; i < row.samples; ++i) {
            const UnitaryMatrix u1 = random_unitary(2, seed + 31 + i);
            const UnitaryMatrix u2 = random_unitary(2, seed + 131071 + i);
            const TransformMatrix lhs =
                canonicalize(compose(build_transform(u2.entries), build_transform(u1.entries)));
            const TransformMatrix rhs = canonicalize(build_transform(u2.entries * u1.entries));
            row.max_dev =
                std::max(row.max_dev, (lhs.entries - rhs.entries).cwiseAbs().maxCoeff());
        }
        print_row(out, row, tol, &failures);
    }

    {
        CheckRow row{"box product preserves the joint map", 200, 0.0};
        for (int i = 0; i < row.samples; ++i) {
            const HilbertState a = random_state(2, seed + 2 * i);
            const HilbertState b = random_state(2, seed + 2 * i + 1);
            const Eigen::VectorXcd joint =
                Eigen::kroneckerProduct(a.amplitudes, b.amplitudes);
            const SimplexState lhs = map_state(HilbertState(joint));
            const SimplexState rhs =
                simplex_from_p(box_p(p_of(map_state(a)), p_of(map_state(b))));
            row.max_dev =
                std::max(row.max_dev, (lhs.entries - rhs.entries).cwiseAbs().maxCoeff());
        }
        print_row(out, row, tol, &failures);
    }

    {
        CheckRow row{"box_m matches transform of U1 (x) U2", 50, 0.0};
        for (int i = 0; i < row.samples; ++i) {
            const UnitaryMatrix u1 = random_unitary(2, seed + 11 + i);
            const UnitaryMatrix u2 = random_unitary(2, seed + 523 + i);
            const TransformMatrix lhs =
                box_m(build_transform(u1.entries), build_transform(u2.entries));
            const TransformMatrix rhs = build_transform(
                Eigen::kroneckerProduct(u1.entries, u2.entries).eval());
            row.max_dev =
                std::max(row.max_dev, (lhs.entries - rhs.entries).cwiseAbs().maxCoeff());
        }
        print_row(out, row, tol, &failures);
    }

    {
        CheckRow row{"controlled-not truth table (joint rep)", 4, 0.0};
        for (int c = 0; c < 2; ++c) {
            for (int t = 0; t < 2; ++t) {
                Eigen::VectorXcd in = Eigen::VectorXcd::Zero(4);
                in(2 * c + t) = 1.0;
                Eigen::VectorXcd expect = Eigen::VectorXcd::Zero(4);
                expect(2 * c + (c == 1 ? 1 - t : t)) = 1.0;
                const SimplexState lhs = apply(m_cnot16(), map_state(HilbertState(in)));
                const SimplexState rhs = map_state(HilbertState(expect));
                row.max_dev = std::max(
                    row.max_dev, (lhs.entries - rhs.entries).cwiseAbs().maxCoeff());
            }
        }
        print_row(out, row, tol, &failures);
    }

    {
        CheckRow row{"controlled-U commutes with map", 50, 0.0};
        for (int i = 0; i < row.samples; ++i) {
            const UnitaryMatrix u = random_unitary(2, seed + 40961 + i);
            const HilbertState psi = random_state(4, seed + 65537 + i);
            const SimplexState lhs =
                map_state(apply_unitary(UnitaryMatrix(u_controlled(u.entries)), psi));
            const SimplexState rhs = apply(m_controlled_u(u.entries), map_state(psi));
            row.max_dev =
                std::max(row.max_dev, (lhs.entries - rhs.entries).cwiseAbs().maxCoeff());
        }
        print_row(out, row, tol, &failures);
    }

    {
        CheckRow row{"shuffle converts stacked form to tensor", 100, 0.0};
        for (int i = 0; i < row.samples; ++i) {
            const SimplexState s1 = map_state(random_state(2, seed + 3 * i));
            const SimplexState s2 = map_state(random_state(2, seed + 3 * i + 1));
            const Eigen::VectorXd lhs = shuffle64().entries * coefficient_stack(s1, s2);
            const Eigen::VectorXd rhs = tensor(s1, s2).combined;
            row.max_dev = std::max(row.max_dev, (lhs - rhs).cwiseAbs().maxCoeff());
        }
        print_row(out, row, tol, &failures);
    }

    {
        CheckRow row{"evolution tracks the closed-form rotation", 0, 0.0};
        Eigen::Matrix2cd sigma_x;
        sigma_x << 0, 1, 1, 0;
        const Eigen::Matrix2cd h = 0.5 * sigma_x;
        const HilbertState psi0(Eigen::Vector2cd(1.0, 0.0));
        const EvolutionResult result = evolve(map_state(psi0), h, 2.0 * M_PI, 1e-3);
        for (std::size_t i = 0; i < result.times.size(); i += 100) {
            const double t = result.times[i];
            const HilbertState ref(
                Eigen::Vector2cd(std::cos(t / 2.0),
                                 std::complex<double>(0.0, -1.0) * std::sin(t / 2.0)));
            row.max_dev = std::max(row.max_dev,
                                   (map_state(ref).entries - result.states[i].entries)
                                       .cwiseAbs()
                                       .maxCoeff());
            ++row.samples;
        }
        print_row(out, row, tol, &failures);
    }

    out << (failures == 0 ? "all checks passed\n"
                          : std::to_string(failures) + " check(s) failed\n");
    return failures;
}

}  // namespace simplexq
