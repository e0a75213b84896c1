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

#include <string>
#include <string_view>
#include <vector>

#include "simplexq/types.hpp"

namespace simplexq {

/// Why a circuit failed to parse.
enum class ParseErrorKind {
    syntax,
    index_out_of_range,
    bad_amplitude,
    non_normalized_init,
};

/// Positioned parse failure: line and column are 1-based.
struct ParseError : Error {
    int line;
    int column;
    ParseErrorKind kind;

    ParseError(ParseErrorKind k, int l, int c, const std::string& message)
        : Error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + message),
          line(l),
          column(c),
          kind(k) {}
};

enum class GateKind { h, rabi, phase, cnot, cu };

/// One gate application. For single-qubit kinds only `target` is meaningful;
/// controlled kinds fix control = 0, target = 1.
struct GateOp {
    GateKind kind = GateKind::h;
    int target = 0;
    int control = -1;
    double angle = 0.0;          ///< radians, for rabi/phase
    Eigen::Matrix2cd unitary;    ///< for cu
    int line = 0;                ///< source line, for diagnostics
};

/// A parsed program: qubit count, initial amplitudes in computational-basis
/// order, and the gate sequence.
struct CircuitProgram {
    int qubit_count = 1;
    Eigen::VectorXcd initial_amplitudes;  ///< 2^qubit_count entries, unit norm
    std::vector<GateOp> ops;

    HilbertState initial_state() const { return HilbertState(initial_amplitudes); }
};

/// Parse the line-oriented circuit format:
///
///   # comment (also allowed after any line's content)
///   qubits N                          N = 1 or 2
///   init |0>                          basis ket with N bits, or
///   init (re,im) (re,im) ...          2^N amplitude literals
///   H q / RABI q theta / PHASE q alpha
///   CNOT 0 1
///   CU 0 1 (re,im) (re,im) (re,im) (re,im)   row-major 2x2 unitary
///
/// Angles are radians. Amplitude literals contain no spaces. Controlled gates
/// need N = 2 and use the fixed convention control = 0, target = 1.
CircuitProgram parse_circuit(std::string_view text);

/// Canonical text form; parsing it again yields an identical program.
std::string pretty_print(const CircuitProgram& program);

/// Parse one "(re,im)" token. Throws ParseError (bad_amplitude) at the given
/// source position on malformed input.
std::complex<double> parse_amplitude_literal(std::string_view token, int line = 1,
                                             int column = 1);

}  // namespace simplexq
