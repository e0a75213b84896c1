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

#include "simplexq/circuit.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace simplexq {

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

struct Line {
    int number;  // 1-based
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                              : eol - pos);
        ++line_no;
        const std::size_t hash = raw.find('#');
        if (hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        Line line{line_no, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            const std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
            }
            line.tokens.push_back(
                Token{std::string(raw.substr(start, i - start)), static_cast<int>(start) + 1});
        }
        if (!line.tokens.empty()) {
            lines.push_back(std::move(line));
        }
        if (eol == std::string_view::npos) {
            break;
        }
        pos = eol + 1;
    }
    return lines;
}

double parse_number(const Token& tok, int line, std::string_view what, ParseErrorKind kind) {
    double value = 0.0;
    const char* begin = tok.text.data();
    const char* end = begin + tok.text.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc() || result.ptr != end || !std::isfinite(value)) {
        throw ParseError(kind, line, tok.column,
                         "expected " + std::string(what) + ", got '" + tok.text + "'");
    }
    return value;
}

int parse_index(const Token& tok, int line) {
    int value = 0;
    const char* begin = tok.text.data();
    const char* end = begin + tok.text.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc() || result.ptr != end || value < 0) {
        throw ParseError(ParseErrorKind::syntax, line, tok.column,
                         "expected a qubit index, got '" + tok.text + "'");
    }
    return value;
}

std::complex<double> parse_amplitude(const Token& tok, int line) {
    return parse_amplitude_literal(tok.text, line, tok.column);
}

int require_qubit_index(const Token& tok, int line, int qubit_count) {
    const int idx = parse_index(tok, line);
    if (idx >= qubit_count) {
        throw ParseError(ParseErrorKind::index_out_of_range, line, tok.column,
                         "qubit index " + std::to_string(idx) + " out of range for " +
                             std::to_string(qubit_count) + " qubit(s)");
    }
    return idx;
}

void require_token_count(const Line& line, std::size_t n, const char* usage) {
    if (line.tokens.size() != n) {
        throw ParseError(ParseErrorKind::syntax, line.number,
                         line.tokens.front().column,
                         "expected '" + std::string(usage) + "'");
    }
}

Eigen::VectorXcd parse_init(const Line& line, int qubit_count) {
    const int dim = 1 << qubit_count;
    if (line.tokens.size() < 2) {
        throw ParseError(ParseErrorKind::syntax, line.number, line.tokens.front().column,
                         "init needs a ket or amplitude literals");
    }
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
    const Token& first = line.tokens[1];
    if (first.text.front() == '|') {
        require_token_count(line, 2, "init |bits>");
        const std::string& t = first.text;
        if (t.size() != static_cast<std::size_t>(qubit_count) + 2 || t.back() != '>') {
            throw ParseError(ParseErrorKind::syntax, line.number, first.column,
                             "expected a ket with " + std::to_string(qubit_count) + " bit(s)");
        }
        int index = 0;
        for (int b = 0; b < qubit_count; ++b) {
            const char c = t[1 + b];
            if (c != '0' && c != '1') {
                throw ParseError(ParseErrorKind::syntax, line.number, first.column,
                                 "ket bits must be 0 or 1");
            }
            index = 2 * index + (c - '0');
        }
        amps(index) = 1.0;
        return amps;
    }
    if (line.tokens.size() != static_cast<std::size_t>(dim) + 1) {
        throw ParseError(ParseErrorKind::syntax, line.number, first.column,
                         "init needs " + std::to_string(dim) + " amplitude literals");
    }
    for (int i = 0; i < dim; ++i) {
        amps(i) = parse_amplitude(line.tokens[1 + i], line.number);
    }
    if (std::abs(amps.norm() - 1.0) > kNormTol) {
        throw ParseError(ParseErrorKind::non_normalized_init, line.number, first.column,
                         "initial amplitudes have norm " + std::to_string(amps.norm()));
    }
    return amps;
}

}  // namespace

CircuitProgram parse_circuit(std::string_view text) {
    const std::vector<Line> lines = tokenize(text);
    if (lines.empty()) {
        throw ParseError(ParseErrorKind::syntax, 1, 1, "empty program");
    }

    std::size_t idx = 0;
    const Line& header = lines[idx];
    if (header.tokens[0].text != "qubits") {
        throw ParseError(ParseErrorKind::syntax, header.number, header.tokens[0].column,
                         "program must start with 'qubits N'");
    }
    require_token_count(header, 2, "qubits N");
    const int qubit_count = parse_index(header.tokens[1], header.number);
    if (qubit_count != 1 && qubit_count != 2) {
        throw ParseError(ParseErrorKind::syntax, header.number, header.tokens[1].column,
                         "qubit count must be 1 or 2");
    }
    ++idx;

    if (idx >= lines.size() || lines[idx].tokens[0].text != "init") {
        const Line& l = idx < lines.size() ? lines[idx] : header;
        throw ParseError(ParseErrorKind::syntax, l.number, l.tokens[0].column,
                         "'init' must follow 'qubits'");
    }
    CircuitProgram program;
    program.qubit_count = qubit_count;
    program.initial_amplitudes = parse_init(lines[idx], qubit_count);
    ++idx;

    for (; idx < lines.size(); ++idx) {
        const Line& line = lines[idx];
        const Token& head = line.tokens[0];
        GateOp op;
        op.line = line.number;
        if (head.text == "H") {
            require_token_count(line, 2, "H q");
            op.kind = GateKind::h;
            op.target = require_qubit_index(line.tokens[1], line.number, qubit_count);
        } else if (head.text == "RABI") {
            require_token_count(line, 3, "RABI q theta");
            op.kind = GateKind::rabi;
            op.target = require_qubit_index(line.tokens[1], line.number, qubit_count);
            op.angle = parse_number(line.tokens[2], line.number, "an angle in radians",
                                    ParseErrorKind::syntax);
        } else if (head.text == "PHASE") {
            require_token_count(line, 3, "PHASE q alpha");
            op.kind = GateKind::phase;
            op.target = require_qubit_index(line.tokens[1], line.number, qubit_count);
            op.angle = parse_number(line.tokens[2], line.number, "an angle in radians",
                                    ParseErrorKind::syntax);
        } else if (head.text == "CNOT" || head.text == "CU") {
            const bool is_cu = head.text == "CU";
            require_token_count(line, is_cu ? std::size_t(7) : std::size_t(3),
                                is_cu ? "CU 0 1 (re,im) x4" : "CNOT 0 1");
            if (qubit_count != 2) {
                throw ParseError(ParseErrorKind::index_out_of_range, line.number, head.column,
                                 head.text + " needs a 2-qubit program");
            }
            op.kind = is_cu ? GateKind::cu : GateKind::cnot;
            op.control = require_qubit_index(line.tokens[1], line.number, qubit_count);
            op.target = require_qubit_index(line.tokens[2], line.number, qubit_count);
            if (op.control != 0 || op.target != 1) {
                throw ParseError(ParseErrorKind::syntax, line.number, line.tokens[1].column,
                                 head.text + " uses the fixed convention control 0, target 1");
            }
            if (is_cu) {
                for (int i = 0; i < 4; ++i) {
                    op.unitary(i / 2, i % 2) = parse_amplitude(line.tokens[3 + i], line.number);
                }
                const Eigen::Matrix2cd gram = op.unitary.adjoint() * op.unitary;
                if ((gram - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > kUnitaryTol) {
                    throw ParseError(ParseErrorKind::syntax, line.number, line.tokens[3].column,
                                     "CU matrix is not unitary");
                }
            }
        } else {
            throw ParseError(ParseErrorKind::syntax, line.number, head.column,
                             "unknown directive '" + head.text + "'");
        }
        program.ops.push_back(std::move(op));
    }
    return program;
}

namespace {

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string format_amplitude(const std::complex<double>& a) {
    return "(" + format_number(a.real()) + "," + format_number(a.imag()) + ")";
}

}  // namespace

std::complex<double> parse_amplitude_literal(std::string_view token, int line, int column) {
    const std::string t(token);
    const auto bad = [&](const char* why) {
        return ParseError(ParseErrorKind::bad_amplitude, line, column,
                          std::string(why) + " in amplitude literal '" + t + "'");
    };
    if (t.size() < 5 || t.front() != '(' || t.back() != ')') {
        throw bad("expected (re,im)");
    }
    const std::size_t comma = t.find(',');
    if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos) {
        throw bad("expected exactly one comma");
    }
    double re = 0.0, im = 0.0;
    const char* p1 = t.data() + 1;
    auto r1 = std::from_chars(p1, t.data() + comma, re);
    if (r1.ec != std::errc() || r1.ptr != t.data() + comma) {
        throw bad("bad real part");
    }
    const char* p2 = t.data() + comma + 1;
    auto r2 = std::from_chars(p2, t.data() + t.size() - 1, im);
    if (r2.ec != std::errc() || r2.ptr != t.data() + t.size() - 1) {
        throw bad("bad imaginary part");
    }
    return {re, im};
}

std::string pretty_print(const CircuitProgram& program) {
    std::ostringstream out;
    out << "qubits " << program.qubit_count << "\n";

    // Prefer the ket form when the initial state is exactly a basis vector.
    int basis = -1;
    for (int i = 0; i < program.initial_amplitudes.size(); ++i) {
        const std::complex<double> a = program.initial_amplitudes(i);
        if (a == std::complex<double>(1.0, 0.0)) {
            basis = basis == -1 ? i : -2;
        } else if (a != std::complex<double>(0.0, 0.0)) {
            basis = -2;
        }
    }
    if (basis >= 0) {
        out << "init |";
        for (int b = program.qubit_count - 1; b >= 0; --b) {
            out << ((basis >> b) & 1);
        }
        out << ">\n";
    } else {
        out << "init";
        for (int i = 0; i < program.initial_amplitudes.size(); ++i) {
            out << " " << format_amplitude(program.initial_amplitudes(i));
        }
        out << "\n";
    }

    for (const GateOp& op : program.ops) {
        switch (op.kind) {
            case GateKind::h:
                out << "H " << op.target << "\n";
                break;
            case GateKind::rabi:
                out << "RABI " << op.target << " " << format_number(op.angle) << "\n";
                break;
            case GateKind::phase:
                out << "PHASE " << op.target << " " << format_number(op.angle) << "\n";
                break;
            case GateKind::cnot:
                out << "CNOT 0 1\n";
                break;
            case GateKind::cu:
                out << "CU 0 1";
                for (int i = 0; i < 4; ++i) {
                    out << " " << format_amplitude(op.unitary(i / 2, i % 2));
                }
                out << "\n";
                break;
        }
    }
    return out.str();
}

}  // namespace simplexq
