// Copyright 2026 The MCBeth Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text grammar: one command per line, trailing ';' optional, '#' comments.
//   Input q | Prep q | InputList [q,...] | PrepList [q,...]
//   Entangle q1 q2 | CZ q1 q2 | J angle q1 q2
//   Measure q angle [s,...] [t,...]
//   XCorrect q [s,...] | ZCorrect q [s,...]
//   ReadOut q basis       basis: X | Y | Z | FromAngle(a) |
//                                FromTuples((re,im),(re,im),(re,im),(re,im))
// Angles accept decimal literals and pi expressions (pi, pi/2, 3*pi/4, -pi).

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mcbeth/ir.hpp"

namespace mcbeth {

ParseError::ParseError(const std::string &message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line(line), column(column) {}

namespace {

struct Cursor {
    const std::string &text;
    size_t pos = 0;
    int line = 1;
    int line_start = 0;

    int column() const { return static_cast<int>(pos) - line_start + 1; }

    [[noreturn]] void error(const std::string &message) const {
        throw ParseError(message, line, column());
    }

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }

    void skip_spaces() {
        while (!done() && (text[pos] == ' ' || text[pos] == '\t' ||
                           text[pos] == '\r')) {
            ++pos;
        }
        if (peek() == '#') {
            while (!done() && text[pos] != '\n') {
                ++pos;
            }
        }
    }

    void newline() {
        ++pos;
        ++line;
        line_start = static_cast<int>(pos);
    }

    std::string word() {
        skip_spaces();
        size_t start = pos;
        while (!done() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                           text[pos] == '_')) {
            ++pos;
        }
        if (start == pos) {
            error("expected identifier");
        }
        return text.substr(start, pos - start);
    }

    void expect(char c) {
        skip_spaces();
        if (peek() != c) {
            error(std::string("expected '") + c + "'");
        }
        ++pos;
    }

    bool accept(char c) {
        skip_spaces();
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    double number() {
        skip_spaces();
        size_t start = pos;
        if (peek() == '+' || peek() == '-') {
            ++pos;
        }
        while (!done() && (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                           text[pos] == '.' || text[pos] == 'e' ||
                           text[pos] == 'E' ||
                           ((text[pos] == '+' || text[pos] == '-') &&
                            (text[pos - 1] == 'e' || text[pos - 1] == 'E')))) {
            ++pos;
        }
        double value = 0.0;
        auto [end, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
        if (ec != std::errc() || end != text.data() + pos || start == pos) {
            pos = start;
            error("expected number");
        }
        return value;
    }

    int integer() {
        double v = number();
        int i = static_cast<int>(std::lround(v));
        if (std::abs(v - i) > 1e-9) {
            error("expected integer");
        }
        return i;
    }

    // pi expressions: [-][k*]pi[/d], or a plain decimal literal.
    double angle() {
        skip_spaces();
        double sign = 1.0;
        size_t mark = pos;
        if (accept('-')) {
            sign = -1.0;
        }
        skip_spaces();
        double factor = 1.0;
        bool have_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
            factor = number();
            have_factor = true;
        }
        if (accept('*')) {
            skip_spaces();
        } else if (have_factor && text.compare(pos, 2, "pi") != 0) {
            return sign * factor;  // plain decimal literal
        }
        if (text.compare(pos, 2, "pi") == 0) {
            pos += 2;
            double value = factor * std::numbers::pi;
            if (accept('/')) {
                value /= number();
            }
            return sign * value;
        }
        if (have_factor) {
            return sign * factor;
        }
        pos = mark;
        error("expected angle");
    }

    std::vector<Qubit> qubit_list() {
        expect('[');
        std::vector<Qubit> qs;
        if (accept(']')) {
            return qs;
        }
        while (true) {
            qs.push_back(integer());
            if (accept(']')) {
                return qs;
            }
            expect(',');
        }
    }
};

Basis parse_basis(Cursor &cur) {
    std::string name = cur.word();
    if (name == "X") return Basis::x();
    if (name == "Y") return Basis::y();
    if (name == "Z") return Basis::z();
    if (name == "FromAngle") {
        cur.expect('(');
        Angle a(cur.angle());
        cur.expect(')');
        return Basis::from_angle(a);
    }
    if (name == "FromTuples") {
        cur.expect('(');
        Complex c[4];
        for (int i = 0; i < 4; ++i) {
            cur.expect('(');
            double re = cur.number();
            cur.expect(',');
            double im = cur.number();
            cur.expect(')');
            c[i] = {re, im};
            if (i < 3) {
                cur.expect(',');
            }
        }
        cur.expect(')');
        return Basis::from_tuples(c[0], c[1], c[2], c[3]);
    }
    cur.error("unknown basis '" + name + "'");
}

}  // namespace

Program parse_text(const std::string &text) {
    Cursor cur{text};
    Program program;
    while (!cur.done()) {
        cur.skip_spaces();
        if (cur.peek() == '\n') {
            cur.newline();
            continue;
        }
        if (cur.done()) {
            break;
        }
        std::string name = cur.word();
        if (name == "Input") {
            program.commands.push_back(cmd::Input{cur.integer()});
        } else if (name == "Prep") {
            program.commands.push_back(cmd::Prep{cur.integer()});
        } else if (name == "InputList") {
            for (Qubit q : cur.qubit_list()) {
                program.commands.push_back(cmd::Input{q});
            }
        } else if (name == "PrepList") {
            for (Qubit q : cur.qubit_list()) {
                program.commands.push_back(cmd::Prep{q});
            }
        } else if (name == "Entangle") {
            Qubit q1 = cur.integer();
            Qubit q2 = cur.integer();
            program.commands.push_back(cmd::Entangle{q1, q2});
        } else if (name == "CZ") {
            Qubit q1 = cur.integer();
            Qubit q2 = cur.integer();
            program.commands.push_back(cmd::CZ{q1, q2});
        } else if (name == "J") {
            Angle a(cur.angle());
            Qubit q1 = cur.integer();
            Qubit q2 = cur.integer();
            program.commands.push_back(cmd::J{a, q1, q2});
        } else if (name == "Measure") {
            Qubit q = cur.integer();
            Angle a(cur.angle());
            Signal ss(cur.qubit_list());
            Signal ts(cur.qubit_list());
            program.commands.push_back(cmd::Measure{q, a, ss, ts});
        } else if (name == "XCorrect") {
            Qubit q = cur.integer();
            program.commands.push_back(cmd::XCorrect{q, Signal(cur.qubit_list())});
        } else if (name == "ZCorrect") {
            Qubit q = cur.integer();
            program.commands.push_back(cmd::ZCorrect{q, Signal(cur.qubit_list())});
        } else if (name == "ReadOut") {
            Qubit q = cur.integer();
            program.commands.push_back(cmd::ReadOut{q, parse_basis(cur)});
        } else {
            cur.error("unknown command '" + name + "'");
        }
        cur.accept(';');
        cur.skip_spaces();
        if (!cur.done() && cur.peek() != '\n') {
            cur.error("trailing input after command");
        }
    }
    return program;
}

namespace {

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string fmt_list(const Signal &signal) {
    std::string out = "[";
    bool first = true;
    for (Qubit q : signal.domain()) {
        if (!first) out += ",";
        out += std::to_string(q);
        first = false;
    }
    return out + "]";
}

std::string fmt_basis(const Basis &basis) {
    switch (basis.kind) {
    case Basis::Kind::X: return "X";
    case Basis::Kind::Y: return "Y";
    case Basis::Kind::Z: return "Z";
    case Basis::Kind::FromAngle:
        return "FromAngle(" + fmt_double(basis.angle.radians()) + ")";
    case Basis::Kind::FromTuples: {
        auto pair = [](Complex c) {
            return "(" + fmt_double(c.real()) + "," + fmt_double(c.imag()) + ")";
        };
        return "FromTuples(" + pair(basis.v0[0]) + "," + pair(basis.v0[1]) + "," +
               pair(basis.v1[0]) + "," + pair(basis.v1[1]) + ")";
    }
    }
    return "Z";
}

}  // namespace

std::string print_text(const Program &program) {
    std::string out;
    for (const Command &command : program.commands) {
        std::visit(
            [&](const auto &c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, cmd::Input>) {
                    out += "Input " + std::to_string(c.qubit);
                } else if constexpr (std::is_same_v<T, cmd::Prep>) {
                    out += "Prep " + std::to_string(c.qubit);
                } else if constexpr (std::is_same_v<T, cmd::Entangle>) {
                    out += "Entangle " + std::to_string(c.q1) + " " + std::to_string(c.q2);
                } else if constexpr (std::is_same_v<T, cmd::CZ>) {
                    out += "CZ " + std::to_string(c.q1) + " " + std::to_string(c.q2);
                } else if constexpr (std::is_same_v<T, cmd::J>) {
                    out += "J " + fmt_double(c.angle.radians()) + " " +
                           std::to_string(c.q1) + " " + std::to_string(c.q2);
                } else if constexpr (std::is_same_v<T, cmd::Measure>) {
                    out += "Measure " + std::to_string(c.qubit) + " " +
                           fmt_double(c.angle.radians()) + " " + fmt_list(c.signal_s) +
                           " " + fmt_list(c.signal_t);
                } else if constexpr (std::is_same_v<T, cmd::XCorrect>) {
                    out += "XCorrect " + std::to_string(c.qubit) + " " + fmt_list(c.signal);
                } else if constexpr (std::is_same_v<T, cmd::ZCorrect>) {
                    out += "ZCorrect " + std::to_string(c.qubit) + " " + fmt_list(c.signal);
                } else if constexpr (std::is_same_v<T, cmd::ReadOut>) {
                    out += "ReadOut " + std::to_string(c.qubit) + " " + fmt_basis(c.basis);
                }
            },
            command);
        out += ";\n";
    }
    return out;
}

}  // namespace mcbeth
