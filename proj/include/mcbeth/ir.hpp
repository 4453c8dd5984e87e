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

/**
 * @file
 * Command IR for measurement-based programs: commands, programs,
 * well-formedness validation and the text/JSON representations.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace mcbeth {

using Qubit = int;
using Complex = std::complex<double>;

/// Measurement angle in radians, normalized to [0, 2*pi).
class Angle {
  public:
    Angle() : radians_(0.0) {}
    explicit Angle(double radians);

    double radians() const { return radians_; }
    Angle operator-() const { return Angle(-radians_); }
    Angle operator+(const Angle &other) const {
        return Angle(radians_ + other.radians_);
    }

    /// Compares within the 1e-12 angle tolerance, treating 0 and 2*pi as equal.
    bool approx_equal(const Angle &other) const;

  private:
    double radians_;
};

/// XOR-combined set of measurement outcomes. The empty domain evaluates to 0.
class Signal {
  public:
    Signal() = default;
    Signal(std::initializer_list<Qubit> qs);
    explicit Signal(const std::vector<Qubit> &qs);

    const std::set<Qubit> &domain() const { return domain_; }
    bool empty() const { return domain_.empty(); }

    /// Signal addition: symmetric difference of domains (x XOR x = 0).
    Signal operator+(const Signal &other) const;

    /// XOR of recorded outcomes over the domain.
    int evaluate(const std::map<Qubit, int> &outcomes) const;

    bool operator==(const Signal &other) const { return domain_ == other.domain_; }

    std::vector<Qubit> sorted() const {
        return {domain_.begin(), domain_.end()};
    }

  private:
    std::set<Qubit> domain_;
};

struct Basis {
    enum class Kind { X, Y, Z, FromAngle, FromTuples };

    Kind kind = Kind::Z;
    Angle angle;                 // FromAngle
    Complex v0[2] = {1.0, 0.0};  // FromTuples, first basis vector
    Complex v1[2] = {0.0, 1.0};  // FromTuples, second basis vector

    static Basis x() { return {Kind::X}; }
    static Basis y() { return {Kind::Y}; }
    static Basis z() { return {Kind::Z}; }
    static Basis from_angle(Angle a) { return {Kind::FromAngle, a}; }
    static Basis from_tuples(Complex a, Complex b, Complex c, Complex d) {
        Basis basis{Kind::FromTuples};
        basis.v0[0] = a;
        basis.v0[1] = b;
        basis.v1[0] = c;
        basis.v1[1] = d;
        return basis;
    }

    /// FromTuples vectors must be orthonormal within 1e-9.
    bool orthonormal() const;
    bool operator==(const Basis &other) const;
};

namespace cmd {

struct Input {
    Qubit qubit;
    bool operator==(const Input &) const = default;
};
struct Prep {
    Qubit qubit;
    bool operator==(const Prep &) const = default;
};
struct Entangle {
    Qubit q1, q2;
    bool operator==(const Entangle &) const = default;
};
struct Measure {
    Qubit qubit;
    Angle angle;
    Signal signal_s;  // flips the sign of the angle
    Signal signal_t;  // adds pi to the angle
    bool operator==(const Measure &other) const {
        return qubit == other.qubit && angle.approx_equal(other.angle) &&
               signal_s == other.signal_s && signal_t == other.signal_t;
    }
};
struct XCorrect {
    Qubit qubit;
    Signal signal;
    bool operator==(const XCorrect &) const = default;
};
struct ZCorrect {
    Qubit qubit;
    Signal signal;
    bool operator==(const ZCorrect &) const = default;
};
struct ReadOut {
    Qubit qubit;
    Basis basis;
    bool operator==(const ReadOut &) const = default;
};
struct J {
    Angle angle;
    Qubit q1, q2;
    bool operator==(const J &other) const {
        return q1 == other.q1 && q2 == other.q2 && angle.approx_equal(other.angle);
    }
};
struct CZ {
    Qubit q1, q2;
    bool operator==(const CZ &) const = default;
};

}  // namespace cmd

using Command = std::variant<cmd::Input, cmd::Prep, cmd::Entangle, cmd::Measure,
                             cmd::XCorrect, cmd::ZCorrect, cmd::ReadOut, cmd::J,
                             cmd::CZ>;

/// The qubit a command acts on quantum-mechanically. Two-qubit commands
/// report both via targets().
std::vector<Qubit> targets(const Command &command);

bool is_declaration(const Command &command);

/// An ordered command list. InputList/PrepList sugar is normalized to scalar
/// declarations by the parsers, so a Program only ever holds the commands
/// above.
struct Program {
    std::vector<Command> commands;

    bool operator==(const Program &) const = default;
};

struct Spaces {
    std::set<Qubit> all;      // V
    std::set<Qubit> inputs;   // I
    std::set<Qubit> outputs;  // O: never targeted by a Measure
};

/// Computes (V, I, O) on the desugared program: the first qubit of a J
/// counts as measured.
Spaces derive_spaces(const Program &program);

struct Violation {
    int constraint;   // 1..4 per the well-formedness list, 0 for structural
    int command_index;
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

/// Checks the four well-formedness constraints plus label contiguity,
/// declaration placement and FromTuples orthonormality. Violations are
/// reported, never thrown.
ValidationReport validate(const Program &program);

/// Maps arbitrary labels onto the contiguous range 0..n-1, preserving label
/// order. Returns the relabeled program and the old->new mapping.
std::pair<Program, std::map<Qubit, Qubit>> relabel(const Program &program);

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string &message, int line, int column);
};

Program parse_text(const std::string &text);
std::string print_text(const Program &program);

std::string to_json(const Program &program);
Program from_json(const std::string &text);

}  // namespace mcbeth
