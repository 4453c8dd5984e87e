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

#include "mcbeth/ir.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mcbeth {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAngleTol = 1e-12;
}  // namespace

Angle::Angle(double radians) {
    double r = std::fmod(radians, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // fmod of a slightly negative value can land exactly on 2*pi.
    if (r >= kTwoPi) {
        r -= kTwoPi;
    }
    if (r == 0.0) {
        r = 0.0;  // never keep a negative zero
    }
    radians_ = r;
}

bool Angle::approx_equal(const Angle &other) const {
    double d = std::abs(radians_ - other.radians_);
    return d < kAngleTol || std::abs(d - kTwoPi) < kAngleTol;
}

Signal::Signal(std::initializer_list<Qubit> qs) {
    for (Qubit q : qs) {
        if (!domain_.erase(q)) {
            domain_.insert(q);
        }
    }
}

Signal::Signal(const std::vector<Qubit> &qs) {
    for (Qubit q : qs) {
        if (!domain_.erase(q)) {
            domain_.insert(q);
        }
    }
}

Signal Signal::operator+(const Signal &other) const {
    Signal result = *this;
    for (Qubit q : other.domain_) {
        if (!result.domain_.erase(q)) {
            result.domain_.insert(q);
        }
    }
    return result;
}

int Signal::evaluate(const std::map<Qubit, int> &outcomes) const {
    int acc = 0;
    for (Qubit q : domain_) {
        acc ^= outcomes.at(q);
    }
    return acc;
}

bool Basis::orthonormal() const {
    if (kind != Kind::FromTuples) {
        return true;
    }
    constexpr double tol = 1e-9;
    double n0 = std::norm(v0[0]) + std::norm(v0[1]);
    double n1 = std::norm(v1[0]) + std::norm(v1[1]);
    Complex ip = std::conj(v0[0]) * v1[0] + std::conj(v0[1]) * v1[1];
    return std::abs(n0 - 1.0) < tol && std::abs(n1 - 1.0) < tol &&
           std::abs(ip) < tol;
}

bool Basis::operator==(const Basis &other) const {
    if (kind != other.kind) {
        return false;
    }
    switch (kind) {
    case Kind::X:
    case Kind::Y:
    case Kind::Z:
        return true;
    case Kind::FromAngle:
        return angle.approx_equal(other.angle);
    case Kind::FromTuples:
        for (int i = 0; i < 2; ++i) {
            if (std::abs(v0[i] - other.v0[i]) > 1e-12 ||
                std::abs(v1[i] - other.v1[i]) > 1e-12) {
                return false;
            }
        }
        return true;
    }
    return false;
}

std::vector<Qubit> targets(const Command &command) {
    return std::visit(
        [](const auto &c) -> std::vector<Qubit> {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, cmd::Entangle> ||
                          std::is_same_v<T, cmd::CZ>) {
                return {c.q1, c.q2};
            } else if constexpr (std::is_same_v<T, cmd::J>) {
                return {c.q1, c.q2};
            } else {
                return {c.qubit};
            }
        },
        command);
}

bool is_declaration(const Command &command) {
    return std::holds_alternative<cmd::Input>(command) ||
           std::holds_alternative<cmd::Prep>(command);
}

Spaces derive_spaces(const Program &program) {
    Spaces spaces;
    std::set<Qubit> measured;
    for (const Command &command : program.commands) {
        for (Qubit q : targets(command)) {
            spaces.all.insert(q);
        }
        if (const auto *in = std::get_if<cmd::Input>(&command)) {
            spaces.inputs.insert(in->qubit);
        } else if (const auto *m = std::get_if<cmd::Measure>(&command)) {
            measured.insert(m->qubit);
        } else if (const auto *j = std::get_if<cmd::J>(&command)) {
            measured.insert(j->q1);
        }
    }
    for (Qubit q : spaces.all) {
        if (!measured.count(q)) {
            spaces.outputs.insert(q);
        }
    }
    return spaces;
}

namespace {

struct Checker {
    ValidationReport report;
    int index = 0;

    void fail(int constraint, const std::string &message) {
        report.ok = false;
        report.violations.push_back({constraint, index, message});
    }
};

}  // namespace

ValidationReport validate(const Program &program) {
    Checker ck;

    std::set<Qubit> declared;
    std::set<Qubit> measured;   // Measure targets and J first arguments
    std::set<Qubit> consumed;   // measured plus read-out qubits
    std::set<Qubit> read_out;
    bool past_declarations = false;

    auto check_signal = [&](const Signal &signal, const char *which) {
        for (Qubit q : signal.domain()) {
            if (!measured.count(q)) {
                ck.fail(1, std::string(which) + " signal depends on qubit " +
                               std::to_string(q) + ", which has no earlier measurement");
            }
        }
    };
    auto check_alive = [&](Qubit q) {
        if (!declared.count(q)) {
            ck.fail(3, "qubit " + std::to_string(q) + " is used before being declared");
        } else if (consumed.count(q)) {
            ck.fail(2, "qubit " + std::to_string(q) + " is already measured");
        }
    };

    for (const Command &command : program.commands) {
        if (is_declaration(command)) {
            Qubit q = std::holds_alternative<cmd::Input>(command)
                          ? std::get<cmd::Input>(command).qubit
                          : std::get<cmd::Prep>(command).qubit;
            if (past_declarations) {
                ck.fail(0, "declaration of qubit " + std::to_string(q) +
                               " appears after operational commands");
            }
            if (!declared.insert(q).second) {
                ck.fail(0, "qubit " + std::to_string(q) + " is declared twice");
            }
        } else {
            past_declarations = true;
            std::visit(
                [&](const auto &c) {
                    using T = std::decay_t<decltype(c)>;
                    if constexpr (std::is_same_v<T, cmd::Entangle> ||
                                  std::is_same_v<T, cmd::CZ> ||
                                  std::is_same_v<T, cmd::J>) {
                        if (c.q1 == c.q2) {
                            ck.fail(0, "two-qubit command with identical qubits " +
                                           std::to_string(c.q1));
                        }
                        check_alive(c.q1);
                        check_alive(c.q2);
                        if constexpr (std::is_same_v<T, cmd::J>) {
                            measured.insert(c.q1);
                            consumed.insert(c.q1);
                        }
                    } else if constexpr (std::is_same_v<T, cmd::Measure>) {
                        check_alive(c.qubit);
                        check_signal(c.signal_s, "measurement s");
                        check_signal(c.signal_t, "measurement t");
                        measured.insert(c.qubit);
                        consumed.insert(c.qubit);
                    } else if constexpr (std::is_same_v<T, cmd::XCorrect> ||
                                         std::is_same_v<T, cmd::ZCorrect>) {
                        check_alive(c.qubit);
                        check_signal(c.signal, "correction");
                    } else if constexpr (std::is_same_v<T, cmd::ReadOut>) {
                        if (!declared.count(c.qubit)) {
                            ck.fail(3, "qubit " + std::to_string(c.qubit) +
                                           " is used before being declared");
                        } else if (consumed.count(c.qubit)) {
                            ck.fail(4, "read-out of qubit " + std::to_string(c.qubit) +
                                           " which is not an output qubit");
                        }
                        if (!c.basis.orthonormal()) {
                            ck.fail(0, "read-out basis for qubit " +
                                           std::to_string(c.qubit) +
                                           " is not orthonormal");
                        }
                        consumed.insert(c.qubit);
                        read_out.insert(c.qubit);
                    }
                },
                command);
        }
        ++ck.index;
    }

    // Labels must be exactly 0..n-1.
    if (!declared.empty()) {
        Qubit expect = 0;
        for (Qubit q : declared) {
            if (q != expect) {
                ck.index = 0;
                ck.fail(0, "qubit labels are not contiguous from 0 (missing " +
                               std::to_string(expect) + ")");
                break;
            }
            ++expect;
        }
    }

    return ck.report;
}

std::pair<Program, std::map<Qubit, Qubit>> relabel(const Program &program) {
    std::set<Qubit> used;
    for (const Command &command : program.commands) {
        for (Qubit q : targets(command)) {
            used.insert(q);
        }
        std::visit(
            [&](const auto &c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, cmd::Measure>) {
                    for (Qubit q : c.signal_s.domain()) used.insert(q);
                    for (Qubit q : c.signal_t.domain()) used.insert(q);
                } else if constexpr (std::is_same_v<T, cmd::XCorrect> ||
                                     std::is_same_v<T, cmd::ZCorrect>) {
                    for (Qubit q : c.signal.domain()) used.insert(q);
                }
            },
            command);
    }
    std::map<Qubit, Qubit> mapping;
    Qubit next = 0;
    for (Qubit q : used) {
        mapping[q] = next++;
    }

    auto remap_signal = [&](const Signal &signal) {
        std::vector<Qubit> qs;
        for (Qubit q : signal.domain()) {
            qs.push_back(mapping.at(q));
        }
        return Signal(qs);
    };

    Program out;
    for (Command command : program.commands) {
        std::visit(
            [&](auto &c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, cmd::Entangle> ||
                              std::is_same_v<T, cmd::CZ> ||
                              std::is_same_v<T, cmd::J>) {
                    c.q1 = mapping.at(c.q1);
                    c.q2 = mapping.at(c.q2);
                } else if constexpr (std::is_same_v<T, cmd::Measure>) {
                    c.qubit = mapping.at(c.qubit);
                    c.signal_s = remap_signal(c.signal_s);
                    c.signal_t = remap_signal(c.signal_t);
                } else if constexpr (std::is_same_v<T, cmd::XCorrect> ||
                                     std::is_same_v<T, cmd::ZCorrect>) {
                    c.qubit = mapping.at(c.qubit);
                    c.signal = remap_signal(c.signal);
                } else {
                    c.qubit = mapping.at(c.qubit);
                }
            },
            command);
        out.commands.push_back(std::move(command));
    }
    return {out, mapping};
}

}  // namespace mcbeth
