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

#include "mcbeth/corpus.hpp"

#include <numbers>
#include <stdexcept>

namespace mcbeth::corpus {

namespace {
constexpr double kPi = std::numbers::pi;
}

Program teleport_program() {
    Program p;
    p.commands = {
        cmd::Input{0},
        cmd::Prep{1},
        cmd::Prep{2},
        cmd::J{Angle(0.0), 0, 1},
        cmd::J{Angle(0.0), 1, 2},
    };
    return p;
}

Program cluster_program(const ClusterSpec &spec) {
    using V = ClusterSpec::Variant;
    Program p;
    switch (spec.variant) {
    case V::Linear3:
        p.commands = {
            cmd::Input{0}, cmd::Prep{1}, cmd::Prep{2},
            cmd::J{spec.alpha, 0, 1},
            cmd::J{spec.beta, 1, 2},
        };
        break;
    case V::Linear4:
        p.commands = {
            cmd::Input{0}, cmd::Prep{1}, cmd::Prep{2}, cmd::Prep{3},
            cmd::J{spec.alpha, 0, 1},
            cmd::J{spec.beta, 1, 2},
            cmd::J{spec.gamma, 2, 3},
        };
        break;
    case V::Horseshoe:
        p.commands = {
            cmd::Input{0}, cmd::Input{1}, cmd::Prep{2}, cmd::Prep{3},
            cmd::CZ{0, 1},
            cmd::J{spec.alpha, 0, 2},
            cmd::J{spec.beta, 1, 3},
        };
        break;
    case V::ReverseHorseshoe:
        // The trailing entangler acts on the surviving output pair.
        p.commands = {
            cmd::Input{0}, cmd::Input{1}, cmd::Prep{2}, cmd::Prep{3},
            cmd::J{spec.alpha, 0, 2},
            cmd::J{spec.beta, 1, 3},
            cmd::CZ{2, 3},
        };
        break;
    case V::Box:
        p.commands = {
            cmd::Input{0}, cmd::Input{1}, cmd::Prep{2}, cmd::Prep{3},
            cmd::CZ{0, 1},
            cmd::J{spec.alpha, 0, 2},
            cmd::J{spec.beta, 1, 3},
            cmd::CZ{2, 3},
        };
        break;
    }
    return p;
}

Program deutsch_jozsa(int n, Oracle oracle) {
    if (n < 2) {
        throw std::invalid_argument("deutsch_jozsa requires n >= 2");
    }
    Program p;
    int total = n + 2;  // qubits 0..3 for n=2, one more per extra bit
    for (Qubit q = 0; q < total; ++q) {
        p.commands.push_back(cmd::Prep{q});
    }
    p.commands.push_back(cmd::J{Angle(kPi), 0, 1});
    if (oracle == Oracle::Balanced) {
        for (Qubit q = 2; q < total; ++q) {
            p.commands.push_back(cmd::CZ{1, q});
        }
    }
    p.commands.push_back(cmd::ReadOut{1, Basis::z()});
    for (Qubit q = 2; q < total; ++q) {
        p.commands.push_back(cmd::ReadOut{q, Basis::x()});
    }
    return p;
}

Program grover2(const std::string &oracle_bits, GroverVariant variant) {
    if (oracle_bits.size() != 2 ||
        oracle_bits.find_first_not_of("01") != std::string::npos) {
        throw std::invalid_argument("grover2 oracle must be 2 bits of 0/1");
    }
    // Oracle-layer angles chosen so the read-out bitstring, keyed by
    // ascending qubit label, equals the searched string with probability 1.
    // The two variants land on opposite branches at their final readout, so
    // their angle layouts are bitwise complements of each other.
    Angle a0, a1;
    if (variant == GroverVariant::FourQubit) {
        a0 = Angle(oracle_bits[1] == '0' ? kPi : 0.0);
        a1 = Angle(oracle_bits[0] == '0' ? kPi : 0.0);
    } else {
        a0 = Angle(oracle_bits[1] == '1' ? kPi : 0.0);
        a1 = Angle(oracle_bits[0] == '1' ? kPi : 0.0);
    }

    Program p;
    if (variant == GroverVariant::FourQubit) {
        p.commands = {
            cmd::Prep{0}, cmd::Prep{1}, cmd::Prep{2}, cmd::Prep{3},
            cmd::CZ{0, 1},
            cmd::J{a0, 0, 2},
            cmd::J{a1, 1, 3},
            cmd::CZ{2, 3},
            cmd::ReadOut{2, Basis::from_angle(Angle(kPi))},
            cmd::ReadOut{3, Basis::from_angle(Angle(kPi))},
        };
    } else {
        p.commands = {
            cmd::Prep{0}, cmd::Prep{1}, cmd::Prep{2},
            cmd::Prep{3}, cmd::Prep{4}, cmd::Prep{5},
            cmd::CZ{0, 1},
            cmd::J{a0, 0, 2},
            cmd::J{a1, 1, 3},
            cmd::CZ{2, 3},
            cmd::J{Angle(0.0), 2, 4},
            cmd::J{Angle(0.0), 3, 5},
            cmd::ReadOut{4, Basis::z()},
            cmd::ReadOut{5, Basis::z()},
        };
    }
    return p;
}

}  // namespace mcbeth::corpus
