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

#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mcbeth/ir.hpp"
#include "mcbeth/kernel.hpp"

namespace testutil {

using namespace mcbeth;

inline double tv_distance(const std::map<std::string, double> &a,
                          const std::map<std::string, double> &b) {
    double acc = 0.0;
    for (const auto &[k, p] : a) {
        auto it = b.find(k);
        acc += std::abs(p - (it == b.end() ? 0.0 : it->second));
    }
    for (const auto &[k, p] : b) {
        if (!a.count(k)) {
            acc += p;
        }
    }
    return acc / 2.0;
}

inline double max_abs_diff(const kernel::DensityMatrix &a,
                           const kernel::DensityMatrix &b) {
    double worst = 0.0;
    for (size_t i = 0; i < a.entries.size(); ++i) {
        worst = std::max(worst, std::abs(a.entries[i] - b.entries[i]));
    }
    return worst;
}

/// |<a|b>| for unit vectors; 1 means equal up to global phase.
inline double fidelity_up_to_phase(const kernel::StateVector &a,
                                   const kernel::StateVector &b) {
    Complex overlap = 0.0;
    for (size_t i = 0; i < a.amps.size(); ++i) {
        overlap += std::conj(a.amps[i]) * b.amps[i];
    }
    return std::abs(overlap);
}

inline kernel::Ket random_ket(std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    kernel::Ket ket{Complex(normal(rng), normal(rng)),
                    Complex(normal(rng), normal(rng))};
    double inv = 1.0 / std::sqrt(std::norm(ket[0]) + std::norm(ket[1]));
    ket[0] *= inv;
    ket[1] *= inv;
    return ket;
}

inline Angle random_angle(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> pick(0, 4);
    std::uniform_real_distribution<double> unit(0.0, 2.0 * std::numbers::pi);
    switch (pick(rng)) {
    case 0: return Angle(0.0);
    case 1: return Angle(std::numbers::pi);
    case 2: return Angle(std::numbers::pi / 2.0);
    case 3: return Angle(std::numbers::pi / 4.0);
    default: return Angle(unit(rng));
    }
}

/// A random well-formed program on up to 5 qubits and up to 12 commands.
/// Signals only reference Measure outcomes, never ReadOut outcomes, so the
/// program stays valid after ReadOuts are moved to the end.
inline Program random_program(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> nq_dist(2, 5);
    int n = nq_dist(rng);
    Program p;
    std::uniform_int_distribution<int> coin(0, 1);
    for (Qubit q = 0; q < n; ++q) {
        if (coin(rng)) {
            p.commands.push_back(cmd::Input{q});
        } else {
            p.commands.push_back(cmd::Prep{q});
        }
    }

    std::set<Qubit> unmeasured;
    std::set<Qubit> measured;
    for (Qubit q = 0; q < n; ++q) {
        unmeasured.insert(q);
    }
    auto pick_from = [&](const std::set<Qubit> &s) {
        std::uniform_int_distribution<size_t> d(0, s.size() - 1);
        auto it = s.begin();
        std::advance(it, d(rng));
        return *it;
    };
    auto random_signal = [&] {
        Signal signal;
        for (Qubit q : measured) {
            if (coin(rng)) {
                signal = signal + Signal{q};
            }
        }
        return signal;
    };

    std::uniform_int_distribution<int> ops_dist(3, 12 - n);
    int ops = std::max(1, ops_dist(rng));
    std::uniform_int_distribution<int> kind_dist(0, 6);
    for (int i = 0; i < ops; ++i) {
        if (unmeasured.empty()) {
            break;
        }
        switch (kind_dist(rng)) {
        case 0:
        case 1: {
            if (unmeasured.size() < 2) break;
            Qubit q1 = pick_from(unmeasured);
            Qubit q2 = pick_from(unmeasured);
            if (q1 == q2) break;
            p.commands.push_back(cmd::Entangle{q1, q2});
            break;
        }
        case 2: {
            // Keep at least one qubit in the final state.
            if (unmeasured.size() < 2) break;
            Qubit q = pick_from(unmeasured);
            p.commands.push_back(
                cmd::Measure{q, random_angle(rng), random_signal(), random_signal()});
            unmeasured.erase(q);
            measured.insert(q);
            break;
        }
        case 3: {
            Qubit q = pick_from(unmeasured);
            p.commands.push_back(cmd::XCorrect{q, random_signal()});
            break;
        }
        case 4: {
            Qubit q = pick_from(unmeasured);
            p.commands.push_back(cmd::ZCorrect{q, random_signal()});
            break;
        }
        case 5: {
            if (unmeasured.size() < 2) break;
            Qubit q1 = pick_from(unmeasured);
            Qubit q2 = pick_from(unmeasured);
            if (q1 == q2) break;
            p.commands.push_back(cmd::J{random_angle(rng), q1, q2});
            unmeasured.erase(q1);
            measured.insert(q1);
            break;
        }
        default: {
            if (unmeasured.size() < 2) break;
            Qubit q1 = pick_from(unmeasured);
            Qubit q2 = pick_from(unmeasured);
            if (q1 == q2) break;
            p.commands.push_back(cmd::CZ{q1, q2});
            break;
        }
        }
    }
    // Read out most remaining qubits; the rest stay in the final state so
    // density comparisons are not always scalar.
    for (Qubit q : unmeasured) {
        if (unmeasured.size() > 1 && coin(rng) == 0 && coin(rng) == 0) {
            continue;
        }
        std::uniform_int_distribution<int> b(0, 2);
        Basis basis = b(rng) == 0 ? Basis::x() : b(rng) == 1 ? Basis::y() : Basis::z();
        p.commands.push_back(cmd::ReadOut{q, basis});
    }
    return p;
}

}  // namespace testutil
