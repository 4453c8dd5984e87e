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

#include "mcbeth/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mcbeth/rewrite.hpp"

namespace mcbeth::sim {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

constexpr double kPruneWeight = 1e-14;
constexpr kernel::Ket kPlus{0.7071067811865475244, 0.7071067811865475244};

/// Adaptive measurement angle: (-1)^s * a + t*pi.
Angle adaptive_angle(const cmd::Measure &m, const OutcomeMap &outcomes) {
    int s = m.signal_s.evaluate(outcomes);
    int t = m.signal_t.evaluate(outcomes);
    double a = m.angle.radians();
    return Angle((s ? -a : a) + (t ? std::numbers::pi : 0.0));
}

}  // namespace

Rng rng_stream(uint64_t seed, uint64_t k) {
    // Stream 0 reduces to splitmix64(seed), so the same seed names the same
    // stream whether or not substreams are in play.
    return Rng(splitmix64(seed ^ (k * 0xD1B54A32D192ED03ULL)));
}

int SimState::position_of(Qubit q) const {
    auto it = std::find(order.begin(), order.end(), q);
    if (it == order.end()) {
        throw std::logic_error("qubit " + std::to_string(q) +
                               " is not alive in the state");
    }
    return static_cast<int>(it - order.begin());
}

SimState init(const Program &program, const InputAssignment &inputs,
              const Options &options) {
    Spaces spaces = derive_spaces(program);
    for (const auto &[q, ket] : inputs) {
        if (!spaces.inputs.count(q)) {
            throw std::invalid_argument("input assignment for non-input qubit " +
                                        std::to_string(q));
        }
        double n2 = std::norm(ket[0]) + std::norm(ket[1]);
        if (std::abs(n2 - 1.0) > 1e-9) {
            throw std::invalid_argument("input state for qubit " +
                                        std::to_string(q) + " is not unit norm");
        }
    }

    SimState state;
    std::vector<kernel::Ket> kets;
    for (Qubit q : spaces.all) {  // std::set iterates in ascending label order
        auto it = inputs.find(q);
        if (it != inputs.end()) {
            kets.push_back(it->second);
        } else {
            if (options.strict_inputs && spaces.inputs.count(q)) {
                throw std::invalid_argument("missing input assignment for qubit " +
                                            std::to_string(q));
            }
            kets.push_back(kPlus);
        }
        state.order.push_back(q);
    }
    state.vector = kernel::tensor(kets);
    return state;
}

namespace {

// Shared measurement flow for Measure and ReadOut: pick the branch, project,
// drop the qubit. In weak mode the branch is sampled; in strong mode the
// caller forks and passes the branch explicitly.
void collapse(SimState &state, Qubit q, const kernel::Bra &bra, int outcome,
              bool is_readout, bool renormalize) {
    int pos = state.position_of(q);
    auto [reduced, weight] = kernel::project_and_remove(state.vector, bra, pos);
    state.vector = std::move(reduced);
    if (renormalize) {
        state.vector.renormalize();
    }
    state.order.erase(state.order.begin() + pos);
    state.outcomes[q] = outcome;
    if (is_readout) {
        state.readouts[q] = outcome;
    }
}

}  // namespace

void step_weak(SimState &state, const Command &command, Rng &rng) {
    std::visit(
        [&](const auto &c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, cmd::Input> || std::is_same_v<T, cmd::Prep>) {
                // Declarations are consumed by init.
            } else if constexpr (std::is_same_v<T, cmd::Entangle>) {
                kernel::cz_apply(state.vector, state.position_of(c.q1),
                                 state.position_of(c.q2));
            } else if constexpr (std::is_same_v<T, cmd::XCorrect>) {
                if (c.signal.evaluate(state.outcomes)) {
                    kernel::pauli_apply(state.vector, kernel::Pauli::X,
                                        state.position_of(c.qubit));
                }
            } else if constexpr (std::is_same_v<T, cmd::ZCorrect>) {
                if (c.signal.evaluate(state.outcomes)) {
                    kernel::pauli_apply(state.vector, kernel::Pauli::Z,
                                        state.position_of(c.qubit));
                }
            } else if constexpr (std::is_same_v<T, cmd::Measure>) {
                auto [plus, minus] = kernel::measurement_bras(
                    adaptive_angle(c, state.outcomes));
                int pos = state.position_of(c.qubit);
                double w0 = kernel::project_and_remove(state.vector, plus, pos).second;
                std::uniform_real_distribution<double> unit(0.0, 1.0);
                int outcome = unit(rng) < w0 ? 0 : 1;
                collapse(state, c.qubit, outcome == 0 ? plus : minus, outcome,
                         false, true);
            } else if constexpr (std::is_same_v<T, cmd::ReadOut>) {
                auto [k0, k1] = kernel::basis_vectors(c.basis);
                int pos = state.position_of(c.qubit);
                double w0 = kernel::project_and_remove(state.vector,
                                                       kernel::bra_of(k0), pos)
                                .second;
                std::uniform_real_distribution<double> unit(0.0, 1.0);
                int outcome = unit(rng) < w0 ? 0 : 1;
                collapse(state, c.qubit,
                         kernel::bra_of(outcome == 0 ? k0 : k1), outcome, true,
                         true);
            } else {
                throw std::invalid_argument(
                    "step_weak expects desugared commands (no J/CZ)");
            }
        },
        command);
}

std::string readout_bits_of(const std::map<Qubit, int> &readouts) {
    std::string bits;
    for (const auto &[q, b] : readouts) {  // ascending label
        bits += b ? '1' : '0';
    }
    return bits;
}

std::string WeakResult::readout_bits() const {
    return readout_bits_of(readouts);
}

WeakResult weak_simulate(const Program &program, const InputAssignment &inputs,
                         uint64_t seed, const Options &options) {
    Program desugared = desugar(program);
    SimState state = init(desugared, inputs, options);
    Rng rng = rng_stream(seed, 0);
    for (const Command &command : desugared.commands) {
        step_weak(state, command, rng);
    }
    return {std::move(state.vector), std::move(state.order),
            std::move(state.readouts)};
}

namespace {

struct StrongAccumulator {
    kernel::DensityMatrix density;
    std::map<std::string, double> readout_dist;
    bool first = true;

    void leaf(const SimState &state) {
        double weight = state.vector.norm2();
        if (weight < kPruneWeight) {
            return;
        }
        kernel::DensityMatrix contribution = kernel::outer_product(state.vector);
        if (first) {
            density = std::move(contribution);
            first = false;
        } else {
            for (size_t i = 0; i < density.entries.size(); ++i) {
                density.entries[i] += contribution.entries[i];
            }
        }
        if (!state.readouts.empty()) {
            readout_dist[readout_bits_of(state.readouts)] += weight;
        }
    }
};

// Depth-first over the binary tree of measurement outcomes. Branch states
// stay unnormalized; a leaf's weight is its squared norm.
void explore(SimState state, const std::vector<Command> &commands, size_t at,
             StrongAccumulator &acc) {
    for (size_t i = at; i < commands.size(); ++i) {
        const Command &command = commands[i];
        if (const auto *m = std::get_if<cmd::Measure>(&command)) {
            if (state.vector.norm2() < kPruneWeight) {
                return;
            }
            auto [plus, minus] = kernel::measurement_bras(
                adaptive_angle(*m, state.outcomes));
            SimState branch1 = state;
            collapse(state, m->qubit, plus, 0, false, false);
            collapse(branch1, m->qubit, minus, 1, false, false);
            explore(std::move(state), commands, i + 1, acc);
            explore(std::move(branch1), commands, i + 1, acc);
            return;
        }
        if (const auto *r = std::get_if<cmd::ReadOut>(&command)) {
            if (state.vector.norm2() < kPruneWeight) {
                return;
            }
            auto [k0, k1] = kernel::basis_vectors(r->basis);
            SimState branch1 = state;
            collapse(state, r->qubit, kernel::bra_of(k0), 0, true, false);
            collapse(branch1, r->qubit, kernel::bra_of(k1), 1, true, false);
            explore(std::move(state), commands, i + 1, acc);
            explore(std::move(branch1), commands, i + 1, acc);
            return;
        }
        Rng unused;  // non-branching commands never draw randomness
        step_weak(state, command, unused);
    }
    acc.leaf(state);
}

}  // namespace

StrongResult strong_simulate(const Program &program, const InputAssignment &inputs,
                             const Options &options) {
    Program desugared = desugar(program);
    int branches = 0;
    for (const Command &command : desugared.commands) {
        if (std::holds_alternative<cmd::Measure>(command) ||
            std::holds_alternative<cmd::ReadOut>(command)) {
            ++branches;
        }
    }
    if (branches > options.branch_budget) {
        throw std::runtime_error("strong simulation branch budget exceeded: " +
                                 std::to_string(branches) + " measurements > " +
                                 std::to_string(options.branch_budget));
    }

    SimState state = init(desugared, inputs, options);
    QubitOrder final_order = state.order;
    for (const Command &command : desugared.commands) {
        if (std::holds_alternative<cmd::Measure>(command) ||
            std::holds_alternative<cmd::ReadOut>(command)) {
            Qubit q = targets(command)[0];
            std::erase(final_order, q);
        }
    }

    StrongAccumulator acc;
    explore(std::move(state), desugared.commands, 0, acc);
    return {std::move(acc.density), std::move(final_order),
            std::move(acc.readout_dist)};
}

std::map<std::string, double> empirical_distribution(const Program &program,
                                                     const InputAssignment &inputs,
                                                     int shots, uint64_t seed,
                                                     const Options &options) {
    if (shots < 1) {
        throw std::invalid_argument("empirical_distribution requires shots >= 1");
    }
    Program desugared = desugar(program);
    std::map<std::string, double> freq;
    for (int shot = 0; shot < shots; ++shot) {
        SimState state = init(desugared, inputs, options);
        Rng rng = rng_stream(seed, static_cast<uint64_t>(shot));
        for (const Command &command : desugared.commands) {
            step_weak(state, command, rng);
        }
        if (!state.readouts.empty()) {
            freq[readout_bits_of(state.readouts)] += 1.0;
        }
    }
    for (auto &[bits, count] : freq) {
        count /= shots;
    }
    return freq;
}

}  // namespace mcbeth::sim
