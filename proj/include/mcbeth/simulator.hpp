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
 * Weak (sampled, state-vector) and strong (exhaustive-branch,
 * density-matrix) execution of validated programs. Measurements remove the
 * measured qubit from the state via projection.
 */

#pragma once

#include <map>
#include <random>
#include <string>

#include "mcbeth/ir.hpp"
#include "mcbeth/kernel.hpp"

namespace mcbeth::sim {

/// Qubit labels alive in the state, in position order. Measuring deletes the
/// entry and shifts later positions down by one.
using QubitOrder = std::vector<Qubit>;

using OutcomeMap = std::map<Qubit, int>;

/// Map qubit -> unit 2-vector for the program's input qubits.
using InputAssignment = std::map<Qubit, kernel::Ket>;

using Rng = std::mt19937_64;

/// Deterministic substream derivation: stream k of a base seed. Stream 0 is
/// the stream weak_simulate itself consumes.
Rng rng_stream(uint64_t seed, uint64_t k);

struct SimState {
    kernel::StateVector vector;
    QubitOrder order;
    OutcomeMap outcomes;
    std::map<Qubit, int> readouts;

    int position_of(Qubit q) const;
};

struct WeakResult {
    kernel::StateVector state;
    QubitOrder order;
    std::map<Qubit, int> readouts;

    /// Read-out bits concatenated by ascending qubit label.
    std::string readout_bits() const;
};

struct StrongResult {
    kernel::DensityMatrix density;
    QubitOrder order;
    std::map<std::string, double> readout_dist;
};

struct Options {
    int branch_budget = 20;    // max Measure+ReadOut commands in strong mode
    bool strict_inputs = false;  // error on unassigned Input qubits
};

/// Tensor product over ascending label: the assigned vector for inputs,
/// |+> otherwise. Unassigned inputs default to |+> unless strict.
SimState init(const Program &program, const InputAssignment &inputs,
              const Options &options = {});

/// Executes one desugared command, sampling measurement outcomes from rng.
void step_weak(SimState &state, const Command &command, Rng &rng);

WeakResult weak_simulate(const Program &program, const InputAssignment &inputs,
                         uint64_t seed, const Options &options = {});

StrongResult strong_simulate(const Program &program, const InputAssignment &inputs,
                             const Options &options = {});

/// Frequencies of read-out bitstrings over independent seeded shots.
std::map<std::string, double> empirical_distribution(const Program &program,
                                                     const InputAssignment &inputs,
                                                     int shots, uint64_t seed,
                                                     const Options &options = {});

}  // namespace mcbeth::sim
