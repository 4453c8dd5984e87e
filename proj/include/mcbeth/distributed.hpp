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
 * Partitioning of programs into per-node subprograms and their concurrent
 * pseudo-simulation with classical signal exchange. One worker thread per
 * node; measurement outcomes travel between nodes as SignalMessages on a
 * shared board keyed by source qubit.
 */

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mcbeth/ir.hpp"
#include "mcbeth/simulator.hpp"

namespace mcbeth::dist {

struct PartitionPlan {
    std::vector<std::set<Qubit>> groups;
};

/// Commands keep their index in the original program so that node streams
/// can be merged back and scheduled in global order.
using IndexedCommand = std::pair<size_t, Command>;

struct NodeProgram {
    int node = 0;
    std::set<Qubit> group;
    std::vector<IndexedCommand> commands;
    /// Qubits measured on other nodes that local signals reference.
    std::set<Qubit> foreign_signals;
};

struct SignalMessage {
    Qubit source_qubit;
    int outcome;
};

struct DistProgram {
    std::vector<NodeProgram> nodes;
    /// Cross-partition entangling commands, owned by the central record.
    std::vector<IndexedCommand> central_entangles;
};

/// Entangling commands whose endpoints lie in different groups. Empty means
/// the plan admits an accurate parallel classical simulation.
std::vector<cmd::Entangle> check_separable(const Program &program,
                                           const PartitionPlan &plan);

DistProgram build_dist_prog(const Program &program, const PartitionPlan &plan);

/// All node streams plus the central record, merged by original index.
Program merge_dist_prog(const DistProgram &dist);

struct DistOptions {
    bool strict = true;  // error on cross-partition entanglement
    double timeout_seconds = 30.0;
};

struct NodeResult {
    int node = 0;
    kernel::StateVector state;
    sim::QubitOrder order;
    std::map<Qubit, int> readouts;
    double wall_clock_seconds = 0.0;
};

struct DistResult {
    std::vector<NodeResult> nodes;
    std::map<Qubit, int> readouts;
    double wall_clock_seconds = 0.0;
    /// True when cross-partition entanglement forced a sequential global run.
    bool sequential_fallback = false;

    std::string readout_bits() const;
};

/// Node k draws from rng_stream(seed, k), so a single-node run reproduces
/// weak_simulate with the same seed bit for bit.
DistResult run_distributed(const DistProgram &dist,
                           const sim::InputAssignment &inputs, uint64_t seed,
                           const DistOptions &options = {});

/// Synthetic workload timings: independent n-qubit linear clusters, one per
/// node, workers run one after another. Returns CSV with header
/// nodes,qubits_per_node,trial,wall_clock_seconds.
std::string scaling_report(int n_qubits_per_node,
                           const std::vector<int> &node_counts, int trials,
                           uint64_t seed);

/// The workload scaling_report times: node k owns the linear cluster on
/// qubits [k*n, (k+1)*n).
Program linear_cluster_workload(int n_qubits_per_node, int nodes);
PartitionPlan linear_cluster_plan(int n_qubits_per_node, int nodes);

}  // namespace mcbeth::dist
