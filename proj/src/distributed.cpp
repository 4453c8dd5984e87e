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

#include "mcbeth/distributed.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mcbeth/rewrite.hpp"

namespace mcbeth::dist {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::map<Qubit, int> owner_map(const Program &program, const PartitionPlan &plan) {
    Spaces spaces = derive_spaces(program);
    std::map<Qubit, int> owner;
    for (size_t g = 0; g < plan.groups.size(); ++g) {
        for (Qubit q : plan.groups[g]) {
            if (!spaces.all.count(q)) {
                throw std::invalid_argument("plan mentions qubit " +
                                            std::to_string(q) +
                                            " not present in the program");
            }
            if (!owner.emplace(q, static_cast<int>(g)).second) {
                throw std::invalid_argument("plan groups are not disjoint at qubit " +
                                            std::to_string(q));
            }
        }
    }
    if (owner.size() != spaces.all.size()) {
        throw std::invalid_argument("plan does not cover every program qubit");
    }
    return owner;
}

std::vector<Qubit> signal_deps(const Command &command) {
    std::vector<Qubit> deps;
    if (const auto *m = std::get_if<cmd::Measure>(&command)) {
        for (Qubit q : m->signal_s.domain()) deps.push_back(q);
        for (Qubit q : m->signal_t.domain()) deps.push_back(q);
    } else if (const auto *x = std::get_if<cmd::XCorrect>(&command)) {
        for (Qubit q : x->signal.domain()) deps.push_back(q);
    } else if (const auto *z = std::get_if<cmd::ZCorrect>(&command)) {
        for (Qubit q : z->signal.domain()) deps.push_back(q);
    }
    return deps;
}

std::string bits_of(const std::map<Qubit, int> &readouts) {
    std::string bits;
    for (const auto &[q, b] : readouts) {
        bits += b ? '1' : '0';
    }
    return bits;
}

}  // namespace

std::string DistResult::readout_bits() const {
    return bits_of(readouts);
}

std::vector<cmd::Entangle> check_separable(const Program &program,
                                           const PartitionPlan &plan) {
    Program desugared = desugar(program);
    std::map<Qubit, int> owner = owner_map(desugared, plan);
    std::vector<cmd::Entangle> crossing;
    for (const Command &command : desugared.commands) {
        if (const auto *e = std::get_if<cmd::Entangle>(&command)) {
            if (owner.at(e->q1) != owner.at(e->q2)) {
                crossing.push_back(*e);
            }
        }
    }
    return crossing;
}

DistProgram build_dist_prog(const Program &program, const PartitionPlan &plan) {
    Program desugared = desugar(program);
    std::map<Qubit, int> owner = owner_map(desugared, plan);

    DistProgram dist;
    dist.nodes.resize(plan.groups.size());
    for (size_t g = 0; g < plan.groups.size(); ++g) {
        dist.nodes[g].node = static_cast<int>(g);
        dist.nodes[g].group = plan.groups[g];
    }

    for (size_t i = 0; i < desugared.commands.size(); ++i) {
        const Command &command = desugared.commands[i];
        if (const auto *e = std::get_if<cmd::Entangle>(&command)) {
            if (owner.at(e->q1) != owner.at(e->q2)) {
                dist.central_entangles.emplace_back(i, command);
                continue;
            }
        }
        NodeProgram &node = dist.nodes[owner.at(targets(command)[0])];
        node.commands.emplace_back(i, command);
        for (Qubit q : signal_deps(command)) {
            if (!node.group.count(q)) {
                node.foreign_signals.insert(q);
            }
        }
    }
    return dist;
}

Program merge_dist_prog(const DistProgram &dist) {
    std::vector<IndexedCommand> all = dist.central_entangles;
    for (const NodeProgram &node : dist.nodes) {
        all.insert(all.end(), node.commands.begin(), node.commands.end());
    }
    std::sort(all.begin(), all.end(),
              [](const IndexedCommand &a, const IndexedCommand &b) {
                  return a.first < b.first;
              });
    Program merged;
    for (auto &[index, command] : all) {
        merged.commands.push_back(command);
    }
    return merged;
}

namespace {

/// Broadcast board of measurement outcomes. Writers publish once per qubit;
/// readers block until the wanted qubit's message is present.
struct SignalBoard {
    std::mutex mutex;
    std::condition_variable cv;
    std::map<Qubit, int> outcomes;
    bool failed = false;

    void publish(Qubit q, int outcome) {
        {
            std::lock_guard<std::mutex> lock(mutex);
            outcomes[q] = outcome;
        }
        cv.notify_all();
    }

    void fail() {
        {
            std::lock_guard<std::mutex> lock(mutex);
            failed = true;
        }
        cv.notify_all();
    }

    int await(Qubit q, Clock::time_point deadline) {
        std::unique_lock<std::mutex> lock(mutex);
        bool ok = cv.wait_until(lock, deadline, [&] {
            return failed || outcomes.count(q) > 0;
        });
        if (failed) {
            throw std::runtime_error("peer node failed during distributed run");
        }
        if (!ok) {
            throw std::runtime_error(
                "distributed run timed out waiting for a signal from qubit " +
                std::to_string(q));
        }
        return outcomes.at(q);
    }
};

NodeResult run_node(const NodeProgram &node, const sim::InputAssignment &inputs,
                    uint64_t seed, SignalBoard *board,
                    Clock::time_point deadline) {
    Clock::time_point start = Clock::now();

    Program local;
    for (const auto &[index, command] : node.commands) {
        local.commands.push_back(command);
    }
    sim::InputAssignment local_inputs;
    for (const auto &[q, ket] : inputs) {
        if (node.group.count(q)) {
            local_inputs[q] = ket;
        }
    }

    sim::SimState state = sim::init(local, local_inputs);
    sim::Rng rng = sim::rng_stream(seed, static_cast<uint64_t>(node.node));
    for (const Command &command : local.commands) {
        for (Qubit q : signal_deps(command)) {
            if (!state.outcomes.count(q)) {
                state.outcomes[q] = board->await(q, deadline);
            }
        }
        sim::step_weak(state, command, rng);
        if (std::holds_alternative<cmd::Measure>(command) ||
            std::holds_alternative<cmd::ReadOut>(command)) {
            Qubit q = targets(command)[0];
            board->publish(q, state.outcomes.at(q));
        }
    }

    NodeResult result;
    result.node = node.node;
    result.state = std::move(state.vector);
    result.order = std::move(state.order);
    result.readouts = std::move(state.readouts);
    result.wall_clock_seconds = seconds_since(start);
    return result;
}

}  // namespace

DistResult run_distributed(const DistProgram &dist,
                           const sim::InputAssignment &inputs, uint64_t seed,
                           const DistOptions &options) {
    Clock::time_point start = Clock::now();

    if (!dist.central_entangles.empty()) {
        if (options.strict) {
            throw std::runtime_error(
                "plan is not separable: " +
                std::to_string(dist.central_entangles.size()) +
                " entangling command(s) cross partitions");
        }
        // Sequential fallback: the merged program runs globally, then the
        // read-outs are attributed back to their nodes.
        Program merged = merge_dist_prog(dist);
        sim::WeakResult weak = sim::weak_simulate(merged, inputs, seed);
        DistResult result;
        result.sequential_fallback = true;
        result.readouts = weak.readouts;
        for (const NodeProgram &node : dist.nodes) {
            NodeResult nr;
            nr.node = node.node;
            for (const auto &[q, b] : weak.readouts) {
                if (node.group.count(q)) {
                    nr.readouts[q] = b;
                }
            }
            result.nodes.push_back(std::move(nr));
        }
        result.nodes.front().state = std::move(weak.state);
        result.nodes.front().order = std::move(weak.order);
        result.wall_clock_seconds = seconds_since(start);
        return result;
    }

    SignalBoard board;
    Clock::time_point deadline =
        start + std::chrono::duration_cast<Clock::duration>(
                    std::chrono::duration<double>(options.timeout_seconds));

    std::vector<NodeResult> results(dist.nodes.size());
    std::vector<std::exception_ptr> errors(dist.nodes.size());
    std::vector<std::thread> workers;
    workers.reserve(dist.nodes.size());
    for (size_t i = 0; i < dist.nodes.size(); ++i) {
        workers.emplace_back([&, i] {
            try {
                results[i] = run_node(dist.nodes[i], inputs, seed, &board, deadline);
            } catch (...) {
                errors[i] = std::current_exception();
                board.fail();
            }
        });
    }
    for (std::thread &w : workers) {
        w.join();
    }
    for (const std::exception_ptr &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    DistResult result;
    result.nodes = std::move(results);
    for (const NodeResult &nr : result.nodes) {
        result.readouts.insert(nr.readouts.begin(), nr.readouts.end());
    }
    result.wall_clock_seconds = seconds_since(start);
    return result;
}

Program linear_cluster_workload(int n_qubits_per_node, int nodes) {
    if (n_qubits_per_node < 2 || nodes < 1) {
        throw std::invalid_argument("workload needs >= 2 qubits per node and >= 1 node");
    }
    Program program;
    for (int k = 0; k < nodes; ++k) {
        for (int q = 0; q < n_qubits_per_node; ++q) {
            program.commands.push_back(cmd::Prep{k * n_qubits_per_node + q});
        }
    }
    for (int k = 0; k < nodes; ++k) {
        for (int q = 0; q + 1 < n_qubits_per_node; ++q) {
            Qubit a = k * n_qubits_per_node + q;
            program.commands.push_back(cmd::Entangle{a, a + 1});
        }
    }
    for (int k = 0; k < nodes; ++k) {
        for (int q = 0; q + 1 < n_qubits_per_node; ++q) {
            program.commands.push_back(
                cmd::Measure{k * n_qubits_per_node + q, Angle(0.0), {}, {}});
        }
    }
    for (int k = 0; k < nodes; ++k) {
        program.commands.push_back(cmd::ReadOut{
            (k + 1) * n_qubits_per_node - 1, Basis{Basis::Kind::X}});
    }
    return program;
}

PartitionPlan linear_cluster_plan(int n_qubits_per_node, int nodes) {
    PartitionPlan plan;
    for (int k = 0; k < nodes; ++k) {
        std::set<Qubit> group;
        for (int q = 0; q < n_qubits_per_node; ++q) {
            group.insert(k * n_qubits_per_node + q);
        }
        plan.groups.push_back(std::move(group));
    }
    return plan;
}

std::string scaling_report(int n_qubits_per_node,
                           const std::vector<int> &node_counts, int trials,
                           uint64_t seed) {
    std::ostringstream csv;
    csv << "nodes,qubits_per_node,trial,wall_clock_seconds\n";
    for (int m : node_counts) {
        Program workload = linear_cluster_workload(n_qubits_per_node, m);
        PartitionPlan plan = linear_cluster_plan(n_qubits_per_node, m);
        DistProgram dist = build_dist_prog(workload, plan);
        for (int trial = 0; trial < trials; ++trial) {
            // Workers run one after another so the total reflects aggregate
            // computational load rather than the host's core count.
            Clock::time_point start = Clock::now();
            SignalBoard board;
            Clock::time_point deadline = start + std::chrono::seconds(30);
            for (const NodeProgram &node : dist.nodes) {
                run_node(node, {}, seed + static_cast<uint64_t>(trial), &board,
                         deadline);
            }
            csv << m << ',' << n_qubits_per_node << ',' << trial << ','
                << seconds_since(start) << '\n';
        }
    }
    return csv.str();
}

}  // namespace mcbeth::dist
