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

#include <doctest.h>

#include "helpers.hpp"
#include "mcbeth/corpus.hpp"
#include "mcbeth/distributed.hpp"
#include "mcbeth/rewrite.hpp"
#include "mcbeth/simulator.hpp"

using namespace mcbeth;

TEST_CASE("separability detection") {
    Program wl = dist::linear_cluster_workload(4, 2);
    CHECK(dist::check_separable(wl, dist::linear_cluster_plan(4, 2)).empty());

    // Column-wise regrouping of the same workload crosses every edge.
    dist::PartitionPlan columns;
    columns.groups = {{0, 2, 4, 6}, {1, 3, 5, 7}};
    auto crossing = dist::check_separable(wl, columns);
    CHECK(crossing.size() == 6);

    dist::PartitionPlan single;
    single.groups = {{0, 1, 2, 3, 4, 5, 6, 7}};
    CHECK(dist::check_separable(wl, single).empty());

    dist::PartitionPlan bad;
    bad.groups = {{0, 1}, {1, 2}};
    CHECK_THROWS(dist::check_separable(wl, bad));
}

TEST_CASE("teleportation split puts the crossing entangle on the central record") {
    Program standard = standardize(corpus::teleport_program()).first;
    dist::PartitionPlan plan;
    plan.groups = {{0, 1}, {2}};
    dist::DistProgram dprog = dist::build_dist_prog(standard, plan);
    REQUIRE(dprog.nodes.size() == 2);
    CHECK(dprog.central_entangles.size() == 1);
    CHECK(std::get<cmd::Entangle>(dprog.central_entangles[0].second) ==
          cmd::Entangle{1, 2});
    // Node 0: three of the local commands are E(0,1) and the two measures.
    CHECK(dprog.nodes[0].commands.size() == 5);
    CHECK(dprog.nodes[0].foreign_signals.empty());
    // Node 1: declaration plus both corrections, driven by foreign signals.
    CHECK(dprog.nodes[1].commands.size() == 3);
    CHECK(dprog.nodes[1].foreign_signals == std::set<Qubit>{0, 1});
}

TEST_CASE("node streams only touch their own qubits and merge back exactly") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 10; ++i) {
        Program p = standardize(testutil::random_program(rng)).first;
        Spaces spaces = derive_spaces(p);
        dist::PartitionPlan plan;
        std::set<Qubit> a, b;
        for (Qubit q : spaces.all) {
            (q % 2 ? a : b).insert(q);
        }
        if (a.empty() || b.empty()) {
            continue;
        }
        plan.groups = {a, b};
        dist::DistProgram dprog = dist::build_dist_prog(p, plan);
        for (const dist::NodeProgram &node : dprog.nodes) {
            for (const auto &[index, command] : node.commands) {
                for (Qubit q : targets(command)) {
                    CHECK(node.group.count(q));
                }
            }
        }
        CHECK(dist::merge_dist_prog(dprog) == desugar(p));
    }
}

TEST_CASE("single-node distribution reproduces weak simulation bit for bit") {
    Program wl = dist::linear_cluster_workload(3, 1);
    dist::DistProgram dprog =
        dist::build_dist_prog(wl, dist::linear_cluster_plan(3, 1));
    for (uint64_t seed = 0; seed < 10; ++seed) {
        dist::DistResult dr = dist::run_distributed(dprog, {}, seed);
        sim::WeakResult wr = sim::weak_simulate(wl, {}, seed);
        CHECK(dr.readouts == wr.readouts);
    }
}

TEST_CASE("strict mode rejects non-separable plans, permissive falls back") {
    Program standard = standardize(corpus::teleport_program()).first;
    dist::PartitionPlan plan;
    plan.groups = {{0, 1}, {2}};
    dist::DistProgram dprog = dist::build_dist_prog(standard, plan);
    CHECK_THROWS(dist::run_distributed(dprog, {}, 1));

    dist::DistOptions permissive;
    permissive.strict = false;
    dist::DistResult r = dist::run_distributed(dprog, {}, 1, permissive);
    CHECK(r.sequential_fallback);
    sim::WeakResult wr = sim::weak_simulate(standard, {}, 1);
    CHECK(r.readouts == wr.readouts);
}

TEST_CASE("cross-node signals travel between workers") {
    // Two separable clusters, but node 1's correction depends on node 0's
    // measurement, forcing a real message exchange.
    Program p = parse_text(
        "Prep 0;\nPrep 1;\nPrep 2;\nPrep 3;\n"
        "Entangle 0 1;\nEntangle 2 3;\n"
        "Measure 0 0 [] [];\nMeasure 2 0 [0] [];\n"
        "XCorrect 3 [0];\nReadOut 1 X;\nReadOut 3 X;\n");
    dist::PartitionPlan plan;
    plan.groups = {{0, 1}, {2, 3}};
    REQUIRE(dist::check_separable(p, plan).empty());
    dist::DistProgram dprog = dist::build_dist_prog(p, plan);
    CHECK(dprog.nodes[1].foreign_signals == std::set<Qubit>{0});

    std::map<std::string, double> distd, seq;
    const int runs = 800;
    for (int i = 0; i < runs; ++i) {
        distd[dist::run_distributed(dprog, {}, 100 + i).readout_bits()] +=
            1.0 / runs;
    }
    seq = sim::empirical_distribution(p, {}, runs, 9001);
    CHECK(testutil::tv_distance(distd, seq) < 0.1);
}

TEST_CASE("scaling report emits one row per node count and trial") {
    std::string csv = dist::scaling_report(3, {1, 2}, 2, 5);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "nodes,qubits_per_node,trial,wall_clock_seconds");
    int rows = 0;
    while (std::getline(in, line)) {
        if (!line.empty()) ++rows;
    }
    CHECK(rows == 4);
}
