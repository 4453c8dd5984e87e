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
 * Gate-level circuit IR, the two compilation modes (classically controlled
 * and deferred measurement), OpenQASM 2.0 emission, and a reference gate
 * interpreter used to certify equivalence.
 *
 * RZ convention: RZ(t) = diag(1, e^{it}) up to global phase, so that
 * RZ(-a); H; measure realizes a measurement at angle a.
 */

#pragma once

#include <array>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "mcbeth/ir.hpp"
#include "mcbeth/simulator.hpp"

namespace mcbeth::gates {

namespace g {
struct H { int q; };
struct X { int q; };
struct Z { int q; };
struct RZ { double theta; int q; };
struct RY { double theta; int q; };
struct CX { int control, target; };
struct CZ { int a, b; };
struct Measure { int q; int clbit; };
struct CondX { int clbit; int q; };
struct CondZ { int clbit; int q; };
}  // namespace g

using Gate = std::variant<g::H, g::X, g::Z, g::RZ, g::RY, g::CX, g::CZ,
                          g::Measure, g::CondX, g::CondZ>;

struct GateCircuit {
    int n_qubits = 0;
    int n_clbits = 0;
    std::vector<Gate> gates;
    /// Clbits holding read-out results, keyed by the source program qubit.
    std::map<Qubit, int> readout_clbits;
    /// Source program qubit per clbit, for register naming in QASM.
    std::map<int, Qubit> clbit_qubit;
};

/// Prep -> H from |0>; Entangle -> CZ; Measure -> conditional X/Z cascade +
/// RZ(-a) + H + measure; corrections -> conditional X/Z. Input qubits start
/// at |0>; prepend pre_circuit_for_inputs to fix their states.
GateCircuit compile_classical_ctrl(const Program &program);

/// As classical-control mode, but classical dependencies become CX/CZ
/// controlled by the source qubit, and every measurement is deferred past
/// all unitaries. Requires a standardized program.
GateCircuit compile_deferred(const Program &program);

/// Gates preparing each assigned input state from |0>.
std::vector<Gate> pre_circuit_for_inputs(const sim::InputAssignment &inputs);

std::string emit_qasm(const GateCircuit &circuit);

/// Gate IR as JSON, mirroring the Gate variants.
std::string to_json(const GateCircuit &circuit);

struct ShotsMode {
    int shots;
    uint64_t seed;
};
struct ExactMode {
    int branch_budget = 20;
};

/// Distribution over the read-out clbits (keys ordered by ascending source
/// qubit label, matching the simulator's convention).
std::map<std::string, double> gate_simulate(const GateCircuit &circuit,
                                            const std::vector<Gate> &pre_circuit,
                                            ShotsMode mode);
std::map<std::string, double> gate_simulate(const GateCircuit &circuit,
                                            const std::vector<Gate> &pre_circuit,
                                            ExactMode mode = {});

/// ZYZ decomposition: u = RZ(theta1) * RY(theta2) * RZ(theta3) up to global
/// phase, with RZ(t) = diag(1, e^{it}) and RY the real rotation.
std::array<double, 3> decompose_unitary_1q(const std::array<Complex, 4> &u);

}  // namespace mcbeth::gates
