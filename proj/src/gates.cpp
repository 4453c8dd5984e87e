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

#include "mcbeth/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "mcbeth/rewrite.hpp"

namespace mcbeth::gates {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kElideTol = 1e-12;

std::array<Complex, 4> rz_matrix(double theta) {
    return {1.0, 0.0, 0.0, std::exp(Complex(0.0, theta))};
}

std::array<Complex, 4> ry_matrix(double theta) {
    double c = std::cos(theta / 2.0);
    double s = std::sin(theta / 2.0);
    return {c, -s, s, c};
}

constexpr std::array<Complex, 4> kHadamard = {
    0.7071067811865475244, 0.7071067811865475244,
    0.7071067811865475244, -0.7071067811865475244};

struct Compiler {
    GateCircuit circuit;
    std::map<Qubit, int> clbit_of;

    int alloc_clbit(Qubit q) {
        int c = circuit.n_clbits++;
        clbit_of[q] = c;
        circuit.clbit_qubit[c] = q;
        return c;
    }

    void push(Gate gate) { circuit.gates.push_back(gate); }

    // Basis-change gates mapping the read-out basis to the computational one.
    void emit_basis_change(Qubit q, const Basis &basis) {
        switch (basis.kind) {
        case Basis::Kind::Z:
            break;
        case Basis::Kind::X:
            push(g::H{q});
            break;
        case Basis::Kind::Y:
            push(g::RZ{-kPi / 2.0, q});
            push(g::H{q});
            break;
        case Basis::Kind::FromAngle:
            if (std::abs(basis.angle.radians()) > kElideTol) {
                push(g::RZ{-basis.angle.radians(), q});
            }
            push(g::H{q});
            break;
        case Basis::Kind::FromTuples: {
            if (!basis.orthonormal()) {
                throw std::invalid_argument("FromTuples basis is not orthonormal");
            }
            // Adjoint of the basis matrix [v0 v1], decomposed as ZYZ.
            std::array<Complex, 4> adj = {
                std::conj(basis.v0[0]), std::conj(basis.v0[1]),
                std::conj(basis.v1[0]), std::conj(basis.v1[1])};
            auto [t1, t2, t3] = decompose_unitary_1q(adj);
            if (std::abs(t3) > kElideTol) push(g::RZ{t3, q});
            if (std::abs(t2) > kElideTol) push(g::RY{t2, q});
            if (std::abs(t1) > kElideTol) push(g::RZ{t1, q});
            break;
        }
        }
    }
};

}  // namespace

std::vector<Gate> pre_circuit_for_inputs(const sim::InputAssignment &inputs) {
    std::vector<Gate> gates;
    for (const auto &[q, ket] : inputs) {
        double theta = 2.0 * std::atan2(std::abs(ket[1]), std::abs(ket[0]));
        double phi = std::arg(ket[1]) - std::arg(ket[0]);
        if (std::abs(theta) > kElideTol) {
            gates.push_back(g::RY{theta, q});
        }
        if (std::abs(phi) > kElideTol && std::abs(ket[1]) > kElideTol) {
            gates.push_back(g::RZ{phi, q});
        }
    }
    return gates;
}

GateCircuit compile_classical_ctrl(const Program &program) {
    Spaces spaces = derive_spaces(program);
    Compiler cc;
    cc.circuit.n_qubits = static_cast<int>(spaces.all.size());

    for (const Command &command : program.commands) {
        std::visit(
            [&](const auto &c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, cmd::Prep>) {
                    cc.push(g::H{c.qubit});
                } else if constexpr (std::is_same_v<T, cmd::Input>) {
                    // Inputs start at |0>; see pre_circuit_for_inputs.
                } else if constexpr (std::is_same_v<T, cmd::Entangle>) {
                    cc.push(g::CZ{c.q1, c.q2});
                } else if constexpr (std::is_same_v<T, cmd::Measure>) {
                    // XOR conditioning: one self-inverse conditional gate per
                    // domain bit.
                    for (Qubit s : c.signal_s.domain()) {
                        cc.push(g::CondX{cc.clbit_of.at(s), c.qubit});
                    }
                    for (Qubit t : c.signal_t.domain()) {
                        cc.push(g::CondZ{cc.clbit_of.at(t), c.qubit});
                    }
                    if (std::abs(c.angle.radians()) > kElideTol) {
                        cc.push(g::RZ{-c.angle.radians(), c.qubit});
                    }
                    cc.push(g::H{c.qubit});
                    cc.push(g::Measure{c.qubit, cc.alloc_clbit(c.qubit)});
                } else if constexpr (std::is_same_v<T, cmd::XCorrect>) {
                    for (Qubit s : c.signal.domain()) {
                        cc.push(g::CondX{cc.clbit_of.at(s), c.qubit});
                    }
                } else if constexpr (std::is_same_v<T, cmd::ZCorrect>) {
                    for (Qubit s : c.signal.domain()) {
                        cc.push(g::CondZ{cc.clbit_of.at(s), c.qubit});
                    }
                } else if constexpr (std::is_same_v<T, cmd::ReadOut>) {
                    cc.emit_basis_change(c.qubit, c.basis);
                    int cl = cc.alloc_clbit(c.qubit);
                    cc.circuit.readout_clbits[c.qubit] = cl;
                    cc.push(g::Measure{c.qubit, cl});
                } else {
                    throw std::invalid_argument(
                        "compilation expects a desugared program (no J/CZ)");
                }
            },
            command);
    }
    return cc.circuit;
}

GateCircuit compile_deferred(const Program &program) {
    if (!is_standard(program)) {
        throw std::invalid_argument(
            "deferred-measurement compilation requires a standardized program");
    }
    Compiler cc;
    Spaces spaces = derive_spaces(program);
    cc.circuit.n_qubits = static_cast<int>(spaces.all.size());
    std::vector<g::Measure> deferred;

    auto defer = [&](Qubit q) {
        int cl = cc.alloc_clbit(q);
        deferred.push_back(g::Measure{q, cl});
        return cl;
    };

    for (const Command &command : program.commands) {
        std::visit(
            [&](const auto &c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, cmd::Prep>) {
                    cc.push(g::H{c.qubit});
                } else if constexpr (std::is_same_v<T, cmd::Input>) {
                } else if constexpr (std::is_same_v<T, cmd::Entangle>) {
                    cc.push(g::CZ{c.q1, c.q2});
                } else if constexpr (std::is_same_v<T, cmd::Measure>) {
                    // The source qubit's own rotation has already been laid
                    // down (standard order), so its computational basis holds
                    // the would-be outcome and quantum controls stand in for
                    // the classical ones.
                    for (Qubit s : c.signal_s.domain()) {
                        cc.push(g::CX{s, c.qubit});
                    }
                    for (Qubit t : c.signal_t.domain()) {
                        cc.push(g::CZ{t, c.qubit});
                    }
                    if (std::abs(c.angle.radians()) > kElideTol) {
                        cc.push(g::RZ{-c.angle.radians(), c.qubit});
                    }
                    cc.push(g::H{c.qubit});
                    defer(c.qubit);
                } else if constexpr (std::is_same_v<T, cmd::XCorrect>) {
                    for (Qubit s : c.signal.domain()) {
                        cc.push(g::CX{s, c.qubit});
                    }
                } else if constexpr (std::is_same_v<T, cmd::ZCorrect>) {
                    for (Qubit s : c.signal.domain()) {
                        cc.push(g::CZ{s, c.qubit});
                    }
                } else if constexpr (std::is_same_v<T, cmd::ReadOut>) {
                    cc.emit_basis_change(c.qubit, c.basis);
                    int cl = defer(c.qubit);
                    cc.circuit.readout_clbits[c.qubit] = cl;
                } else {
                    throw std::invalid_argument(
                        "compilation expects a desugared program (no J/CZ)");
                }
            },
            command);
    }
    for (const g::Measure &m : deferred) {
        cc.push(m);
    }
    return cc.circuit;
}

namespace {

std::string fmt_angle(double v) {
    std::ostringstream os;
    os.precision(15);
    os << v;
    return os.str();
}

std::string creg_name(const GateCircuit &circuit, int clbit) {
    return "c" + std::to_string(circuit.clbit_qubit.at(clbit));
}

}  // namespace

std::string emit_qasm(const GateCircuit &circuit) {
    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "include \"qelib1.inc\";\n";
    os << "qreg q[" << circuit.n_qubits << "];\n";
    for (const auto &[clbit, qubit] : circuit.clbit_qubit) {
        os << "creg c" << qubit << "[1];\n";
    }
    for (const Gate &gate : circuit.gates) {
        std::visit(
            [&](const auto &op) {
                using T = std::decay_t<decltype(op)>;
                if constexpr (std::is_same_v<T, g::H>) {
                    os << "h q[" << op.q << "];\n";
                } else if constexpr (std::is_same_v<T, g::X>) {
                    os << "x q[" << op.q << "];\n";
                } else if constexpr (std::is_same_v<T, g::Z>) {
                    os << "z q[" << op.q << "];\n";
                } else if constexpr (std::is_same_v<T, g::RZ>) {
                    os << "rz(" << fmt_angle(op.theta) << ") q[" << op.q << "];\n";
                } else if constexpr (std::is_same_v<T, g::RY>) {
                    os << "ry(" << fmt_angle(op.theta) << ") q[" << op.q << "];\n";
                } else if constexpr (std::is_same_v<T, g::CX>) {
                    os << "cx q[" << op.control << "],q[" << op.target << "];\n";
                } else if constexpr (std::is_same_v<T, g::CZ>) {
                    os << "cz q[" << op.a << "],q[" << op.b << "];\n";
                } else if constexpr (std::is_same_v<T, g::Measure>) {
                    os << "measure q[" << op.q << "] -> "
                       << creg_name(circuit, op.clbit) << "[0];\n";
                } else if constexpr (std::is_same_v<T, g::CondX>) {
                    os << "if (" << creg_name(circuit, op.clbit) << "==1) x q["
                       << op.q << "];\n";
                } else if constexpr (std::is_same_v<T, g::CondZ>) {
                    os << "if (" << creg_name(circuit, op.clbit) << "==1) z q["
                       << op.q << "];\n";
                }
            },
            gate);
    }
    return os.str();
}

std::string to_json(const GateCircuit &circuit) {
    using nlohmann::json;
    json gates = json::array();
    for (const Gate &gate : circuit.gates) {
        std::visit(
            [&](const auto &op) {
                using T = std::decay_t<decltype(op)>;
                if constexpr (std::is_same_v<T, g::H>) {
                    gates.push_back({{"H", {{"q", op.q}}}});
                } else if constexpr (std::is_same_v<T, g::X>) {
                    gates.push_back({{"X", {{"q", op.q}}}});
                } else if constexpr (std::is_same_v<T, g::Z>) {
                    gates.push_back({{"Z", {{"q", op.q}}}});
                } else if constexpr (std::is_same_v<T, g::RZ>) {
                    gates.push_back({{"RZ", {{"theta", op.theta}, {"q", op.q}}}});
                } else if constexpr (std::is_same_v<T, g::RY>) {
                    gates.push_back({{"RY", {{"theta", op.theta}, {"q", op.q}}}});
                } else if constexpr (std::is_same_v<T, g::CX>) {
                    gates.push_back({{"CX", {{"control", op.control}, {"target", op.target}}}});
                } else if constexpr (std::is_same_v<T, g::CZ>) {
                    gates.push_back({{"CZ", {{"a", op.a}, {"b", op.b}}}});
                } else if constexpr (std::is_same_v<T, g::Measure>) {
                    gates.push_back({{"MEASURE", {{"q", op.q}, {"clbit", op.clbit}}}});
                } else if constexpr (std::is_same_v<T, g::CondX>) {
                    gates.push_back({{"CONDX", {{"clbit", op.clbit}, {"q", op.q}}}});
                } else if constexpr (std::is_same_v<T, g::CondZ>) {
                    gates.push_back({{"CONDZ", {{"clbit", op.clbit}, {"q", op.q}}}});
                }
            },
            gate);
    }
    json out = {{"n_qubits", circuit.n_qubits},
                {"n_clbits", circuit.n_clbits},
                {"gates", gates},
                {"readout_clbits", json::object()}};
    for (const auto &[q, cl] : circuit.readout_clbits) {
        out["readout_clbits"][std::to_string(q)] = cl;
    }
    return out.dump(2);
}

namespace {

struct GateState {
    kernel::StateVector state;
    std::vector<int> clbits;
};

// Collapses qubit q onto |b> in place without removing it; returns the
// branch weight of that outcome.
double collapse_in_place(kernel::StateVector &state, int q, int b) {
    size_t stride = size_t{1} << (state.n - 1 - q);
    double weight = 0.0;
    for (size_t index = 0; index < state.amps.size(); ++index) {
        bool bit = (index & stride) != 0;
        if (bit == (b == 1)) {
            weight += std::norm(state.amps[index]);
        } else {
            state.amps[index] = 0.0;
        }
    }
    return weight;
}

void apply_unitary_gate(kernel::StateVector &state, const Gate &gate,
                        const std::vector<int> &clbits) {
    std::visit(
        [&](const auto &op) {
            using T = std::decay_t<decltype(op)>;
            if constexpr (std::is_same_v<T, g::H>) {
                kernel::gate_apply_1q(state, kHadamard, op.q);
            } else if constexpr (std::is_same_v<T, g::X>) {
                kernel::pauli_apply(state, kernel::Pauli::X, op.q);
            } else if constexpr (std::is_same_v<T, g::Z>) {
                kernel::pauli_apply(state, kernel::Pauli::Z, op.q);
            } else if constexpr (std::is_same_v<T, g::RZ>) {
                kernel::gate_apply_1q(state, rz_matrix(op.theta), op.q);
            } else if constexpr (std::is_same_v<T, g::RY>) {
                kernel::gate_apply_1q(state, ry_matrix(op.theta), op.q);
            } else if constexpr (std::is_same_v<T, g::CX>) {
                // CX = (I x H) CZ (I x H) on (control, target).
                kernel::gate_apply_1q(state, kHadamard, op.target);
                kernel::cz_apply(state, op.control, op.target);
                kernel::gate_apply_1q(state, kHadamard, op.target);
            } else if constexpr (std::is_same_v<T, g::CZ>) {
                kernel::cz_apply(state, op.a, op.b);
            } else if constexpr (std::is_same_v<T, g::CondX>) {
                if (clbits[op.clbit] == 1) {
                    kernel::pauli_apply(state, kernel::Pauli::X, op.q);
                }
            } else if constexpr (std::is_same_v<T, g::CondZ>) {
                if (clbits[op.clbit] == 1) {
                    kernel::pauli_apply(state, kernel::Pauli::Z, op.q);
                }
            } else {
                throw std::logic_error("measure handled by the caller");
            }
        },
        gate);
}

std::string readout_key(const GateCircuit &circuit, const std::vector<int> &clbits) {
    std::string bits;
    for (const auto &[q, cl] : circuit.readout_clbits) {  // ascending qubit
        bits += clbits[cl] ? '1' : '0';
    }
    return bits;
}

void explore_exact(const GateCircuit &circuit, GateState branch, size_t at,
                   std::map<std::string, double> &dist) {
    for (size_t i = at; i < circuit.gates.size(); ++i) {
        if (const auto *m = std::get_if<g::Measure>(&circuit.gates[i])) {
            GateState other = branch;
            double w0 = collapse_in_place(branch.state, m->q, 0);
            double w1 = collapse_in_place(other.state, m->q, 1);
            branch.clbits[m->clbit] = 0;
            other.clbits[m->clbit] = 1;
            if (w0 > 1e-14) {
                explore_exact(circuit, std::move(branch), i + 1, dist);
            }
            if (w1 > 1e-14) {
                explore_exact(circuit, std::move(other), i + 1, dist);
            }
            return;
        }
        apply_unitary_gate(branch.state, circuit.gates[i], branch.clbits);
    }
    double weight = branch.state.norm2();
    if (weight > 1e-14 && !circuit.readout_clbits.empty()) {
        dist[readout_key(circuit, branch.clbits)] += weight;
    }
}

GateState initial_state(const GateCircuit &circuit,
                        const std::vector<Gate> &pre_circuit) {
    GateState gs;
    gs.state = kernel::StateVector::zero_state(circuit.n_qubits);
    gs.clbits.assign(circuit.n_clbits, 0);
    for (const Gate &gate : pre_circuit) {
        apply_unitary_gate(gs.state, gate, gs.clbits);
    }
    return gs;
}

}  // namespace

std::map<std::string, double> gate_simulate(const GateCircuit &circuit,
                                            const std::vector<Gate> &pre_circuit,
                                            ShotsMode mode) {
    std::map<std::string, double> freq;
    for (int shot = 0; shot < mode.shots; ++shot) {
        sim::Rng rng = sim::rng_stream(mode.seed, static_cast<uint64_t>(shot));
        GateState gs = initial_state(circuit, pre_circuit);
        for (const Gate &gate : circuit.gates) {
            if (const auto *m = std::get_if<g::Measure>(&gate)) {
                kernel::StateVector probe = gs.state;
                double w0 = collapse_in_place(probe, m->q, 0);
                std::uniform_real_distribution<double> unit(0.0, 1.0);
                int b = unit(rng) < w0 ? 0 : 1;
                collapse_in_place(gs.state, m->q, b);
                gs.state.renormalize();
                gs.clbits[m->clbit] = b;
            } else {
                apply_unitary_gate(gs.state, gate, gs.clbits);
            }
        }
        if (!circuit.readout_clbits.empty()) {
            freq[readout_key(circuit, gs.clbits)] += 1.0;
        }
    }
    for (auto &[bits, count] : freq) {
        count /= mode.shots;
    }
    return freq;
}

std::map<std::string, double> gate_simulate(const GateCircuit &circuit,
                                            const std::vector<Gate> &pre_circuit,
                                            ExactMode mode) {
    int measures = 0;
    for (const Gate &gate : circuit.gates) {
        if (std::holds_alternative<g::Measure>(gate)) {
            ++measures;
        }
    }
    if (measures > mode.branch_budget) {
        throw std::runtime_error("gate simulation branch budget exceeded");
    }
    std::map<std::string, double> dist;
    explore_exact(circuit, initial_state(circuit, pre_circuit), 0, dist);
    return dist;
}

std::array<double, 3> decompose_unitary_1q(const std::array<Complex, 4> &u) {
    // Unitarity check: U U^dagger = I within 1e-9.
    Complex r00 = u[0] * std::conj(u[0]) + u[1] * std::conj(u[1]);
    Complex r01 = u[0] * std::conj(u[2]) + u[1] * std::conj(u[3]);
    Complex r11 = u[2] * std::conj(u[2]) + u[3] * std::conj(u[3]);
    if (std::abs(r00 - 1.0) > 1e-9 || std::abs(r11 - 1.0) > 1e-9 ||
        std::abs(r01) > 1e-9) {
        throw std::invalid_argument("decompose_unitary_1q: input is not unitary");
    }

    std::array<Complex, 4> v = u;
    if (std::abs(v[0]) > 1e-12) {
        Complex phase = std::conj(v[0] / std::abs(v[0]));
        for (Complex &e : v) e *= phase;
    } else {
        Complex phase = std::conj(v[2] / std::abs(v[2]));
        for (Complex &e : v) e *= phase;
    }

    double theta2 = 2.0 * std::atan2(std::abs(v[2]), std::abs(v[0]));
    double theta1;
    double theta3;
    if (std::abs(v[2]) < 1e-12) {
        theta1 = 0.0;
        theta3 = std::arg(v[3]);
    } else if (std::abs(v[0]) < 1e-12) {
        theta1 = std::arg(v[2]);
        theta3 = std::arg(-v[1]);
    } else {
        theta1 = std::arg(v[2]);
        theta3 = std::arg(-v[1]);
    }
    return {theta1, theta2, theta3};
}

}  // namespace mcbeth::gates
