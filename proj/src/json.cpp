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

// JSON serialization: a program is an array of single-key objects keyed by
// command name, e.g. {"Entangle": {"on_qubits": [0, 1]}}.

#include <json.hpp>

#include "mcbeth/ir.hpp"

namespace mcbeth {

namespace {

using nlohmann::json;

json signal_json(const Signal &signal) {
    return json(signal.sorted());
}

json basis_json(const Basis &basis) {
    switch (basis.kind) {
    case Basis::Kind::X: return "X";
    case Basis::Kind::Y: return "Y";
    case Basis::Kind::Z: return "Z";
    case Basis::Kind::FromAngle:
        return json{{"from_angle", basis.angle.radians()}};
    case Basis::Kind::FromTuples:
        return json{{"from_tuples",
                     {{basis.v0[0].real(), basis.v0[0].imag()},
                      {basis.v0[1].real(), basis.v0[1].imag()},
                      {basis.v1[0].real(), basis.v1[0].imag()},
                      {basis.v1[1].real(), basis.v1[1].imag()}}}};
    }
    return "Z";
}

json command_json(const Command &command) {
    return std::visit(
        [](const auto &c) -> json {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, cmd::Input>) {
                return {{"Input", {{"qubit", c.qubit}}}};
            } else if constexpr (std::is_same_v<T, cmd::Prep>) {
                return {{"Prep", {{"qubit", c.qubit}}}};
            } else if constexpr (std::is_same_v<T, cmd::Entangle>) {
                return {{"Entangle", {{"on_qubits", {c.q1, c.q2}}}}};
            } else if constexpr (std::is_same_v<T, cmd::CZ>) {
                return {{"CZ", {{"on_qubits", {c.q1, c.q2}}}}};
            } else if constexpr (std::is_same_v<T, cmd::J>) {
                return {{"J", {{"angle", c.angle.radians()},
                               {"on_qubits", {c.q1, c.q2}}}}};
            } else if constexpr (std::is_same_v<T, cmd::Measure>) {
                return {{"Measure", {{"qubit", c.qubit},
                                     {"angle", c.angle.radians()},
                                     {"signal_s", signal_json(c.signal_s)},
                                     {"signal_t", signal_json(c.signal_t)}}}};
            } else if constexpr (std::is_same_v<T, cmd::XCorrect>) {
                return {{"XCorrect", {{"qubit", c.qubit},
                                      {"signal", signal_json(c.signal)}}}};
            } else if constexpr (std::is_same_v<T, cmd::ZCorrect>) {
                return {{"ZCorrect", {{"qubit", c.qubit},
                                      {"signal", signal_json(c.signal)}}}};
            } else if constexpr (std::is_same_v<T, cmd::ReadOut>) {
                return {{"ReadOut", {{"qubit", c.qubit},
                                     {"basis", basis_json(c.basis)}}}};
            }
        },
        command);
}

[[noreturn]] void schema_error(const json &obj, const std::string &message) {
    throw std::runtime_error("schema error in " + obj.dump() + ": " + message);
}

std::vector<Qubit> qubit_vec(const json &arr) {
    std::vector<Qubit> qs;
    for (const auto &q : arr) {
        qs.push_back(q.get<Qubit>());
    }
    return qs;
}

Basis basis_from_json(const json &b) {
    if (b.is_string()) {
        std::string s = b.get<std::string>();
        if (s == "X") return Basis::x();
        if (s == "Y") return Basis::y();
        if (s == "Z") return Basis::z();
        schema_error(b, "unknown basis name");
    }
    if (b.contains("from_angle")) {
        return Basis::from_angle(Angle(b["from_angle"].get<double>()));
    }
    if (b.contains("from_tuples")) {
        const auto &t = b["from_tuples"];
        if (t.size() != 4) {
            schema_error(b, "from_tuples needs four [re, im] pairs");
        }
        Complex c[4];
        for (int i = 0; i < 4; ++i) {
            c[i] = {t[i][0].get<double>(), t[i][1].get<double>()};
        }
        return Basis::from_tuples(c[0], c[1], c[2], c[3]);
    }
    schema_error(b, "unknown basis object");
}

Command command_from_json(const json &obj, std::vector<Command> &extra) {
    if (!obj.is_object() || obj.size() != 1) {
        schema_error(obj, "expected a single-key command object");
    }
    const std::string name = obj.begin().key();
    const json &v = obj.begin().value();
    auto pair = [&](const char *field) -> std::pair<Qubit, Qubit> {
        const auto qs = qubit_vec(v.at(field));
        if (qs.size() != 2) {
            schema_error(obj, "expected two qubits");
        }
        return {qs[0], qs[1]};
    };
    if (name == "Input") return cmd::Input{v.at("qubit").get<Qubit>()};
    if (name == "Prep") return cmd::Prep{v.at("qubit").get<Qubit>()};
    if (name == "InputList" || name == "PrepList") {
        // List declarations are sugar; expand to scalar declarations.
        auto qs = qubit_vec(v.at("qubits"));
        if (qs.empty()) {
            schema_error(obj, "empty declaration list");
        }
        for (size_t i = 1; i < qs.size(); ++i) {
            if (name == "InputList") {
                extra.push_back(cmd::Input{qs[i]});
            } else {
                extra.push_back(cmd::Prep{qs[i]});
            }
        }
        if (name == "InputList") return cmd::Input{qs[0]};
        return cmd::Prep{qs[0]};
    }
    if (name == "Entangle") {
        auto [q1, q2] = pair("on_qubits");
        return cmd::Entangle{q1, q2};
    }
    if (name == "CZ") {
        auto [q1, q2] = pair("on_qubits");
        return cmd::CZ{q1, q2};
    }
    if (name == "J") {
        auto [q1, q2] = pair("on_qubits");
        return cmd::J{Angle(v.at("angle").get<double>()), q1, q2};
    }
    if (name == "Measure") {
        return cmd::Measure{v.at("qubit").get<Qubit>(),
                            Angle(v.at("angle").get<double>()),
                            Signal(qubit_vec(v.at("signal_s"))),
                            Signal(qubit_vec(v.at("signal_t")))};
    }
    if (name == "XCorrect") {
        return cmd::XCorrect{v.at("qubit").get<Qubit>(),
                             Signal(qubit_vec(v.at("signal")))};
    }
    if (name == "ZCorrect") {
        return cmd::ZCorrect{v.at("qubit").get<Qubit>(),
                             Signal(qubit_vec(v.at("signal")))};
    }
    if (name == "ReadOut") {
        return cmd::ReadOut{v.at("qubit").get<Qubit>(), basis_from_json(v.at("basis"))};
    }
    schema_error(obj, "unknown command '" + name + "'");
}

}  // namespace

std::string to_json(const Program &program) {
    json arr = json::array();
    for (const Command &command : program.commands) {
        arr.push_back(command_json(command));
    }
    return arr.dump();
}

Program from_json(const std::string &text) {
    json arr = json::parse(text);
    if (!arr.is_array()) {
        throw std::runtime_error("schema error: program must be a JSON array");
    }
    Program program;
    for (const auto &obj : arr) {
        std::vector<Command> extra;
        program.commands.push_back(command_from_json(obj, extra));
        for (auto &c : extra) {
            program.commands.push_back(std::move(c));
        }
    }
    return program;
}

}  // namespace mcbeth
