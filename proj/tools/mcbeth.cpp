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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcbeth/corpus.hpp"
#include "mcbeth/distributed.hpp"
#include "mcbeth/gates.hpp"
#include "mcbeth/ir.hpp"
#include "mcbeth/rewrite.hpp"
#include "mcbeth/simulator.hpp"

namespace {

using nlohmann::json;
using namespace mcbeth;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string &path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool looks_like_json(const std::string &path, const std::string &text) {
    if (path.size() >= 5 && path.ends_with(".json")) return true;
    if (path.size() >= 4 && path.ends_with(".mcb")) return false;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '[' || c == '{';
    }
    return false;
}

Program load_program(const std::string &path) {
    std::string text = slurp(path);
    if (looks_like_json(path, text)) {
        return from_json(text);
    }
    return parse_text(text);
}

uint64_t default_seed() {
    if (const char *env = std::getenv("MCBETH_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 0;
}

sim::InputAssignment load_inputs(const std::string &path) {
    sim::InputAssignment inputs;
    if (path.empty()) {
        return inputs;
    }
    json j = json::parse(slurp(path));
    for (auto &[key, value] : j.items()) {
        Qubit q = std::stoi(key);
        inputs[q] = kernel::Ket{
            Complex(value.at(0).at(0).get<double>(), value.at(0).at(1).get<double>()),
            Complex(value.at(1).at(0).get<double>(), value.at(1).at(1).get<double>())};
    }
    return inputs;
}

int report_invalid(const ValidationReport &report) {
    for (const Violation &v : report.violations) {
        std::cerr << "constraint " << v.constraint << " violated at command "
                  << v.command_index << ": " << v.message << "\n";
    }
    return 1;
}

void print_histogram(const std::map<std::string, double> &dist) {
    size_t width = 0;
    for (const auto &[bits, p] : dist) {
        width = std::max(width, bits.size());
    }
    for (const auto &[bits, p] : dist) {
        int bar = static_cast<int>(p * 40.0 + 0.5);
        std::cout << bits << std::string(width - bits.size() + 2, ' ');
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%8.4f  ", p);
        std::cout << buf << std::string(bar, '#') << "\n";
    }
}

json state_json(const kernel::StateVector &state, const sim::QubitOrder &order) {
    json amps = json::array();
    for (const Complex &a : state.amps) {
        amps.push_back({a.real(), a.imag()});
    }
    return {{"order", order}, {"amplitudes", amps}};
}

int cmd_validate(const std::string &file) {
    Program program = load_program(file);
    ValidationReport report = validate(program);
    if (!report.ok) {
        return report_invalid(report);
    }
    std::cout << "ok\n";
    return 0;
}

int cmd_standardize(const std::string &file, bool trace) {
    Program program = load_program(file);
    ValidationReport report = validate(program);
    if (!report.ok) {
        return report_invalid(report);
    }
    auto [standard, rewrites] = standardize(program);
    if (trace) {
        for (const RewriteStep &step : rewrites.steps) {
            std::cerr << "rule " << step.rule << " at " << step.index << "\n";
        }
    }
    std::cout << print_text(standard);
    return 0;
}

int cmd_simulate(const std::string &file, const std::string &mode, int shots,
                 uint64_t seed, const std::string &inputs_path) {
    Program program = load_program(file);
    ValidationReport report = validate(program);
    if (!report.ok) {
        return report_invalid(report);
    }
    sim::InputAssignment inputs = load_inputs(inputs_path);

    if (mode == "weak" && shots <= 1) {
        sim::WeakResult result = sim::weak_simulate(program, inputs, seed);
        json readouts = json::object();
        for (const auto &[q, b] : result.readouts) {
            readouts[std::to_string(q)] = b;
        }
        json out = {{"mode", "weak"},
                    {"seed", seed},
                    {"readouts", readouts},
                    {"bits", result.readout_bits()},
                    {"state", state_json(result.state, result.order)}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::map<std::string, double> dist;
    json out;
    if (mode == "weak") {
        dist = sim::empirical_distribution(program, inputs, shots, seed);
        out = {{"mode", "weak"}, {"shots", shots}, {"seed", seed}};
    } else if (mode == "strong") {
        sim::StrongResult result = sim::strong_simulate(program, inputs);
        dist = result.readout_dist;
        json density = json::array();
        size_t dim = size_t{1} << result.density.n;
        for (size_t r = 0; r < dim; ++r) {
            json row = json::array();
            for (size_t c = 0; c < dim; ++c) {
                Complex e = result.density.at(r, c);
                row.push_back({e.real(), e.imag()});
            }
            density.push_back(row);
        }
        out = {{"mode", "strong"},
               {"order", result.order},
               {"density", density}};
    } else {
        throw UsageError("unknown simulation mode: " + mode);
    }
    json jdist = json::object();
    for (const auto &[bits, p] : dist) {
        jdist[bits] = p;
    }
    out["distribution"] = jdist;
    std::cout << out.dump(2) << "\n";
    if (!dist.empty()) {
        print_histogram(dist);
    }
    return 0;
}

int cmd_compile(const std::string &file, const std::string &mode,
                const std::string &format, const std::string &pre_circuit_path) {
    Program program = load_program(file);
    ValidationReport report = validate(program);
    if (!report.ok) {
        return report_invalid(report);
    }
    gates::GateCircuit circuit;
    if (mode == "cc") {
        circuit = gates::compile_classical_ctrl(desugar(program));
    } else if (mode == "deferred") {
        circuit = gates::compile_deferred(standardize(program).first);
    } else {
        throw UsageError("unknown compilation mode: " + mode);
    }
    if (format == "qasm") {
        std::string qasm = gates::emit_qasm(circuit);
        if (!pre_circuit_path.empty()) {
            // Splice user-supplied preparation lines in after the registers.
            std::string prep = slurp(pre_circuit_path);
            size_t last_creg = qasm.rfind("creg ");
            size_t insert_at = qasm.find('\n', last_creg) + 1;
            qasm.insert(insert_at, prep);
        }
        std::cout << qasm;
    } else if (format == "json") {
        std::cout << gates::to_json(circuit) << "\n";
    } else {
        throw UsageError("unknown output format: " + format);
    }
    return 0;
}

int cmd_distribute(const std::string &file, const std::string &plan_path,
                   bool strict, const std::string &report_path, uint64_t seed) {
    Program program = load_program(file);
    ValidationReport vreport = validate(program);
    if (!vreport.ok) {
        return report_invalid(vreport);
    }
    dist::PartitionPlan plan;
    json jplan = json::parse(slurp(plan_path));
    for (const json &group : jplan) {
        std::set<Qubit> qs;
        for (const json &q : group) {
            qs.insert(q.get<Qubit>());
        }
        plan.groups.push_back(std::move(qs));
    }

    Program standard = standardize(program).first;
    dist::DistProgram dprog = dist::build_dist_prog(standard, plan);
    dist::DistOptions options;
    options.strict = strict;
    dist::DistResult result = dist::run_distributed(dprog, {}, seed, options);

    json nodes = json::array();
    for (const dist::NodeResult &nr : result.nodes) {
        json readouts = json::object();
        for (const auto &[q, b] : nr.readouts) {
            readouts[std::to_string(q)] = b;
        }
        nodes.push_back({{"node", nr.node},
                         {"readouts", readouts},
                         {"wall_clock_seconds", nr.wall_clock_seconds}});
    }
    json readouts = json::object();
    for (const auto &[q, b] : result.readouts) {
        readouts[std::to_string(q)] = b;
    }
    json out = {{"nodes", nodes},
                {"readouts", readouts},
                {"bits", result.readout_bits()},
                {"sequential_fallback", result.sequential_fallback},
                {"wall_clock_seconds", result.wall_clock_seconds}};
    std::cout << out.dump(2) << "\n";

    if (!report_path.empty()) {
        std::ofstream csv(report_path);
        csv << "node,wall_clock_seconds\n";
        for (const dist::NodeResult &nr : result.nodes) {
            csv << nr.node << ',' << nr.wall_clock_seconds << "\n";
        }
    }
    return 0;
}

int cmd_examples(const std::string &name, const std::string &variant,
                 const std::string &oracle, int n, double alpha, double beta,
                 double gamma, const std::string &format) {
    Program program;
    if (name == "teleport") {
        program = corpus::teleport_program();
    } else if (name == "cluster") {
        corpus::ClusterSpec spec;
        spec.alpha = Angle(alpha);
        spec.beta = Angle(beta);
        spec.gamma = Angle(gamma);
        if (variant == "linear3") {
            spec.variant = corpus::ClusterSpec::Variant::Linear3;
        } else if (variant == "linear4") {
            spec.variant = corpus::ClusterSpec::Variant::Linear4;
        } else if (variant == "horseshoe") {
            spec.variant = corpus::ClusterSpec::Variant::Horseshoe;
        } else if (variant == "reverse-horseshoe") {
            spec.variant = corpus::ClusterSpec::Variant::ReverseHorseshoe;
        } else if (variant == "box") {
            spec.variant = corpus::ClusterSpec::Variant::Box;
        } else {
            throw UsageError("unknown cluster variant: " + variant);
        }
        program = corpus::cluster_program(spec);
    } else if (name == "dj") {
        corpus::Oracle o;
        if (oracle == "balanced") {
            o = corpus::Oracle::Balanced;
        } else if (oracle == "constant") {
            o = corpus::Oracle::Constant;
        } else {
            throw UsageError("dj oracle must be balanced or constant");
        }
        program = corpus::deutsch_jozsa(n, o);
    } else if (name == "grover2") {
        corpus::GroverVariant v;
        if (variant == "four" || variant.empty()) {
            v = corpus::GroverVariant::FourQubit;
        } else if (variant == "six") {
            v = corpus::GroverVariant::SixQubit;
        } else {
            throw UsageError("grover2 variant must be four or six");
        }
        program = corpus::grover2(oracle, v);
    } else {
        throw UsageError("unknown example: " + name);
    }
    if (format == "json") {
        std::cout << to_json(program) << "\n";
    } else {
        std::cout << print_text(program);
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"measurement-calculus toolchain"};
    app.require_subcommand(1);

    std::string file;
    std::string mode = "weak";
    std::string compile_mode = "cc";
    std::string format = "qasm";
    std::string examples_format = "text";
    std::string inputs_path;
    std::string pre_circuit_path;
    std::string plan_path;
    std::string report_path;
    std::string name;
    std::string variant;
    std::string oracle;
    bool trace = false;
    bool strict = false;
    int shots = 1;
    int n = 2;
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
    uint64_t seed = default_seed();

    CLI::App *validate_cmd = app.add_subcommand("validate", "check well-formedness");
    validate_cmd->add_option("file", file)->required();

    CLI::App *standardize_cmd =
        app.add_subcommand("standardize", "rewrite to standard form");
    standardize_cmd->add_option("file", file)->required();
    standardize_cmd->add_flag("--trace", trace, "print rewrite steps to stderr");

    CLI::App *simulate_cmd = app.add_subcommand("simulate", "run a program");
    simulate_cmd->add_option("file", file)->required();
    simulate_cmd->add_option("--mode", mode)->check(CLI::IsMember({"weak", "strong"}));
    simulate_cmd->add_option("--shots", shots);
    simulate_cmd->add_option("--seed", seed);
    simulate_cmd->add_option("--inputs", inputs_path);

    CLI::App *compile_cmd = app.add_subcommand("compile", "emit a gate circuit");
    compile_cmd->add_option("file", file)->required();
    compile_cmd->add_option("--mode", compile_mode)
        ->check(CLI::IsMember({"cc", "deferred"}));
    compile_cmd->add_option("--format", format)->check(CLI::IsMember({"qasm", "json"}));
    compile_cmd->add_option("--pre-circuit", pre_circuit_path,
                            "QASM lines spliced in after the registers");

    CLI::App *distribute_cmd =
        app.add_subcommand("distribute", "partitioned concurrent run");
    distribute_cmd->add_option("file", file)->required();
    distribute_cmd->add_option("--plan", plan_path)->required();
    distribute_cmd->add_flag("--strict", strict);
    distribute_cmd->add_option("--report", report_path, "per-node timing CSV");
    distribute_cmd->add_option("--seed", seed);

    CLI::App *examples_cmd = app.add_subcommand("examples", "emit a bundled program");
    examples_cmd->add_option("name", name)->required();
    examples_cmd->add_option("--variant", variant);
    examples_cmd->add_option("--oracle", oracle);
    examples_cmd->add_option("--n", n);
    examples_cmd->add_option("--alpha", alpha);
    examples_cmd->add_option("--beta", beta);
    examples_cmd->add_option("--gamma", gamma);
    examples_cmd->add_option("--format", examples_format)
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {  // --help
            return app.exit(e);
        }
        app.exit(e);
        return 2;
    }

    try {
        if (*validate_cmd) return cmd_validate(file);
        if (*standardize_cmd) return cmd_standardize(file, trace);
        if (*simulate_cmd) return cmd_simulate(file, mode, shots, seed, inputs_path);
        if (*compile_cmd)
            return cmd_compile(file, compile_mode, format, pre_circuit_path);
        if (*distribute_cmd)
            return cmd_distribute(file, plan_path, strict, report_path, seed);
        if (*examples_cmd)
            return cmd_examples(name, variant, oracle, n, alpha, beta, gamma,
                                examples_format);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError &e) {
        std::cerr << "parse error at line " << e.line << ", column " << e.column
                  << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
