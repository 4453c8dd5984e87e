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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mcbeth/corpus.hpp"
#include "mcbeth/distributed.hpp"
#include "mcbeth/gates.hpp"
#include "mcbeth/ir.hpp"
#include "mcbeth/rewrite.hpp"
#include "mcbeth/simulator.hpp"

namespace py = pybind11;
using namespace mcbeth;

namespace {

Program load(const std::string &src) {
    for (char c : src) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '[' || c == '{') return from_json(src);
        break;
    }
    return parse_text(src);
}

sim::InputAssignment to_inputs(
    const std::map<Qubit, std::pair<Complex, Complex>> &raw) {
    sim::InputAssignment inputs;
    for (const auto &[q, ket] : raw) {
        inputs[q] = kernel::Ket{ket.first, ket.second};
    }
    return inputs;
}

}  // namespace

PYBIND11_MODULE(mcbeth, m) {
    m.doc() = "measurement-calculus toolchain";

    m.def("validate", [](const std::string &src) {
        ValidationReport report = validate(load(src));
        py::list out;
        for (const Violation &v : report.violations) {
            out.append(py::make_tuple(v.constraint, v.command_index, v.message));
        }
        return out;
    }, py::arg("program"),
       "Well-formedness violations as (constraint, command_index, message) "
       "tuples; empty means valid. Accepts program text or JSON.");

    m.def("standardize", [](const std::string &src) {
        return print_text(standardize(load(src)).first);
    }, py::arg("program"));

    m.def("desugar", [](const std::string &src) {
        return print_text(desugar(load(src)));
    }, py::arg("program"));

    m.def("to_json", [](const std::string &src) { return to_json(load(src)); },
          py::arg("program"));

    m.def("weak_simulate",
          [](const std::string &src,
             const std::map<Qubit, std::pair<Complex, Complex>> &inputs,
             uint64_t seed) {
              sim::WeakResult result =
                  sim::weak_simulate(load(src), to_inputs(inputs), seed);
              py::dict out;
              out["bits"] = result.readout_bits();
              out["readouts"] = result.readouts;
              out["order"] = result.order;
              out["state"] = result.state.amps;
              return out;
          },
          py::arg("program"),
          py::arg("inputs") = std::map<Qubit, std::pair<Complex, Complex>>{},
          py::arg("seed") = 0);

    m.def("strong_simulate",
          [](const std::string &src,
             const std::map<Qubit, std::pair<Complex, Complex>> &inputs) {
              sim::StrongResult result =
                  sim::strong_simulate(load(src), to_inputs(inputs));
              py::dict out;
              out["distribution"] = result.readout_dist;
              out["order"] = result.order;
              size_t dim = size_t{1} << result.density.n;
              py::list density;
              for (size_t r = 0; r < dim; ++r) {
                  py::list row;
                  for (size_t c = 0; c < dim; ++c) {
                      row.append(result.density.at(r, c));
                  }
                  density.append(row);
              }
              out["density"] = density;
              return out;
          },
          py::arg("program"),
          py::arg("inputs") = std::map<Qubit, std::pair<Complex, Complex>>{});

    m.def("empirical_distribution",
          [](const std::string &src, int shots, uint64_t seed) {
              return sim::empirical_distribution(load(src), {}, shots, seed);
          },
          py::arg("program"), py::arg("shots"), py::arg("seed") = 0);

    m.def("compile_qasm",
          [](const std::string &src, const std::string &mode) {
              Program program = load(src);
              gates::GateCircuit circuit =
                  mode == "deferred"
                      ? gates::compile_deferred(standardize(program).first)
                      : gates::compile_classical_ctrl(desugar(program));
              return gates::emit_qasm(circuit);
          },
          py::arg("program"), py::arg("mode") = "cc");

    py::module_ corpus_mod = m.def_submodule("corpus", "bundled example programs");
    corpus_mod.def("teleport",
                   [] { return print_text(mcbeth::corpus::teleport_program()); });
    corpus_mod.def("deutsch_jozsa", [](int n, const std::string &oracle) {
        return print_text(mcbeth::corpus::deutsch_jozsa(
            n, oracle == "constant" ? mcbeth::corpus::Oracle::Constant
                                    : mcbeth::corpus::Oracle::Balanced));
    }, py::arg("n") = 2, py::arg("oracle") = "balanced");
    corpus_mod.def("grover2", [](const std::string &bits, const std::string &variant) {
        return print_text(mcbeth::corpus::grover2(
            bits, variant == "six" ? mcbeth::corpus::GroverVariant::SixQubit
                                   : mcbeth::corpus::GroverVariant::FourQubit));
    }, py::arg("oracle"), py::arg("variant") = "four");
}
