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
 * Builders for the bundled example programs: teleportation, the basic
 * cluster conversions, Deutsch-Jozsa, and 2-bit Grover search.
 */

#pragma once

#include <string>

#include "mcbeth/ir.hpp"

namespace mcbeth::corpus {

/// Teleports the state of qubit 0 to qubit 2 through two J(0) hops.
Program teleport_program();

/// The five basic cluster conversions, relabelled to 0-based qubits.
/// Single-input variants use qubit 0 as input; two-input variants use 0, 1.
struct ClusterSpec {
    enum class Variant { Linear3, Linear4, Horseshoe, ReverseHorseshoe, Box };
    Variant variant;
    Angle alpha;
    Angle beta;
    Angle gamma;  // Linear4 only
};

Program cluster_program(const ClusterSpec &spec);

enum class Oracle { Balanced, Constant };

/// Deutsch-Jozsa for an n-bit input register (n >= 2). Produces a
/// deterministic read-out that differs between the two oracle classes.
Program deutsch_jozsa(int n, Oracle oracle);

enum class GroverVariant { FourQubit, SixQubit };

/// 2-bit Grover search for the given bitstring ("00".."11"). The four-qubit
/// variant reads out at angle pi; the six-qubit variant adds a second J
/// layer and reads out in the computational basis.
Program grover2(const std::string &oracle_bits, GroverVariant variant);

}  // namespace mcbeth::corpus
