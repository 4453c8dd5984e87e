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
 * Desugaring of the high-level J/CZ commands and standardization via the
 * nine rewrite rules, producing the command order
 * preparations -> entanglement -> measurements -> corrections.
 */

#pragma once

#include "mcbeth/ir.hpp"

namespace mcbeth {

struct RewriteStep {
    int rule;   // 1..9
    int index;  // command index the rule fired at
};

struct RewriteTrace {
    std::vector<RewriteStep> steps;
};

/// Expands J(a, i, j) into [Entangle(i, j); Measure(i, -a); XCorrect(j, {i})]
/// and CZ(i, j) into Entangle(i, j). The result contains only primitive
/// commands.
Program desugar(const Program &program);

/// Rewrites a valid program to standard form. Desugars first; ReadOut
/// commands do not participate and are re-appended after the corrections.
/// Throws std::runtime_error if no fixpoint is reached within
/// 10 * (command count)^2 steps.
std::pair<Program, RewriteTrace> standardize(const Program &program);

/// True iff command kinds appear in the order declarations, Entangle,
/// Measure, corrections, ReadOut. Expects a desugared program.
bool is_standard(const Program &program);

}  // namespace mcbeth
