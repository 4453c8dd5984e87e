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

#include "mcbeth/rewrite.hpp"

#include <algorithm>

namespace mcbeth {

Program desugar(const Program &program) {
    Program out;
    for (const Command &command : program.commands) {
        if (const auto *j = std::get_if<cmd::J>(&command)) {
            out.commands.push_back(cmd::Entangle{j->q1, j->q2});
            out.commands.push_back(cmd::Measure{j->q1, -j->angle, {}, {}});
            out.commands.push_back(cmd::XCorrect{j->q2, Signal{j->q1}});
        } else if (const auto *cz = std::get_if<cmd::CZ>(&command)) {
            out.commands.push_back(cmd::Entangle{cz->q1, cz->q2});
        } else {
            out.commands.push_back(command);
        }
    }
    return out;
}

namespace {

enum class Kind { Decl, Entangle, Measure, Correct, ReadOut };

Kind kind_of(const Command &command) {
    if (is_declaration(command)) return Kind::Decl;
    if (std::holds_alternative<cmd::Entangle>(command)) return Kind::Entangle;
    if (std::holds_alternative<cmd::Measure>(command)) return Kind::Measure;
    if (std::holds_alternative<cmd::ReadOut>(command)) return Kind::ReadOut;
    return Kind::Correct;
}

bool disjoint(const Command &a, Qubit q1, Qubit q2) {
    for (Qubit q : targets(a)) {
        if (q == q1 || q == q2) {
            return false;
        }
    }
    return true;
}

// Drops corrections whose signal collapsed to the empty domain.
bool is_vacuous(const Command &command) {
    if (const auto *x = std::get_if<cmd::XCorrect>(&command)) {
        return x->signal.empty();
    }
    if (const auto *z = std::get_if<cmd::ZCorrect>(&command)) {
        return z->signal.empty();
    }
    return false;
}

// Tries the rules on the adjacent pair (cmds[k], cmds[k+1]). Returns the
// fired rule id, or 0. Interaction rules 1-6 take priority over the
// commutation rules 7-9.
int try_rules(std::vector<Command> &cmds, size_t k) {
    Command &a = cmds[k];
    Command &b = cmds[k + 1];

    if (const auto *e = std::get_if<cmd::Entangle>(&b)) {
        const Qubit i = e->q1;
        const Qubit j = e->q2;
        if (const auto *x = std::get_if<cmd::XCorrect>(&a)) {
            // Rules 1-2: X on an entangler endpoint crosses over, spawning a
            // Z correction on the opposite endpoint.
            if (x->qubit == i || x->qubit == j) {
                const int rule = x->qubit == i ? 1 : 2;
                const Qubit other = x->qubit == i ? j : i;
                const cmd::XCorrect xc = *x;
                a = *e;
                b = cmd::ZCorrect{other, xc.signal};
                cmds.insert(cmds.begin() + k + 2, xc);
                return rule;
            }
        }
        if (const auto *z = std::get_if<cmd::ZCorrect>(&a)) {
            // Rules 3-4: Z commutes with an entangler on its own qubit.
            if (z->qubit == i || z->qubit == j) {
                const int rule = z->qubit == i ? 3 : 4;
                std::swap(a, b);
                return rule;
            }
        }
        // Rule 7: anything else moves right past a disjoint entangler.
        if (kind_of(a) != Kind::Entangle && kind_of(a) != Kind::Decl &&
            disjoint(a, i, j)) {
            std::swap(a, b);
            return 7;
        }
    }

    if (auto *m = std::get_if<cmd::Measure>(&b)) {
        if (const auto *x = std::get_if<cmd::XCorrect>(&a)) {
            if (x->qubit == m->qubit) {
                // Rule 5: absorb the X into the sign signal.
                m->signal_s = m->signal_s + x->signal;
                cmds.erase(cmds.begin() + k);
                return 5;
            }
            if (x->qubit != m->qubit) {
                // Rule 8: corrections commute right past disjoint commands.
                std::swap(a, b);
                return 8;
            }
        }
        if (const auto *z = std::get_if<cmd::ZCorrect>(&a)) {
            if (z->qubit == m->qubit) {
                // Rule 6: absorb the Z into the pi-offset signal.
                m->signal_t = m->signal_t + z->signal;
                cmds.erase(cmds.begin() + k);
                return 6;
            }
            // Rule 9.
            std::swap(a, b);
            return 9;
        }
    }

    return 0;
}

}  // namespace

std::pair<Program, RewriteTrace> standardize(const Program &program) {
    Program desugared = desugar(program);

    std::vector<Command> cmds;
    std::vector<Command> readouts;
    for (Command &command : desugared.commands) {
        if (std::holds_alternative<cmd::ReadOut>(command)) {
            readouts.push_back(std::move(command));
        } else if (!is_vacuous(command)) {
            cmds.push_back(std::move(command));
        }
    }

    RewriteTrace trace;
    const size_t budget = 10 * cmds.size() * cmds.size() + 10;
    size_t steps = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k + 1 < cmds.size(); ++k) {
            int rule = try_rules(cmds, k);
            if (rule != 0) {
                trace.steps.push_back({rule, static_cast<int>(k)});
                if (++steps > budget) {
                    throw std::runtime_error(
                        "standardize: step budget exceeded (rewrite rules not "
                        "terminating)");
                }
                changed = true;
                break;
            }
        }
    }

    // Absorbed signals can cancel to the empty domain.
    std::erase_if(cmds, is_vacuous);

    Program out;
    out.commands = std::move(cmds);
    for (Command &command : readouts) {
        out.commands.push_back(std::move(command));
    }
    return {out, trace};
}

bool is_standard(const Program &program) {
    int rank = 0;
    for (const Command &command : program.commands) {
        int r = 0;
        switch (kind_of(command)) {
        case Kind::Decl: r = 0; break;
        case Kind::Entangle: r = 1; break;
        case Kind::Measure: r = 2; break;
        case Kind::Correct: r = 3; break;
        case Kind::ReadOut: r = 4; break;
        }
        if (r < rank) {
            return false;
        }
        rank = r;
    }
    return true;
}

}  // namespace mcbeth
