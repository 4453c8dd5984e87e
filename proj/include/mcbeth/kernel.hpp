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
 * Dense state-vector / density-matrix kernel. Operators are applied by
 * stride iteration over amplitudes; no 2^n x 2^n matrices are materialized.
 *
 * Bit convention: qubit position 0 is the most significant bit of the
 * amplitude index, so tensor order left-to-right matches ascending position.
 */

#pragma once

#include <array>
#include <vector>

#include "mcbeth/ir.hpp"

namespace mcbeth::kernel {

using Amplitude = Complex;
using Bra = std::array<Complex, 2>;
using Ket = std::array<Complex, 2>;

struct StateVector {
    std::vector<Amplitude> amps;
    int n = 0;

    static StateVector zero_state(int n);
    double norm2() const;
    void renormalize();
};

struct DensityMatrix {
    std::vector<Amplitude> entries;  // row-major, 2^n x 2^n
    int n = 0;

    Amplitude &at(size_t r, size_t c) { return entries[(r << n) + c]; }
    const Amplitude &at(size_t r, size_t c) const { return entries[(r << n) + c]; }
    Complex trace() const;
};

/// |psi><psi| without normalization.
DensityMatrix outer_product(const StateVector &state);

/// Tensor product of single-qubit kets, leftmost = position 0.
StateVector tensor(const std::vector<Ket> &kets);

enum class Pauli { X, Z };

/// Controlled-Z between positions i and j; symmetric in (i, j).
void cz_apply(StateVector &state, int i, int j);
void pauli_apply(StateVector &state, Pauli which, int i);

/// Applies a single-qubit gate matrix [[u00, u01], [u10, u11]] at position i.
void gate_apply_1q(StateVector &state, const std::array<Complex, 4> &u, int i);

/// <bra|_i applied to the state: the (n-1)-qubit unnormalized result plus
/// weight = its squared norm (the pre-renormalization outcome probability).
std::pair<StateVector, double> project_and_remove(const StateVector &state,
                                                  const Bra &bra, int i);

/// Density-matrix form: rho -> K rho K^dagger with K = <bra|_i; weight is the
/// trace of the result.
std::pair<DensityMatrix, double> project_and_remove(const DensityMatrix &rho,
                                                    const Bra &bra, int i);

/// Bras of |+_a> = (|0> + e^{ia}|1>)/sqrt(2) and |-_a> = (|0> - e^{ia}|1>)/sqrt(2).
std::pair<Bra, Bra> measurement_bras(Angle alpha);

/// The ordered (ket0, ket1) pair a read-out basis denotes.
std::pair<Ket, Ket> basis_vectors(const Basis &basis);

inline Bra bra_of(const Ket &ket) {
    return {std::conj(ket[0]), std::conj(ket[1])};
}

}  // namespace mcbeth::kernel
