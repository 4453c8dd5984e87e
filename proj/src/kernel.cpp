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

#include "mcbeth/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mcbeth::kernel {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244;

void check_position(int i, int n) {
    if (i < 0 || i >= n) {
        throw std::out_of_range("qubit position " + std::to_string(i) +
                                " out of range for " + std::to_string(n) +
                                " qubits");
    }
}

// Bit of the amplitude index owned by position i (MSB-first).
inline size_t bit_of(size_t index, int i, int n) {
    return (index >> (n - 1 - i)) & 1u;
}
}  // namespace

StateVector StateVector::zero_state(int n) {
    StateVector s;
    s.n = n;
    s.amps.assign(size_t{1} << n, 0.0);
    s.amps[0] = 1.0;
    return s;
}

double StateVector::norm2() const {
    double acc = 0.0;
    for (const Amplitude &a : amps) {
        acc += std::norm(a);
    }
    return acc;
}

void StateVector::renormalize() {
    double n2 = norm2();
    if (n2 <= 0.0) {
        throw std::runtime_error("cannot renormalize a zero state");
    }
    double inv = 1.0 / std::sqrt(n2);
    for (Amplitude &a : amps) {
        a *= inv;
    }
}

Complex DensityMatrix::trace() const {
    Complex acc = 0.0;
    size_t dim = size_t{1} << n;
    for (size_t r = 0; r < dim; ++r) {
        acc += at(r, r);
    }
    return acc;
}

DensityMatrix outer_product(const StateVector &state) {
    DensityMatrix rho;
    rho.n = state.n;
    size_t dim = state.amps.size();
    rho.entries.resize(dim * dim);
    for (size_t r = 0; r < dim; ++r) {
        for (size_t c = 0; c < dim; ++c) {
            rho.entries[r * dim + c] = state.amps[r] * std::conj(state.amps[c]);
        }
    }
    return rho;
}

StateVector tensor(const std::vector<Ket> &kets) {
    StateVector s;
    s.n = static_cast<int>(kets.size());
    s.amps.assign(size_t{1} << s.n, 1.0);
    for (size_t index = 0; index < s.amps.size(); ++index) {
        Amplitude a = 1.0;
        for (int p = 0; p < s.n; ++p) {
            a *= kets[p][bit_of(index, p, s.n)];
        }
        s.amps[index] = a;
    }
    return s;
}

void cz_apply(StateVector &state, int i, int j) {
    check_position(i, state.n);
    check_position(j, state.n);
    if (i == j) {
        throw std::invalid_argument("cz_apply requires distinct positions");
    }
    size_t mask = (size_t{1} << (state.n - 1 - i)) | (size_t{1} << (state.n - 1 - j));
    for (size_t index = 0; index < state.amps.size(); ++index) {
        if ((index & mask) == mask) {
            state.amps[index] = -state.amps[index];
        }
    }
}

void pauli_apply(StateVector &state, Pauli which, int i) {
    check_position(i, state.n);
    size_t stride = size_t{1} << (state.n - 1 - i);
    if (which == Pauli::X) {
        for (size_t index = 0; index < state.amps.size(); ++index) {
            if ((index & stride) == 0) {
                std::swap(state.amps[index], state.amps[index | stride]);
            }
        }
    } else {
        for (size_t index = 0; index < state.amps.size(); ++index) {
            if (index & stride) {
                state.amps[index] = -state.amps[index];
            }
        }
    }
}

void gate_apply_1q(StateVector &state, const std::array<Complex, 4> &u, int i) {
    check_position(i, state.n);
    size_t stride = size_t{1} << (state.n - 1 - i);
    for (size_t index = 0; index < state.amps.size(); ++index) {
        if ((index & stride) == 0) {
            Amplitude a0 = state.amps[index];
            Amplitude a1 = state.amps[index | stride];
            state.amps[index] = u[0] * a0 + u[1] * a1;
            state.amps[index | stride] = u[2] * a0 + u[3] * a1;
        }
    }
}

std::pair<StateVector, double> project_and_remove(const StateVector &state,
                                                  const Bra &bra, int i) {
    check_position(i, state.n);
    double bn = std::norm(bra[0]) + std::norm(bra[1]);
    if (std::abs(bn - 1.0) > 1e-9) {
        throw std::invalid_argument("projection bra is not unit norm");
    }
    StateVector out;
    out.n = state.n - 1;
    out.amps.assign(size_t{1} << out.n, 0.0);
    size_t stride = size_t{1} << (state.n - 1 - i);
    size_t low_mask = stride - 1;
    for (size_t r = 0; r < out.amps.size(); ++r) {
        // Re-insert the removed bit position to address the source amplitudes.
        size_t base = ((r & ~low_mask) << 1) | (r & low_mask);
        out.amps[r] = bra[0] * state.amps[base] + bra[1] * state.amps[base | stride];
    }
    double weight = out.norm2();
    return {std::move(out), weight};
}

std::pair<DensityMatrix, double> project_and_remove(const DensityMatrix &rho,
                                                    const Bra &bra, int i) {
    check_position(i, rho.n);
    DensityMatrix out;
    out.n = rho.n - 1;
    size_t out_dim = size_t{1} << out.n;
    size_t in_dim = size_t{1} << rho.n;
    out.entries.assign(out_dim * out_dim, 0.0);
    size_t stride = size_t{1} << (rho.n - 1 - i);
    size_t low_mask = stride - 1;
    auto expand = [&](size_t r, size_t bit) {
        return ((r & ~low_mask) << 1) | (r & low_mask) | (bit ? stride : 0);
    };
    for (size_t r = 0; r < out_dim; ++r) {
        for (size_t c = 0; c < out_dim; ++c) {
            Complex acc = 0.0;
            for (size_t br = 0; br < 2; ++br) {
                for (size_t bc = 0; bc < 2; ++bc) {
                    acc += bra[br] * std::conj(bra[bc]) *
                           rho.entries[expand(r, br) * in_dim + expand(c, bc)];
                }
            }
            out.entries[r * out_dim + c] = acc;
        }
    }
    double weight = out.trace().real();
    return {std::move(out), weight};
}

std::pair<Bra, Bra> measurement_bras(Angle alpha) {
    Complex phase = std::exp(Complex(0.0, -alpha.radians()));  // conj(e^{ia})
    Bra plus{kInvSqrt2, kInvSqrt2 * phase};
    Bra minus{kInvSqrt2, -kInvSqrt2 * phase};
    return {plus, minus};
}

std::pair<Ket, Ket> basis_vectors(const Basis &basis) {
    switch (basis.kind) {
    case Basis::Kind::X:
        return {Ket{kInvSqrt2, kInvSqrt2}, Ket{kInvSqrt2, -kInvSqrt2}};
    case Basis::Kind::Y:
        return {Ket{kInvSqrt2, Complex(0.0, kInvSqrt2)},
                Ket{kInvSqrt2, Complex(0.0, -kInvSqrt2)}};
    case Basis::Kind::Z:
        return {Ket{1.0, 0.0}, Ket{0.0, 1.0}};
    case Basis::Kind::FromAngle: {
        Complex phase = std::exp(Complex(0.0, basis.angle.radians()));
        return {Ket{kInvSqrt2, kInvSqrt2 * phase}, Ket{kInvSqrt2, -kInvSqrt2 * phase}};
    }
    case Basis::Kind::FromTuples:
        if (!basis.orthonormal()) {
            throw std::invalid_argument("FromTuples basis is not orthonormal");
        }
        return {Ket{basis.v0[0], basis.v0[1]}, Ket{basis.v1[0], basis.v1[1]}};
    }
    throw std::logic_error("unreachable basis kind");
}

}  // namespace mcbeth::kernel
