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

#include <numbers>

#include <doctest.h>

#include "helpers.hpp"
#include "mcbeth/kernel.hpp"

using namespace mcbeth;
using namespace mcbeth::kernel;
constexpr double kPi = std::numbers::pi;
constexpr double kInv = 0.7071067811865475244;

TEST_CASE("tensor product uses position 0 as the most significant bit") {
    StateVector s = tensor({Ket{1.0, 0.0}, Ket{0.0, 1.0}});  // |0> (x) |1>
    CHECK(s.n == 2);
    CHECK(s.amps[0b01] == Complex(1.0));
    CHECK(std::abs(s.amps[0b00]) == 0.0);

    StateVector t = tensor({Ket{0.0, 1.0}, Ket{1.0, 0.0}});  // |1> (x) |0>
    CHECK(t.amps[0b10] == Complex(1.0));
}

TEST_CASE("cz negates only the |11> component of the pair") {
    StateVector s = tensor({Ket{kInv, kInv}, Ket{kInv, kInv}});
    cz_apply(s, 0, 1);
    CHECK(s.amps[0b11].real() == doctest::Approx(-0.5));
    CHECK(s.amps[0b01].real() == doctest::Approx(0.5));
    CHECK_THROWS(cz_apply(s, 0, 0));
}

TEST_CASE("pauli application at a position") {
    StateVector s = tensor({Ket{1.0, 0.0}, Ket{0.6, 0.8}});
    pauli_apply(s, Pauli::X, 1);
    CHECK(s.amps[0b00].real() == doctest::Approx(0.8));
    CHECK(s.amps[0b01].real() == doctest::Approx(0.6));
    pauli_apply(s, Pauli::Z, 1);
    CHECK(s.amps[0b01].real() == doctest::Approx(-0.6));
}

TEST_CASE("project_and_remove halves the state and reports the weight") {
    StateVector s = tensor({Ket{kInv, kInv}, Ket{1.0, 0.0}});
    auto [reduced, weight] = project_and_remove(s, Bra{1.0, 0.0}, 0);
    CHECK(reduced.n == 1);
    CHECK(weight == doctest::Approx(0.5));
    CHECK(reduced.amps[0].real() == doctest::Approx(kInv));

    // Projecting both branches resolves the identity.
    auto [r1, w1] = project_and_remove(s, Bra{0.0, 1.0}, 0);
    CHECK(weight + w1 == doctest::Approx(1.0));
    CHECK_THROWS(project_and_remove(s, Bra{1.0, 1.0}, 0));
}

TEST_CASE("measurement bras are the conjugated angle basis") {
    auto [plus, minus] = measurement_bras(Angle(kPi / 3));
    // <+a| applied to |+a> gives 1, to |-a> gives 0.
    Complex phase = std::exp(Complex(0.0, kPi / 3));
    Ket plus_ket{kInv, kInv * phase};
    Complex ip = plus[0] * plus_ket[0] + plus[1] * plus_ket[1];
    CHECK(std::abs(ip - 1.0) < 1e-12);
    Complex ortho = minus[0] * plus_ket[0] + minus[1] * plus_ket[1];
    CHECK(std::abs(ortho) < 1e-12);
}

TEST_CASE("angle-basis projections absorb Pauli corrections") {
    // <+a| X equals <+(-a)| up to the phase e^{ia}, and <+a| Z = <+(a+pi)|.
    Angle a(0.77);
    auto [plus_a, minus_a] = measurement_bras(a);
    auto [plus_neg, minus_neg] = measurement_bras(-a);
    auto [plus_pi, minus_pi] = measurement_bras(a + Angle(kPi));

    Bra x_applied{plus_a[1], plus_a[0]};
    Complex ratio = x_applied[0] / plus_neg[0];
    CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-12);
    CHECK(std::abs(x_applied[1] - ratio * plus_neg[1]) < 1e-12);

    Bra z_applied{plus_a[0], -plus_a[1]};
    CHECK(std::abs(z_applied[0] - plus_pi[0]) < 1e-12);
    CHECK(std::abs(z_applied[1] - plus_pi[1]) < 1e-12);
}

TEST_CASE("basis vectors are orthonormal for every kind") {
    for (const Basis &basis :
         {Basis::x(), Basis::y(), Basis::z(), Basis::from_angle(Angle(1.1)),
          Basis::from_tuples(0.6, 0.8, 0.8, -0.6)}) {
        auto [k0, k1] = basis_vectors(basis);
        Complex ip = std::conj(k0[0]) * k1[0] + std::conj(k0[1]) * k1[1];
        CHECK(std::abs(ip) < 1e-9);
        CHECK(std::abs(std::norm(k0[0]) + std::norm(k0[1]) - 1.0) < 1e-9);
    }
    CHECK_THROWS(basis_vectors(Basis::from_tuples(1.0, 0.0, 1.0, 0.0)));
}

TEST_CASE("density matrix projection matches the state-vector path") {
    std::mt19937_64 rng(17);
    StateVector s = tensor({testutil::random_ket(rng), testutil::random_ket(rng),
                            testutil::random_ket(rng)});
    DensityMatrix rho = outer_product(s);
    Bra bra{kInv, Complex(0.0, -kInv)};
    auto [rs, ws] = project_and_remove(s, bra, 1);
    auto [rr, wr] = project_and_remove(rho, bra, 1);
    CHECK(ws == doctest::Approx(wr));
    CHECK(testutil::max_abs_diff(outer_product(rs), rr) < 1e-12);
    CHECK(std::abs(rho.trace() - Complex(1.0)) < 1e-12);
}

TEST_CASE("single qubit gate application") {
    StateVector s = StateVector::zero_state(2);
    std::array<Complex, 4> h{kInv, kInv, kInv, -kInv};
    gate_apply_1q(s, h, 0);
    gate_apply_1q(s, h, 1);
    for (const Complex &a : s.amps) {
        CHECK(a.real() == doctest::Approx(0.5));
    }
}
