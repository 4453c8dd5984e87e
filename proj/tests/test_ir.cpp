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
#include "mcbeth/ir.hpp"

using namespace mcbeth;
constexpr double kPi = std::numbers::pi;

TEST_CASE("angles normalize into [0, 2pi)") {
    CHECK(Angle(-kPi / 2).radians() == doctest::Approx(3 * kPi / 2));
    CHECK(Angle(2 * kPi).radians() == doctest::Approx(0.0));
    CHECK(Angle(5 * kPi).approx_equal(Angle(kPi)));
    CHECK(Angle(0.0).approx_equal(Angle(2 * kPi)));
    CHECK(!std::signbit(Angle(-2 * kPi).radians()));
}

TEST_CASE("signal addition is symmetric difference") {
    Signal a{0, 1};
    Signal b{1, 2};
    CHECK((a + b) == Signal{0, 2});
    CHECK((a + a).empty());
    CHECK(Signal{1, 1}.empty());
    std::map<Qubit, int> outcomes{{0, 1}, {1, 1}, {2, 0}};
    CHECK(a.evaluate(outcomes) == 0);
    CHECK(b.evaluate(outcomes) == 1);
    CHECK(Signal{}.evaluate({}) == 0);
}

TEST_CASE("text round trip preserves every command kind") {
    const char *src =
        "Input 0;\n"
        "Prep 1;\n"
        "Prep 2;\n"
        "Entangle 0 1;\n"
        "CZ 1 2;\n"
        "J 1.5707963267948966 0 1;\n"
        "Measure 1 3.1415926535897931 [0] [];\n"
        "XCorrect 2 [0,1];\n"
        "ReadOut 2 FromAngle(0.5);\n";
    Program p = parse_text(src);
    CHECK(p.commands.size() == 9);
    CHECK(print_text(p) == src);
    CHECK(parse_text(print_text(p)) == p);
}

TEST_CASE("parser accepts pi expressions, sugar lists and comments") {
    Program p = parse_text(
        "# cluster\n"
        "PrepList [0, 1, 2];\n"
        "J pi/2 0 1\n"
        "J -pi 1 2;\n"
        "Measure 2 3*pi/4 [] [] # trailing comment\n");
    CHECK(p.commands.size() == 6);
    CHECK(std::get<cmd::J>(p.commands[3]).angle.approx_equal(Angle(kPi / 2)));
    CHECK(std::get<cmd::J>(p.commands[4]).angle.approx_equal(Angle(-kPi)));
    CHECK(std::get<cmd::Measure>(p.commands[5]).angle.approx_equal(Angle(3 * kPi / 4)));
}

TEST_CASE("parse errors carry a position") {
    try {
        parse_text("Prep 0;\nBogus 1;\n");
        FAIL("expected ParseError");
    } catch (const ParseError &e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 25; ++i) {
        Program p = testutil::random_program(rng);
        CHECK(from_json(to_json(p)) == p);
    }
}

TEST_CASE("json accepts declaration list sugar") {
    Program p = from_json(R"([
        {"InputList": {"qubits": [0, 1]}},
        {"PrepList": {"qubits": [2]}},
        {"Entangle": {"on_qubits": [0, 2]}}
    ])");
    CHECK(p.commands.size() == 4);
    CHECK(std::get<cmd::Input>(p.commands[0]).qubit == 0);
    CHECK(std::get<cmd::Prep>(p.commands[2]).qubit == 2);
}

TEST_CASE("validation flags the four constraint classes") {
    SUBCASE("command on a measured qubit") {
        Program p = parse_text(
            "Prep 0;\nPrep 1;\nMeasure 0 0 [] [];\nEntangle 0 1;\n");
        ValidationReport r = validate(p);
        REQUIRE(!r.ok);
        CHECK(r.violations[0].constraint == 2);
        CHECK(r.violations[0].command_index == 3);
    }
    SUBCASE("signal without an earlier measurement") {
        Program p = parse_text("Prep 0;\nPrep 1;\nMeasure 0 0 [1] [];\n");
        ValidationReport r = validate(p);
        REQUIRE(!r.ok);
        CHECK(r.violations[0].constraint == 1);
    }
    SUBCASE("undeclared qubit") {
        Program p = parse_text("Prep 0;\nEntangle 0 3;\n");
        ValidationReport r = validate(p);
        REQUIRE(!r.ok);
        CHECK(r.violations[0].constraint == 3);
    }
    SUBCASE("read-out of a measured qubit") {
        Program p = parse_text("Prep 0;\nMeasure 0 0 [] [];\nReadOut 0 Z;\n");
        ValidationReport r = validate(p);
        REQUIRE(!r.ok);
        CHECK(r.violations[0].constraint == 4);
    }
    SUBCASE("structural issues") {
        CHECK(!validate(parse_text("Prep 0;\nPrep 0;\n")).ok);
        CHECK(!validate(parse_text("Prep 0;\nPrep 2;\nEntangle 0 2;\n")).ok);
        CHECK(!validate(parse_text("Prep 0;\nXCorrect 0 [];\nPrep 1;\n")).ok);
    }
    SUBCASE("valid programs pass") {
        CHECK(validate(parse_text(
                           "Input 0;\nPrep 1;\nEntangle 0 1;\n"
                           "Measure 0 pi/4 [] [];\nXCorrect 1 [0];\nReadOut 1 X;\n"))
                  .ok);
    }
}

TEST_CASE("derive_spaces computes V, I and O") {
    Program p = parse_text(
        "Input 0;\nPrep 1;\nPrep 2;\nJ 0 0 1;\nMeasure 1 0 [] [];\n");
    Spaces s = derive_spaces(p);
    CHECK(s.all == std::set<Qubit>{0, 1, 2});
    CHECK(s.inputs == std::set<Qubit>{0});
    CHECK(s.outputs == std::set<Qubit>{2});
}

TEST_CASE("relabel maps onto a contiguous range") {
    Program p = parse_text(
        "Prep 2;\nPrep 5;\nPrep 9;\nEntangle 2 5;\nMeasure 2 0 [] [];\n"
        "XCorrect 9 [2];\n");
    auto [out, mapping] = relabel(p);
    CHECK(mapping == std::map<Qubit, Qubit>{{2, 0}, {5, 1}, {9, 2}});
    CHECK(validate(out).ok);
    CHECK(std::get<cmd::XCorrect>(out.commands[5]).signal == Signal{0});
}
