// Copyright 2026 The qlogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>

#include <doctest.h>

#include "qlogic/bounds.hpp"
#include "qlogic/errors.hpp"
#include "qlogic/logic.hpp"
#include "qlogic/rng.hpp"

using namespace qlogic;

namespace {

Rational rat(long n, long d = 1) {
    return make_rational(n, d);
}

}  // namespace

TEST_CASE("parse a minimal logic") {
    GreechieLogic logic = parse_logic(R"({"atoms": ["a", "b"], "blocks": [["a", "b"]]})");
    CHECK(logic.atoms.size() == 2);
    CHECK(logic.blocks.size() == 1);
    CHECK(logic.atom_index("b") == 1);
    CHECK(logic.atom_index("zz") == -1);
}

TEST_CASE("parse the pentagon file") {
    std::string text = R"({
        "atoms": ["e1", "e2", "e3", "e4", "e5", "f1", "f2", "f3", "f4", "f5"],
        "blocks": [["e1", "f1", "e2"], ["e2", "f2", "e3"], ["e3", "f3", "e4"],
                   ["e4", "f4", "e5"], ["e5", "f5", "e1"]]
    })";
    CHECK(parse_logic(text) == pentagon_logic());
}

TEST_CASE("syntax errors carry a line number") {
    try {
        parse_logic("{\n\"atoms\": @\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("structural validation") {
    CHECK_THROWS_AS(
        parse_logic(R"({"atoms": ["a","b","c","d"], "blocks": [["a","b","c"], ["a","b","d"]]})"),
        GreechieViolationError);
    try {
        parse_logic(R"({"atoms": ["a","b","c","d"], "blocks": [["a","b","c"], ["a","b","d"]]})");
    } catch (const GreechieViolationError& e) {
        std::string msg = e.what();
        CHECK(msg.find("{a,b,c}") != std::string::npos);
        CHECK(msg.find("{a,b,d}") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_logic(R"({"atoms": ["a"], "blocks": [["a","x"]]})"), InputError);
    CHECK_THROWS_AS(parse_logic(R"({"atoms": ["a","b"], "blocks": [["a"]]})"), InputError);
    CHECK_THROWS_AS(parse_logic(R"({"atoms": ["a","a"], "blocks": [["a","a"]]})"), InputError);
    CHECK_THROWS_AS(
        parse_logic(R"({"atoms": ["a","b"], "blocks": [["a","b"],["b","a"]]})"), InputError);
    CHECK_THROWS_AS(parse_logic(R"({"atoms": ["a","b","c"], "blocks": [["a","b"]]})"), InputError);
    CHECK_THROWS_AS(parse_logic(R"({"atoms": ["a","b"], "blocks": [["a","b"]], "x": 1})"),
                    ParseError);
}

TEST_CASE("pentagon logic shape") {
    GreechieLogic logic = pentagon_logic();
    CHECK(logic.atoms.size() == 10);
    CHECK(logic.blocks.size() == 5);

    OrthogonalityGraph g = orthogonality_graph(logic);
    CHECK(g.edge_count() == 15);  // 5 blocks, 3 pairs each, no pair repeats

    // e-atoms restricted to themselves form the 5-cycle.
    for (int k = 0; k < 5; ++k) {
        int e_k = logic.atom_index("e" + std::to_string(k + 1));
        int e_next = logic.atom_index("e" + std::to_string((k + 1) % 5 + 1));
        int e_skip = logic.atom_index("e" + std::to_string((k + 2) % 5 + 1));
        CHECK(g.adjacent(e_k, e_next));
        CHECK(!g.adjacent(e_k, e_skip));
    }
    // each f_k touches exactly its own block's two e-atoms
    for (int k = 1; k <= 5; ++k) {
        CHECK(g.degree(logic.atom_index("f" + std::to_string(k))) == 2);
    }
}

TEST_CASE("single block gives a triangle") {
    GreechieLogic logic = make_logic({"a", "b", "c"}, {{"a", "b", "c"}});
    OrthogonalityGraph g = orthogonality_graph(logic);
    CHECK(g.edge_count() == 3);
    CHECK(g.degree(0) == 2);
}

TEST_CASE("pentagon state") {
    GreechieLogic logic = pentagon_logic();
    LogicState s = pentagon_state(logic);
    CHECK(s.assignment[logic.atom_index("e1")] == rat(1, 2));
    CHECK(s.assignment[logic.atom_index("f3")] == 0);
    CHECK(validate_state(logic, s).ok);

    Rational sum(0);
    for (int k = 1; k <= 5; ++k) {
        sum += s.assignment[logic.atom_index("e" + std::to_string(k))];
    }
    CHECK(sum == rat(5, 2));

    // block sum 1/2 + 0 + 1/2 checked through the event machinery
    CHECK(event_probability(logic, s, logic.blocks[0]) == 1);

    GreechieLogic other = make_logic({"a", "b"}, {{"a", "b"}});
    CHECK_THROWS_AS(pentagon_state(other), WrongLogicError);
}

TEST_CASE("validate_state reports every violated block") {
    GreechieLogic logic = pentagon_logic();

    LogicState zero{std::vector<Rational>(10, Rational(0))};
    StateReport r = validate_state(logic, zero);
    CHECK(!r.ok);
    CHECK(r.violations.size() == 5);
    for (const auto& v : r.violations) {
        CHECK(v.sum == 0);
    }

    LogicState ones{std::vector<Rational>(10, Rational(0))};
    for (int k = 0; k < 5; ++k) {
        ones.assignment[k] = 1;  // every e_k certain, every block sums to 2
    }
    r = validate_state(logic, ones);
    CHECK(!r.ok);
    CHECK(r.violations.size() == 5);
    for (const auto& v : r.violations) {
        CHECK(v.sum == 2);
    }

    LogicState outside{std::vector<Rational>(10, Rational(0))};
    outside.assignment[0] = rat(3, 2);
    CHECK(!validate_state(logic, outside).ok);

    LogicState short_state{std::vector<Rational>(3, Rational(0))};
    CHECK_THROWS_AS(validate_state(logic, short_state), InputError);
}

TEST_CASE("any single-atom perturbation breaks the pentagon state") {
    GreechieLogic logic = pentagon_logic();
    Rng rng(77);
    for (int i = 0; i < 25; ++i) {
        LogicState s = pentagon_state(logic);
        size_t atom = rng.next_below(10);
        long num = static_cast<long>(rng.next_below(9)) - 4;
        if (num == 0) {
            num = 5;
        }
        s.assignment[atom] += rat(num, static_cast<long>(rng.next_below(7)) + 1);
        CHECK(!validate_state(logic, s).ok);
    }
}

TEST_CASE("event probabilities") {
    GreechieLogic logic = pentagon_logic();
    LogicState s = pentagon_state(logic);
    int e1 = logic.atom_index("e1"), e2 = logic.atom_index("e2"), e3 = logic.atom_index("e3");

    CHECK(event_probability(logic, s, {e1, e2}) == 1);  // co-blocked through {e1,f1,e2}
    CHECK(event_probability(logic, s, {}) == 0);
    CHECK(event_probability(logic, s, logic.blocks[2]) == 1);
    CHECK_THROWS_AS(event_probability(logic, s, {e1, e3}), InvalidEventError);
}

TEST_CASE("event probability is additive on random states") {
    GreechieLogic logic = pentagon_logic();
    auto vertices = enumerate_vertices(state_polytope(logic));
    REQUIRE(vertices.size() == 12);
    Rng rng(31);
    for (int i = 0; i < 10; ++i) {
        // random rational convex combination of three vertices
        long w1 = static_cast<long>(rng.next_below(5)) + 1;
        long w2 = static_cast<long>(rng.next_below(5)) + 1;
        long w3 = static_cast<long>(rng.next_below(5)) + 1;
        Rational total(w1 + w2 + w3);
        const auto& a = vertices[rng.next_below(vertices.size())];
        const auto& b = vertices[rng.next_below(vertices.size())];
        const auto& c = vertices[rng.next_below(vertices.size())];
        LogicState s{std::vector<Rational>(10, Rational(0))};
        for (size_t j = 0; j < 10; ++j) {
            s.assignment[j] = (Rational(w1) * a[j] + Rational(w2) * b[j] + Rational(w3) * c[j]) /
                              total;
        }
        CHECK(validate_state(logic, s).ok);
        for (const auto& blk : logic.blocks) {
            Rational split = event_probability(logic, s, {blk[0]}) +
                             event_probability(logic, s, {blk[1], blk[2]});
            CHECK(split == event_probability(logic, s, blk));
        }
    }
}

TEST_CASE("serialize/parse identity") {
    GreechieLogic pent = pentagon_logic();
    CHECK(parse_logic(serialize_logic(pent)) == pent);
    GreechieLogic tiny = make_logic({"a", "b"}, {{"a", "b"}});
    CHECK(parse_logic(serialize_logic(tiny)) == tiny);
}
