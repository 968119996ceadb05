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

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "qlogic/boxes.hpp"
#include "qlogic/errors.hpp"
#include "qlogic/rng.hpp"

using namespace qlogic;

namespace {

Rational rat(long n, long d = 1) {
    return make_rational(n, d);
}

const double kTwoSqrt2 = 2.0 * std::sqrt(2.0);

}  // namespace

TEST_CASE("the extremal box matches its table") {
    NoSignalingBox box = pr_box();
    CHECK(box.prob(1, 1, +1, +1) == 0);
    CHECK(box.prob(1, 1, +1, -1) == rat(1, 2));
    CHECK(box.prob(1, 1, -1, +1) == rat(1, 2));
    CHECK(box.prob(2, 2, +1, +1) == rat(1, 2));
    CHECK(box.prob(2, 2, +1, -1) == 0);
    CHECK(box.prob(1, 2, -1, +1) == rat(1, 2));
    CHECK(box.prob(2, 1, +1, -1) == rat(1, 2));

    auto c = correlators(box);
    CHECK(c[0][0] == -1);
    CHECK(c[0][1] == -1);
    CHECK(c[1][0] == -1);
    CHECK(c[1][1] == 1);

    CHECK(no_signaling_check(box).ok);
    CHECK(chsh(box) == 4);
}

TEST_CASE("uniform box") {
    NoSignalingBox u = uniform_box();
    CHECK(no_signaling_check(u).ok);
    CHECK(chsh(u) == 0);
    PentagonEmbedding emb = box_to_pentagon(u);
    CHECK(emb.sum == rat(5, 4));
    for (const auto& p : emb.probs) {
        CHECK(p == rat(1, 4));
    }
}

TEST_CASE("marginal mismatches are detected") {
    NoSignalingBox box = uniform_box();
    // Make p_11 deterministic while p_12 stays uniform: Alice's setting-1
    // marginal now depends on Bob's setting.
    for (int r = 0; r < 2; ++r) {
        for (int s = 0; s < 2; ++s) {
            box.p[0][0][r][s] = Rational(r == 0 && s == 0 ? 1 : 0);
        }
    }
    NoSignalingReport rep = no_signaling_check(box);
    CHECK(!rep.ok);
    CHECK(!rep.violations.empty());
}

TEST_CASE("malformed tables are rejected") {
    NoSignalingBox box = uniform_box();
    box.p[0][0][0][0] = rat(1, 2);  // table sums to 5/4
    CHECK_THROWS_AS(validate_box(box), MalformedBoxError);
    CHECK_THROWS_AS(no_signaling_check(box), MalformedBoxError);

    NoSignalingBox neg = uniform_box();
    neg.p[1][1][0][0] = rat(-1, 4);
    neg.p[1][1][0][1] = rat(3, 4);
    CHECK_THROWS_AS(validate_box(neg), MalformedBoxError);
}

TEST_CASE("deterministic strategies cap at 2") {
    CHECK(classical_chsh_max() == 2);
    const int signs[2] = {+1, -1};
    for (int a1 : signs) {
        for (int a2 : signs) {
            for (int b1 : signs) {
                for (int b2 : signs) {
                    Rational v = chsh(deterministic_box(a1, a2, b1, b2));
                    CHECK((v == 0 || v == 2));
                }
            }
        }
    }
    NoSignalingBox all_plus = deterministic_box(+1, +1, +1, +1);
    auto c = correlators(all_plus);
    CHECK(c[0][0] == 1);
    CHECK(c[1][1] == 1);
    CHECK(chsh(all_plus) == 2);
    CHECK(no_signaling_check(all_plus).ok);
}

TEST_CASE("singlet statistics reach the quantum ceiling") {
    const double pi = 3.14159265358979323846;
    double best = quantum_chsh(0.0, pi / 2.0, pi / 4.0, -pi / 4.0);
    CHECK(std::abs(best - kTwoSqrt2) <= 1e-9);

    CHECK(quantum_chsh(0.0, 0.0, 0.0, 0.0) == doctest::Approx(2.0));

    // pi/4-step grid: never above the ceiling, and the ceiling is attained.
    double grid_best = 0.0;
    for (int a1 = 0; a1 < 8; ++a1) {
        for (int a2 = 0; a2 < 8; ++a2) {
            for (int b1 = 0; b1 < 8; ++b1) {
                for (int b2 = 0; b2 < 8; ++b2) {
                    double v = quantum_chsh(a1 * pi / 4, a2 * pi / 4, b1 * pi / 4, b2 * pi / 4);
                    CHECK(v <= kTwoSqrt2 + 1e-9);
                    grid_best = std::max(grid_best, v);
                }
            }
        }
    }
    CHECK(grid_best >= kTwoSqrt2 - 1e-9);
}

TEST_CASE("exactly eight extremal boxes, all scoring 4") {
    auto boxes = pr_boxes();
    REQUIRE(boxes.size() == 8);
    CHECK(boxes[0] == pr_box());
    for (size_t i = 0; i < boxes.size(); ++i) {
        for (size_t j = i + 1; j < boxes.size(); ++j) {
            CHECK(!(boxes[i] == boxes[j]));
        }
    }
    for (const auto& b : boxes) {
        CHECK(no_signaling_check(b).ok);
        CHECK(chsh_max_over_sign_placements(b) == 4);
    }
    CHECK(chsh(boxes[0]) == 4);  // the primary placement already maxes out pr1
}

TEST_CASE("pentagon embedding of the extremal box") {
    PentagonEmbedding emb = box_to_pentagon(pr_box());
    for (const auto& p : emb.probs) {
        CHECK(p == rat(1, 2));
    }
    CHECK(emb.sum == rat(5, 2));
    REQUIRE(emb.certificate_ok);
    REQUIRE(emb.certificate.size() == 5);
    // adjacent events disagree on a shared observable; spot-check the pairs
    CHECK(emb.certificate[0].party == 'a');  // e1, e2 share a1
    CHECK(emb.certificate[0].setting == 1);
    CHECK(emb.certificate[1].party == 'b');  // e2, e3 share b2
    CHECK(emb.certificate[1].setting == 2);
    CHECK(emb.certificate[2].party == 'a');  // e3, e4 share a2
    CHECK(emb.certificate[3].party == 'b');  // e4, e5 share b1
    CHECK(emb.certificate[4].party == 'a');  // e5, e1 share a1
}

TEST_CASE("deterministic boxes stay within the classical pentagon bound") {
    const int signs[2] = {+1, -1};
    Rational best(0);
    for (int a1 : signs) {
        for (int a2 : signs) {
            for (int b1 : signs) {
                for (int b2 : signs) {
                    PentagonEmbedding emb = box_to_pentagon(deterministic_box(a1, a2, b1, b2));
                    CHECK(emb.sum <= 2);
                    CHECK(emb.certificate_ok);
                    best = std::max(best, emb.sum);
                }
            }
        }
    }
    CHECK(best == 2);  // the classical pentagon maximum is reached by a box
}

TEST_CASE("mixing is affine in the correlators") {
    Rng rng(33);
    auto boxes = pr_boxes();
    for (int rep = 0; rep < 10; ++rep) {
        const NoSignalingBox& a = boxes[rng.next_below(boxes.size())];
        const NoSignalingBox& b = boxes[rng.next_below(boxes.size())];
        Rational lambda = rat(static_cast<long>(rng.next_below(8)),
                              static_cast<long>(rng.next_below(4)) + 7);
        NoSignalingBox m = mix(a, b, lambda);
        CHECK(no_signaling_check(m).ok);
        auto ca = correlators(a), cb = correlators(b), cm = correlators(m);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                CHECK(cm[i][j] == lambda * ca[i][j] + (Rational(1) - lambda) * cb[i][j]);
            }
        }
        CHECK(chsh(m) <= 4);
    }
    CHECK_THROWS_AS(mix(boxes[0], boxes[1], rat(3, 2)), InputError);
}

TEST_CASE("the algebraic ceiling 4 is hit only by the extremal boxes") {
    std::vector<NoSignalingBox> tested = pr_boxes();
    size_t extremal = tested.size();
    tested.push_back(uniform_box());
    const int signs[2] = {+1, -1};
    for (int a1 : signs) {
        for (int a2 : signs) {
            tested.push_back(deterministic_box(a1, a2, +1, -1));
        }
    }
    tested.push_back(mix(tested[0], tested[1], rat(1, 3)));
    for (size_t i = 0; i < tested.size(); ++i) {
        Rational v = chsh_max_over_sign_placements(tested[i]);
        CHECK(v <= 4);
        if (i < extremal) {
            CHECK(v == 4);
        } else {
            CHECK(v < 4);
        }
    }
}

TEST_CASE("box JSON round trip and parse errors") {
    for (const auto& b : pr_boxes()) {
        CHECK(parse_box(serialize_box(b)) == b);
    }
    CHECK(parse_box(serialize_box(uniform_box())) == uniform_box());

    // integer cells are accepted alongside "num/den" strings
    std::string text = serialize_box(pr_box());
    NoSignalingBox reparsed = parse_box(text);
    CHECK(reparsed == pr_box());

    CHECK_THROWS_AS(parse_box("{"), MalformedBoxError);
    CHECK_THROWS_AS(parse_box(R"({"q": {}})"), MalformedBoxError);
    CHECK_THROWS_AS(parse_box(R"({"p": {"11": {}}})"), MalformedBoxError);
    // a table that sums to 1/2
    CHECK_THROWS_AS(
        parse_box(
            R"({"p": {"11": {"++": "1/2", "+-": "0", "-+": "0", "--": "0"},
                      "12": {"++": "1/4", "+-": "1/4", "-+": "1/4", "--": "1/4"},
                      "21": {"++": "1/4", "+-": "1/4", "-+": "1/4", "--": "1/4"},
                      "22": {"++": "1/4", "+-": "1/4", "-+": "1/4", "--": "1/4"}}})"),
        MalformedBoxError);
    // floats are refused
    CHECK_THROWS_AS(
        parse_box(
            R"({"p": {"11": {"++": 0.25, "+-": "1/4", "-+": "1/4", "--": "1/4"},
                      "12": {"++": "1/4", "+-": "1/4", "-+": "1/4", "--": "1/4"},
                      "21": {"++": "1/4", "+-": "1/4", "-+": "1/4", "--": "1/4"},
                      "22": {"++": "1/4", "+-": "1/4", "-+": "1/4", "--": "1/4"}}})"),
        MalformedBoxError);
}

TEST_CASE("outcome and setting guards") {
    NoSignalingBox box = pr_box();
    CHECK_THROWS_AS(box.prob(1, 1, 0, 1), InputError);
    CHECK_THROWS_AS(box.prob(3, 1, 1, 1), InputError);
    CHECK_THROWS_AS(deterministic_box(2, 1, 1, 1), InputError);
}
