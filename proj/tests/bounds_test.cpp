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

#include <doctest.h>

#include "qlogic/bounds.hpp"
#include "qlogic/errors.hpp"
#include "qlogic/rng.hpp"

using namespace qlogic;

namespace {

const double kSqrt5 = std::sqrt(5.0);

Rational rat(long n, long d = 1) {
    return make_rational(n, d);
}

WeightedEventFamily pentagon_family(std::vector<Rational> weights = {}) {
    return make_family(pentagon_logic(), {"e1", "e2", "e3", "e4", "e5"}, std::move(weights));
}

}  // namespace

TEST_CASE("family construction is validated") {
    CHECK_THROWS_AS(make_family(pentagon_logic(), {"e1", "nope"}), InputError);
    CHECK_THROWS_AS(make_family(pentagon_logic(), {"e1"}, {Rational(1), Rational(2)}),
                    DimensionMismatchError);
    CHECK_THROWS_AS(make_family(pentagon_logic(), {}), InputError);
    WeightedEventFamily fam = pentagon_family();
    CHECK(fam.weights == std::vector<Rational>(5, Rational(1)));
}

TEST_CASE("pentagon family adjacency is the 5-cycle") {
    CHECK(family_adjacency(pentagon_family()) == cycle_adjacency(5));
}

TEST_CASE("logic bound of the pentagon is 5/2 with a unique maximizer") {
    LogicMaxResult r = logic_max(pentagon_family());
    CHECK(r.value == rat(5, 2));
    REQUIRE(r.maximizers.size() == 1);
    CHECK(r.maximizers[0] == pentagon_state(pentagon_logic()));
}

TEST_CASE("logic bound on a single block") {
    GreechieLogic logic = make_logic({"a", "b", "c"}, {{"a", "b", "c"}});
    WeightedEventFamily fam =
        make_family(logic, {"a", "b", "c"}, {Rational(1), Rational(0), Rational(0)});
    CHECK(logic_max(fam).value == 1);
}

TEST_CASE("partial weights on the pentagon") {
    WeightedEventFamily fam = pentagon_family(
        {Rational(1), Rational(1), Rational(0), Rational(0), Rational(0)});
    LogicMaxResult r = logic_max(fam);
    CHECK(r.value == 1);

    // Independent oracle: brute force over the enumerated state vertices.
    auto vertices = enumerate_vertices(state_polytope(fam.logic));
    Rational best(0);
    for (const auto& v : vertices) {
        Rational s = v[0] + v[1];  // mu(e1) + mu(e2)
        best = std::max(best, s);
    }
    CHECK(best == r.value);
}

TEST_CASE("classical bound by independent-set enumeration") {
    std::vector<Rational> unit(5, Rational(1));
    CHECK(classical_max(cycle_adjacency(5), unit) == 2);

    std::vector<std::vector<bool>> edgeless(5, std::vector<bool>(5, false));
    CHECK(classical_max(edgeless, unit) == 5);

    std::vector<std::vector<bool>> complete(5, std::vector<bool>(5, true));
    for (int i = 0; i < 5; ++i) {
        complete[i][i] = false;
    }
    CHECK(classical_max(complete, unit) == 1);

    // negative weights are simply never picked up
    std::vector<std::vector<bool>> two(2, std::vector<bool>(2, false));
    CHECK(classical_max(two, {rat(-1), rat(5)}) == 5);

    CHECK(classical_max(pentagon_family()) == 2);
}

TEST_CASE("umbrella realization reaches sqrt(5)") {
    auto ps = kcbs_umbrella_projectors();
    REQUIRE(ps.size() == 5);
    double v = quantum_value(ps, cycle_adjacency(5), std::vector<double>(5, 1.0));
    CHECK(std::abs(v - kSqrt5) <= 1e-9);

    // Second route: the handle state (1,0,0) collects cos^2(theta) from each
    // of the five cone vectors.
    Eigen::VectorXcd handle(3);
    handle << 1.0, 0.0, 0.0;
    DensityState rho{handle * handle.adjoint()};
    double at_handle =
        quantum_value(ps, cycle_adjacency(5), std::vector<double>(5, 1.0), rho);
    CHECK(std::abs(at_handle - kSqrt5) <= 1e-9);
}

TEST_CASE("quantum_value trivial realizations") {
    std::vector<std::vector<bool>> lone(1, std::vector<bool>(1, false));
    CHECK(quantum_value({Projector::identity(3)}, lone, {1.0}) == doctest::Approx(1.0));

    Eigen::MatrixXcd p0 = Eigen::MatrixXcd::Zero(2, 2), p1 = Eigen::MatrixXcd::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    auto adj = cycle_adjacency(2);
    double v = quantum_value({Projector{p0}, Projector{p1}}, adj, {1.0, 1.0});
    CHECK(v == doctest::Approx(1.0));  // the sum is the identity on the span

    CHECK_THROWS_AS(quantum_value({Projector{p0}, Projector{p0}}, adj, {1.0, 1.0}),
                    OrthogonalityPatternError);
}

TEST_CASE("quantum_value is invariant under global unitary conjugation") {
    Rng rng(21);
    auto ps = kcbs_umbrella_projectors();
    auto adj = cycle_adjacency(5);
    std::vector<double> w(5, 1.0);
    double base = quantum_value(ps, adj, w);
    for (int rep = 0; rep < 5; ++rep) {
        Eigen::MatrixXcd u = random_unitary(3, rng);
        std::vector<Projector> rotated;
        for (const auto& p : ps) {
            rotated.push_back(Projector{u * p.matrix() * u.adjoint()});
        }
        CHECK(std::abs(quantum_value(rotated, adj, w) - base) <= 1e-9);
    }
}

TEST_CASE("pentagon projector search stays under both ceilings") {
    double best = search_pentagon_projectors(3, 60, 7);
    CHECK(best <= kSqrt5 + 1e-9);
    CHECK(best <= 2.5);
    CHECK(best > 1.0);

    CHECK(search_pentagon_projectors(3, 60, 7) == best);  // deterministic
    CHECK(search_pentagon_projectors(4, 25, 3) <= kSqrt5 + 1e-9);

    CHECK_THROWS_AS(search_pentagon_projectors(2, 10, 1), InputError);
    CHECK_THROWS_AS(search_pentagon_projectors(7, 10, 1), InputError);
    CHECK_THROWS_AS(search_pentagon_projectors(3, 0, 1), InputError);
}

TEST_CASE("kcbs functional") {
    std::array<Rational, 5> half;
    half.fill(rat(1, 2));
    CHECK(kcbs_value(half) == rat(-5));
    CHECK(kcbs_from_sum(Rational(2)) == rat(-3));
    CHECK(std::abs(kcbs_from_sum(kSqrt5) - (5.0 - 4.0 * kSqrt5)) <= 1e-12);

    Rng rng(22);
    for (int i = 0; i < 20; ++i) {
        Rational sum = rat(static_cast<long>(rng.next_below(21)) - 10,
                           static_cast<long>(rng.next_below(9)) + 1);
        CHECK(kcbs_from_sum(sum) + Rational(4) * sum == 5);  // affine, exactly
    }
}

TEST_CASE("bound report enforces the hierarchy") {
    BoundReport rep = make_bound_report(pentagon_family(), kSqrt5);
    CHECK(rep.classical_max == 2);
    CHECK(rep.logic_max == rat(5, 2));
    CHECK(rep.classical_max <= rep.logic_max);
    REQUIRE(rep.quantum_value.has_value());
    CHECK(*rep.quantum_value <= static_cast<double>(rep.logic_max) + 1e-9);

    CHECK_THROWS_AS(make_bound_report(pentagon_family(), 2.6), InvariantBreach);
}

TEST_CASE("infeasible family errors surface") {
    // A one-block logic where the family asks for more than the block offers
    // is still feasible; genuine infeasibility needs contradictory blocks,
    // which the Greechie condition makes hard to produce at this scale. The
    // error path is exercised directly through the LP layer instead.
    GreechieLogic logic = make_logic({"a", "b"}, {{"a", "b"}});
    WeightedEventFamily fam = make_family(logic, {"a"});
    CHECK(logic_max(fam).value == 1);
}
