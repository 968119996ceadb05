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

#include "qlogic/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "qlogic/eig.hpp"
#include "qlogic/errors.hpp"
#include "qlogic/format.hpp"

namespace qlogic {

WeightedEventFamily make_family(GreechieLogic logic, const std::vector<std::string>& event_atoms,
                                std::vector<Rational> weights) {
    WeightedEventFamily fam;
    fam.logic = std::move(logic);
    for (const auto& name : event_atoms) {
        int idx = fam.logic.atom_index(name);
        if (idx < 0) {
            throw InputError("event '" + name + "' is not an atom of the logic");
        }
        fam.events.push_back(idx);
    }
    if (fam.events.empty()) {
        throw InputError("event family is empty");
    }
    if (weights.empty()) {
        weights.assign(fam.events.size(), Rational(1));
    }
    if (weights.size() != fam.events.size()) {
        throw DimensionMismatchError("family has " + std::to_string(fam.events.size()) +
                                     " events but " + std::to_string(weights.size()) + " weights");
    }
    fam.weights = std::move(weights);
    return fam;
}

std::vector<std::vector<bool>> family_adjacency(const WeightedEventFamily& family) {
    OrthogonalityGraph g = orthogonality_graph(family.logic);
    size_t k = family.events.size();
    std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) {
            if (i != j) {
                adj[i][j] = g.adjacent(family.events[i], family.events[j]);
            }
        }
    }
    return adj;
}

Polytope state_polytope(const GreechieLogic& logic) {
    Polytope p;
    p.variables = logic.atoms;
    for (const auto& blk : logic.blocks) {
        Constraint c;
        c.coeffs.assign(logic.atoms.size(), Rational(0));
        for (int a : blk) {
            c.coeffs[static_cast<size_t>(a)] = 1;
        }
        c.rel = Relation::Equal;
        c.rhs = 1;
        p.constraints.push_back(std::move(c));
    }
    return p;
}

LinearProgram state_lp(const WeightedEventFamily& family) {
    Polytope p = state_polytope(family.logic);
    LinearProgram lp{p.variables, std::vector<Rational>(p.variables.size(), Rational(0)),
                     std::move(p.constraints)};
    for (size_t k = 0; k < family.events.size(); ++k) {
        lp.objective[static_cast<size_t>(family.events[k])] += family.weights[k];
    }
    return lp;
}

LogicMaxResult logic_max(const WeightedEventFamily& family) {
    LinearProgram lp = state_lp(family);
    LpSolution sol = lp_maximize(lp);
    if (sol.status == LpStatus::Infeasible) {
        throw InfeasibleLogicError("the logic admits no states");
    }
    // Block sums cap every variable at 1, so the polytope is never unbounded.
    LogicMaxResult result;
    result.value = sol.value;
    for (auto& v : optimal_face(lp)) {
        result.maximizers.push_back(LogicState{std::move(v)});
    }
    return result;
}

Rational classical_max(const std::vector<std::vector<bool>>& adjacency,
                       const std::vector<Rational>& weights) {
    const size_t k = weights.size();
    if (adjacency.size() != k) {
        throw DimensionMismatchError("adjacency size does not match weights");
    }
    if (k > 25) {
        throw InputError("classical_max enumerates all 2^k subsets; k > 25 refused");
    }
    // Precompute neighbour masks; a subset is independent iff no member's
    // neighbourhood intersects it.
    std::vector<std::uint32_t> nbr(k, 0);
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) {
            if (adjacency[i][j]) {
                nbr[i] |= 1u << j;
            }
        }
    }
    Rational best(0);  // empty set is independent
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        bool independent = true;
        Rational sum(0);
        for (size_t i = 0; i < k && independent; ++i) {
            if (mask & (1u << i)) {
                if (mask & nbr[i]) {
                    independent = false;
                } else {
                    sum += weights[i];
                }
            }
        }
        if (independent && sum > best) {
            best = sum;
        }
    }
    return best;
}

Rational classical_max(const WeightedEventFamily& family) {
    return classical_max(family_adjacency(family), family.weights);
}

double quantum_value(const std::vector<Projector>& projectors,
                     const std::vector<std::vector<bool>>& adjacency,
                     const std::vector<double>& weights, const std::optional<DensityState>& state) {
    const size_t k = projectors.size();
    if (adjacency.size() != k || weights.size() != k) {
        throw DimensionMismatchError("quantum_value: sizes disagree");
    }
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = i + 1; j < k; ++j) {
            if (!adjacency[i][j]) {
                continue;
            }
            double r = (projectors[i].matrix() * projectors[j].matrix()).norm();
            if (r > 1e-9) {
                throw OrthogonalityPatternError("projectors " + std::to_string(i) + "," +
                                                std::to_string(j) + " must be orthogonal, ||pq|| = " +
                                                format_float(r));
            }
        }
    }
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(projectors[0].dim(), projectors[0].dim());
    for (size_t i = 0; i < k; ++i) {
        sum += weights[i] * projectors[i].matrix();
    }
    if (state) {
        return expectation(*state, HermitianMatrix(sum));
    }
    return largest_eigenvalue(sum);
}

std::vector<std::vector<bool>> cycle_adjacency(int n) {
    std::vector<std::vector<bool>> adj(static_cast<size_t>(n),
                                       std::vector<bool>(static_cast<size_t>(n), false));
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        adj[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
        adj[static_cast<size_t>(j)][static_cast<size_t>(i)] = true;
    }
    return adj;
}

namespace {

// Draw a unit vector orthogonal to every vector in `against` (which need not
// be mutually orthogonal; an orthonormal basis of their span is built first).
Eigen::VectorXcd orthogonal_draw(int dim, Rng& rng, const std::vector<Eigen::VectorXcd>& against,
                                 std::uint64_t seed_for_error) {
    std::vector<Eigen::VectorXcd> basis;
    for (const auto& u : against) {
        Eigen::VectorXcd w = u;
        for (const auto& b : basis) {
            w -= b * (b.adjoint() * w)(0);
        }
        double n = w.norm();
        if (n > 1e-12) {
            basis.push_back(w / n);
        }
    }
    for (int attempt = 0; attempt < 64; ++attempt) {
        Eigen::VectorXcd v = random_unit_vector(dim, rng);
        for (const auto& b : basis) {
            v -= b * (b.adjoint() * v)(0);
        }
        double n = v.norm();
        if (n > 1e-8) {
            return v / n;
        }
    }
    throw DegenerateDrawError("orthogonal draw failed 64 times (seed " +
                              std::to_string(seed_for_error) + ")");
}

}  // namespace

double search_pentagon_projectors(int dim, int trials, std::uint64_t seed) {
    if (dim < 3 || dim > 6) {
        throw InputError("search dimension must lie in [3, 6], got " + std::to_string(dim));
    }
    if (trials < 1) {
        throw InputError("search needs at least one trial");
    }
    auto adjacency = cycle_adjacency(5);
    std::vector<double> unit_weights(5, 1.0);
    double best = 0.0;
    for (int t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = Rng::child_seed(seed, static_cast<std::uint64_t>(t));
        Rng rng(trial_seed);
        std::vector<Eigen::VectorXcd> v;
        v.push_back(random_unit_vector(dim, rng));
        for (int k = 1; k < 4; ++k) {
            v.push_back(orthogonal_draw(dim, rng, {v.back()}, trial_seed));
        }
        v.push_back(orthogonal_draw(dim, rng, {v[3], v[0]}, trial_seed));
        std::vector<Projector> ps;
        for (const auto& vec : v) {
            ps.push_back(rank_one(vec));
        }
        best = std::max(best, quantum_value(ps, adjacency, unit_weights));
    }
    return best;
}

std::vector<Projector> kcbs_umbrella_projectors() {
    const double pi = 3.14159265358979323846;
    double c = std::cos(pi / 5.0);
    double cos_t = std::sqrt(c / (1.0 + c));
    double sin_t = std::sqrt(1.0 - c / (1.0 + c));
    std::vector<Projector> ps;
    for (int k = 0; k < 5; ++k) {
        Eigen::VectorXcd v(3);
        double a = 4.0 * pi * k / 5.0;
        v << cos_t, sin_t * std::cos(a), sin_t * std::sin(a);
        ps.push_back(rank_one(v));
    }
    return ps;
}

Rational kcbs_value(const std::array<Rational, 5>& event_probs) {
    Rational sum(0);
    for (const auto& p : event_probs) {
        sum += p;
    }
    return kcbs_from_sum(sum);
}

Rational kcbs_from_sum(const Rational& sum) {
    return Rational(5) - Rational(4) * sum;
}

double kcbs_from_sum(double sum) {
    return 5.0 - 4.0 * sum;
}

BoundReport make_bound_report(const WeightedEventFamily& family, std::optional<double> quantum) {
    BoundReport rep;
    rep.classical_max = classical_max(family);
    LogicMaxResult lm = logic_max(family);
    rep.logic_max = lm.value;
    rep.logic_maximizers = std::move(lm.maximizers);
    rep.quantum_value = quantum;
    if (rep.classical_max > rep.logic_max) {
        throw InvariantBreach("classical bound " + to_string(rep.classical_max) +
                              " exceeds logic bound " + to_string(rep.logic_max));
    }
    if (quantum) {
        double ceiling = static_cast<double>(rep.logic_max) + 1e-9;
        if (*quantum > ceiling) {
            throw InvariantBreach("quantum value " + format_float(*quantum) +
                                  " exceeds logic bound " + to_string(rep.logic_max));
        }
    }
    return rep;
}

}  // namespace qlogic
