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

#ifndef QLOGIC_BOUNDS_HPP
#define QLOGIC_BOUNDS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qlogic/hilbert.hpp"
#include "qlogic/linprog.hpp"
#include "qlogic/logic.hpp"
#include "qlogic/rational.hpp"

namespace qlogic {

/// A weighted family of atomic events of one logic; the object whose weighted
/// probability sum is bounded at the classical, logic, and matrix-model tiers.
struct WeightedEventFamily {
    GreechieLogic logic;
    std::vector<int> events;        // atom indices
    std::vector<Rational> weights;  // same length as events
};

/// Validates names and lengths; unit weights when `weights` is empty.
WeightedEventFamily make_family(GreechieLogic logic, const std::vector<std::string>& event_atoms,
                                std::vector<Rational> weights = {});

/// The family's orthogonality pattern: adjacency among the events themselves.
std::vector<std::vector<bool>> family_adjacency(const WeightedEventFamily& family);

/// H-representation of the state space: one equality per block (sum = 1)
/// plus nonnegativity.
Polytope state_polytope(const GreechieLogic& logic);

/// The LP "maximize sum_k w_k mu(e_k) over all states".
LinearProgram state_lp(const WeightedEventFamily& family);

struct LogicMaxResult {
    Rational value;
    std::vector<LogicState> maximizers;  // vertices of the optimal face
};

/// Exact optimum of the weighted sum over the state polytope, with all
/// maximizing vertices. Throws InfeasibleLogicError when the logic admits
/// no states.
LogicMaxResult logic_max(const WeightedEventFamily& family);

/// Classical ceiling: max over independent sets S of the event adjacency of
/// sum_{k in S} w_k. Deterministic classical assignments put probability 1 on
/// pairwise non-exclusive events and dominate all mixtures. Exhaustive over
/// the 2^k subsets; fine for desk-scale families only.
Rational classical_max(const std::vector<std::vector<bool>>& adjacency,
                       const std::vector<Rational>& weights);
Rational classical_max(const WeightedEventFamily& family);

/// Value of a projector realization of the family: when a state is given,
/// trace(rho sum_k w_k p_k); otherwise the best over all states, i.e. the
/// largest eigenvalue of the weighted projector sum. The realization must
/// reproduce the family's orthogonality pattern: || p_i p_j ||_F <= 1e-9 for
/// every adjacent pair (OrthogonalityPatternError otherwise).
double quantum_value(const std::vector<Projector>& projectors,
                     const std::vector<std::vector<bool>>& adjacency,
                     const std::vector<double>& weights,
                     const std::optional<DensityState>& state = std::nullopt);

/// Adjacency of the n-cycle (the pentagon pattern for n = 5).
std::vector<std::vector<bool>> cycle_adjacency(int n);

/// Random search for the best pentagon realization: per trial, five rank-1
/// projectors with the 5-cycle orthogonality pattern are drawn by sequential
/// orthogonalization (each vector in the orthogonal complement of its
/// predecessor, the last one in the complement of both neighbours), and the
/// best largest-eigenvalue of the sum is kept. Deterministic per seed; trial
/// k uses the child stream Rng::child_seed(seed, k). dim must be in [3, 6].
double search_pentagon_projectors(int dim, int trials, std::uint64_t seed);

/// The dimension-3 umbrella realization of the pentagon pattern:
/// v_k = (cos t, sin t cos(4 pi k / 5), sin t sin(4 pi k / 5)) with
/// cos^2 t = cos(pi/5) / (1 + cos(pi/5)). Its quantum_value is sqrt(5).
std::vector<Projector> kcbs_umbrella_projectors();

/// K = 5 - 4 sum_k mu(e_k), the pentagon correlation functional for the
/// +-1-valued observables x_k = 2 e_k - 1 (so sum x_k x_{k+1} has
/// expectation K).
Rational kcbs_value(const std::array<Rational, 5>& event_probs);
Rational kcbs_from_sum(const Rational& sum);
double kcbs_from_sum(double sum);

/// The three-tier summary. Construction enforces the hierarchy invariants:
/// classical_max <= logic_max exactly, and quantum_value <= logic_max + 1e-9
/// when present (InvariantBreach otherwise).
struct BoundReport {
    Rational classical_max;
    Rational logic_max;
    std::vector<LogicState> logic_maximizers;
    std::optional<double> quantum_value;
};

BoundReport make_bound_report(const WeightedEventFamily& family,
                              std::optional<double> quantum = std::nullopt);

}  // namespace qlogic

#endif
