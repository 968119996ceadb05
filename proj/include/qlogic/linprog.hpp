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

#ifndef QLOGIC_LINPROG_HPP
#define QLOGIC_LINPROG_HPP

#include <string>
#include <vector>

#include "qlogic/rational.hpp"

namespace qlogic {

enum class Relation { LessEq, Equal, GreaterEq };

struct Constraint {
    std::vector<Rational> coeffs;
    Relation rel = Relation::LessEq;
    Rational rhs;
};

/// maximize objective . x  subject to  the constraints and x >= 0.
struct LinearProgram {
    std::vector<std::string> variables;
    std::vector<Rational> objective;
    std::vector<Constraint> constraints;
};

/// H-representation of {x >= 0 : constraints hold}; a LinearProgram without
/// an objective.
struct Polytope {
    std::vector<std::string> variables;
    std::vector<Constraint> constraints;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational value;               // meaningful when status == Optimal
    std::vector<Rational> point;  // meaningful when status == Optimal
};

const char* to_string(LpStatus s);

/// Throws DimensionMismatchError on ragged rows, InputError on an empty
/// constraint list or an objective of the wrong length.
void validate(const LinearProgram& lp);
void validate(const Polytope& p);

/// Exact two-phase primal simplex over rationals.
///
/// Pivoting uses Bland's anti-cycling rule in both phases (lowest-index
/// entering column with positive reduced cost; ties in the ratio test broken
/// towards the lowest basic variable index), so termination does not depend
/// on nondegeneracy. The returned point satisfies every constraint exactly.
LpSolution lp_maximize(const LinearProgram& lp);

/// Exact substitution check of x >= 0 and every constraint row.
bool is_feasible(const std::vector<Constraint>& constraints, const std::vector<Rational>& x);

/// All vertices of a bounded polytope, deduplicated and sorted
/// lexicographically. Returns {} when the system is infeasible; throws
/// UnboundedPolytopeError when some coordinate direction is unbounded
/// (checked with one LP per coordinate before enumerating).
///
/// Enumeration is exhaustive over basic solutions: the equality rows are
/// reduced to an independent set of rank r, and every (n - r)-subset of the
/// remaining bounding hyperplanes (inequality rows at their bound plus the
/// coordinate planes x_i = 0) is solved exactly and kept when feasible. The
/// cost is C(m + n, n - r) rational n x n solves, which is fine at desk scale
/// (<= ~20 variables, <= ~30 rows) and no further.
std::vector<std::vector<Rational>> enumerate_vertices(const Polytope& p);

/// Vertices of lp's feasible region that attain the exact optimum.
/// Throws InputError when the program is infeasible or unbounded; the region
/// itself must be bounded (same contract as enumerate_vertices).
std::vector<std::vector<Rational>> optimal_face(const LinearProgram& lp);

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace qlogic

#endif
