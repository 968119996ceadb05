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

#include "qlogic/linprog.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

#include "qlogic/errors.hpp"

namespace qlogic {

const char* to_string(LpStatus s) {
    switch (s) {
        case LpStatus::Optimal:
            return "optimal";
        case LpStatus::Infeasible:
            return "infeasible";
        case LpStatus::Unbounded:
            return "unbounded";
    }
    return "?";
}

namespace {

void validate_rows(size_t n_vars, const std::vector<Constraint>& constraints) {
    if (n_vars == 0) {
        throw InputError("linear program with no variables");
    }
    if (constraints.empty()) {
        throw InputError("linear program with no constraints");
    }
    for (size_t i = 0; i < constraints.size(); ++i) {
        if (constraints[i].coeffs.size() != n_vars) {
            throw DimensionMismatchError("constraint row " + std::to_string(i) + " has " +
                                         std::to_string(constraints[i].coeffs.size()) +
                                         " coefficients, expected " + std::to_string(n_vars));
        }
    }
}

// Dense exact simplex tableau. Columns: structural variables first, then one
// slack per inequality row, then one artificial per row that needs one.
struct Tableau {
    std::vector<std::vector<Rational>> a;  // m x cols
    std::vector<Rational> rhs;             // m
    std::vector<int> basis;                // m, column index of the basic var
    std::vector<Rational> obj;             // reduced costs, cols
    Rational objval;
    std::vector<bool> banned;  // artificials that left the basis for good
    size_t n_structural = 0;
    size_t first_artificial = 0;  // columns >= this are artificial

    size_t cols() const { return obj.size(); }
    size_t rows() const { return a.size(); }

    void pivot(size_t r, size_t j) {
        Rational piv = a[r][j];
        for (auto& v : a[r]) {
            v /= piv;
        }
        rhs[r] /= piv;
        for (size_t i = 0; i < rows(); ++i) {
            if (i == r || a[i][j] == 0) {
                continue;
            }
            Rational f = a[i][j];
            for (size_t k = 0; k < cols(); ++k) {
                if (a[r][k] != 0) {
                    a[i][k] -= f * a[r][k];
                }
            }
            rhs[i] -= f * rhs[r];
        }
        if (obj[j] != 0) {
            Rational f = obj[j];
            for (size_t k = 0; k < cols(); ++k) {
                if (a[r][k] != 0) {
                    obj[k] -= f * a[r][k];
                }
            }
            objval += f * rhs[r];
        }
        basis[r] = static_cast<int>(j);
    }

    // Bland's rule: lowest-index entering column with positive reduced cost;
    // ratio-test ties broken towards the lowest basic variable index. This is
    // what guarantees termination on the (heavily degenerate) state polytopes.
    LpStatus run() {
        for (;;) {
            size_t entering = cols();
            for (size_t j = 0; j < cols(); ++j) {
                if (!banned[j] && obj[j] > 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == cols()) {
                return LpStatus::Optimal;
            }
            size_t leave = rows();
            Rational best_t;
            for (size_t i = 0; i < rows(); ++i) {
                if (a[i][entering] <= 0) {
                    continue;
                }
                Rational t = rhs[i] / a[i][entering];
                if (leave == rows() || t < best_t ||
                    (t == best_t && basis[i] < basis[leave])) {
                    leave = i;
                    best_t = t;
                }
            }
            if (leave == rows()) {
                return LpStatus::Unbounded;
            }
            int old = basis[leave];
            pivot(leave, entering);
            if (static_cast<size_t>(old) >= first_artificial) {
                banned[static_cast<size_t>(old)] = true;
            }
        }
    }

    // Reduced costs for cost vector c (indexed over all columns).
    void set_objective(const std::vector<Rational>& c) {
        obj = c;
        objval = 0;
        for (size_t i = 0; i < rows(); ++i) {
            const Rational& cb = c[static_cast<size_t>(basis[i])];
            if (cb == 0) {
                continue;
            }
            for (size_t k = 0; k < cols(); ++k) {
                if (a[i][k] != 0) {
                    obj[k] -= cb * a[i][k];
                }
            }
            objval += cb * rhs[i];
        }
    }
};

Tableau build_tableau(const LinearProgram& lp) {
    const size_t n = lp.variables.size();
    const size_t m = lp.constraints.size();

    // Normalize rows to nonnegative rhs so slacks/artificials start feasible.
    std::vector<std::vector<Rational>> rows(m);
    std::vector<Rational> rhs(m);
    std::vector<Relation> rel(m);
    for (size_t i = 0; i < m; ++i) {
        rows[i] = lp.constraints[i].coeffs;
        rhs[i] = lp.constraints[i].rhs;
        rel[i] = lp.constraints[i].rel;
        if (rhs[i] < 0) {
            for (auto& v : rows[i]) {
                v = -v;
            }
            rhs[i] = -rhs[i];
            if (rel[i] == Relation::LessEq) {
                rel[i] = Relation::GreaterEq;
            } else if (rel[i] == Relation::GreaterEq) {
                rel[i] = Relation::LessEq;
            }
        }
    }

    size_t n_slack = 0, n_art = 0;
    for (size_t i = 0; i < m; ++i) {
        if (rel[i] != Relation::Equal) {
            ++n_slack;
        }
        if (rel[i] != Relation::LessEq) {
            ++n_art;
        }
    }

    Tableau t;
    t.n_structural = n;
    t.first_artificial = n + n_slack;
    const size_t cols = n + n_slack + n_art;
    t.a.assign(m, std::vector<Rational>(cols, Rational(0)));
    t.rhs = rhs;
    t.basis.assign(m, -1);
    t.banned.assign(cols, false);
    t.obj.assign(cols, Rational(0));

    size_t slack = n, art = n + n_slack;
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) {
            t.a[i][j] = rows[i][j];
        }
        switch (rel[i]) {
            case Relation::LessEq:
                t.a[i][slack] = 1;
                t.basis[i] = static_cast<int>(slack++);
                break;
            case Relation::GreaterEq:
                t.a[i][slack++] = -1;
                t.a[i][art] = 1;
                t.basis[i] = static_cast<int>(art++);
                break;
            case Relation::Equal:
                t.a[i][art] = 1;
                t.basis[i] = static_cast<int>(art++);
                break;
        }
    }
    return t;
}

}  // namespace

void validate(const LinearProgram& lp) {
    validate_rows(lp.variables.size(), lp.constraints);
    if (lp.objective.size() != lp.variables.size()) {
        throw DimensionMismatchError("objective has " + std::to_string(lp.objective.size()) +
                                     " coefficients, expected " +
                                     std::to_string(lp.variables.size()));
    }
}

void validate(const Polytope& p) {
    validate_rows(p.variables.size(), p.constraints);
}

LpSolution lp_maximize(const LinearProgram& lp) {
    validate(lp);
    Tableau t = build_tableau(lp);

    // Phase 1: drive the artificial variables to zero.
    if (t.first_artificial < t.cols()) {
        std::vector<Rational> c1(t.cols(), Rational(0));
        for (size_t j = t.first_artificial; j < t.cols(); ++j) {
            c1[j] = -1;
        }
        t.set_objective(c1);
        LpStatus s = t.run();
        (void)s;  // maximizing a bounded-above objective; never unbounded
        if (t.objval != 0) {
            return {LpStatus::Infeasible, Rational(0), {}};
        }
        // Pivot lingering zero-valued artificials out of the basis; a row
        // with no usable column is redundant and gets dropped.
        for (size_t i = t.rows(); i-- > 0;) {
            if (static_cast<size_t>(t.basis[i]) < t.first_artificial) {
                continue;
            }
            size_t j = t.first_artificial;
            for (size_t k = 0; k < t.first_artificial; ++k) {
                if (t.a[i][k] != 0) {
                    j = k;
                    break;
                }
            }
            if (j < t.first_artificial) {
                t.pivot(i, j);
            } else {
                t.a.erase(t.a.begin() + static_cast<long>(i));
                t.rhs.erase(t.rhs.begin() + static_cast<long>(i));
                t.basis.erase(t.basis.begin() + static_cast<long>(i));
            }
        }
        for (auto& row : t.a) {
            row.resize(t.first_artificial);
        }
        t.obj.resize(t.first_artificial);
        t.banned.assign(t.first_artificial, false);
    }

    // Phase 2: the real objective.
    std::vector<Rational> c2(t.cols(), Rational(0));
    for (size_t j = 0; j < t.n_structural; ++j) {
        c2[j] = lp.objective[j];
    }
    t.set_objective(c2);
    if (t.run() == LpStatus::Unbounded) {
        return {LpStatus::Unbounded, Rational(0), {}};
    }

    std::vector<Rational> x(t.n_structural, Rational(0));
    for (size_t i = 0; i < t.rows(); ++i) {
        if (static_cast<size_t>(t.basis[i]) < t.n_structural) {
            x[static_cast<size_t>(t.basis[i])] = t.rhs[i];
        }
    }
    return {LpStatus::Optimal, t.objval, std::move(x)};
}

bool is_feasible(const std::vector<Constraint>& constraints, const std::vector<Rational>& x) {
    for (const auto& v : x) {
        if (v < 0) {
            return false;
        }
    }
    for (const auto& c : constraints) {
        if (c.coeffs.size() != x.size()) {
            throw DimensionMismatchError("is_feasible: row length mismatch");
        }
        Rational lhs = dot(c.coeffs, x);
        switch (c.rel) {
            case Relation::LessEq:
                if (lhs > c.rhs) return false;
                break;
            case Relation::Equal:
                if (lhs != c.rhs) return false;
                break;
            case Relation::GreaterEq:
                if (lhs < c.rhs) return false;
                break;
        }
    }
    return true;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatchError("dot: length mismatch");
    }
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) {
            s += a[i] * b[i];
        }
    }
    return s;
}

namespace {

using Row = std::pair<std::vector<Rational>, Rational>;  // coeffs, rhs

// Exact Gauss-Jordan. Returns the unique solution of an n x n system, or
// nullopt when the rows are dependent.
std::optional<std::vector<Rational>> solve_square(std::vector<Row> rows, size_t n) {
    for (size_t col = 0; col < n; ++col) {
        size_t piv = rows.size();
        for (size_t r = col; r < rows.size(); ++r) {
            if (rows[r].first[col] != 0) {
                piv = r;
                break;
            }
        }
        if (piv == rows.size()) {
            return std::nullopt;
        }
        std::swap(rows[col], rows[piv]);
        Rational p = rows[col].first[col];
        for (auto& v : rows[col].first) {
            v /= p;
        }
        rows[col].second /= p;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == col || rows[r].first[col] == 0) {
                continue;
            }
            Rational f = rows[r].first[col];
            for (size_t k = 0; k < n; ++k) {
                if (rows[col].first[k] != 0) {
                    rows[r].first[k] -= f * rows[col].first[k];
                }
            }
            rows[r].second -= f * rows[col].second;
        }
    }
    std::vector<Rational> x(n);
    for (size_t i = 0; i < n; ++i) {
        x[i] = rows[i].second;
    }
    return x;
}

// Row-reduce the equality system in place; returns an independent generating
// subset, or nullopt when the system is inconsistent (0 = c with c != 0).
std::optional<std::vector<Row>> reduce_equalities(std::vector<Row> rows, size_t n) {
    std::vector<Row> out;
    std::vector<size_t> pivot_col;
    for (auto& row : rows) {
        // Eliminate against the pivots found so far.
        for (size_t b = 0; b < out.size(); ++b) {
            Rational f = row.first[pivot_col[b]];
            if (f == 0) {
                continue;
            }
            for (size_t k = 0; k < n; ++k) {
                if (out[b].first[k] != 0) {
                    row.first[k] -= f * out[b].first[k];
                }
            }
            row.second -= f * out[b].second;
        }
        size_t col = n;
        for (size_t k = 0; k < n; ++k) {
            if (row.first[k] != 0) {
                col = k;
                break;
            }
        }
        if (col == n) {
            if (row.second != 0) {
                return std::nullopt;  // inconsistent
            }
            continue;  // redundant
        }
        Rational p = row.first[col];
        for (auto& v : row.first) {
            v /= p;
        }
        row.second /= p;
        out.push_back(std::move(row));
        pivot_col.push_back(col);
    }
    return out;
}

}  // namespace

std::vector<std::vector<Rational>> enumerate_vertices(const Polytope& p) {
    validate(p);
    const size_t n = p.variables.size();

    // Feasibility probe; an empty system has no vertices, not an error.
    LinearProgram probe{p.variables, std::vector<Rational>(n, Rational(0)), p.constraints};
    if (lp_maximize(probe).status == LpStatus::Infeasible) {
        return {};
    }

    // Boundedness: x >= 0 bounds below, so one LP per coordinate suffices.
    for (size_t i = 0; i < n; ++i) {
        LinearProgram dir = probe;
        dir.objective[i] = 1;
        if (lp_maximize(dir).status == LpStatus::Unbounded) {
            throw UnboundedPolytopeError("polytope unbounded in direction of variable '" +
                                         p.variables[i] + "'");
        }
        dir.objective[i] = 0;
    }

    // Split rows: equalities are active everywhere, so only the bounding
    // hyperplanes of the inequalities and the coordinate planes are chosen.
    std::vector<Row> eq_rows;
    std::vector<Row> choosable;
    for (const auto& c : p.constraints) {
        if (c.rel == Relation::Equal) {
            eq_rows.push_back({c.coeffs, c.rhs});
        } else {
            choosable.push_back({c.coeffs, c.rhs});
        }
    }
    for (size_t i = 0; i < n; ++i) {
        std::vector<Rational> e(n, Rational(0));
        e[i] = 1;
        choosable.push_back({std::move(e), Rational(0)});
    }

    auto reduced = reduce_equalities(std::move(eq_rows), n);
    if (!reduced) {
        return {};  // inconsistent equalities; unreachable after the probe
    }
    const size_t r = reduced->size();
    if (r > n) {
        return {};
    }
    const size_t pick = n - r;

    std::set<std::vector<Rational>> vertices;
    std::vector<size_t> idx(pick);
    for (size_t i = 0; i < pick; ++i) {
        idx[i] = i;
    }
    // Walk all C(choosable, pick) active-set candidates.
    bool more = pick <= choosable.size();
    while (more) {
        std::vector<Row> system = *reduced;
        for (size_t i : idx) {
            system.push_back(choosable[i]);
        }
        if (auto x = solve_square(std::move(system), n)) {
            if (is_feasible(p.constraints, *x)) {
                vertices.insert(std::move(*x));
            }
        }
        // next combination
        size_t k = pick;
        while (k-- > 0) {
            if (idx[k] + (pick - k) < choosable.size()) {
                ++idx[k];
                for (size_t j = k + 1; j < pick; ++j) {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
            if (k == 0) {
                more = false;
            }
        }
        if (pick == 0) {
            break;  // the equalities alone pin the single candidate point
        }
    }
    return {vertices.begin(), vertices.end()};
}

std::vector<std::vector<Rational>> optimal_face(const LinearProgram& lp) {
    LpSolution sol = lp_maximize(lp);
    if (sol.status != LpStatus::Optimal) {
        throw InputError(std::string("optimal_face: program is ") + to_string(sol.status));
    }
    std::vector<std::vector<Rational>> face;
    for (auto& v : enumerate_vertices(Polytope{lp.variables, lp.constraints})) {
        if (dot(lp.objective, v) == sol.value) {
            face.push_back(std::move(v));
        }
    }
    return face;
}

}  // namespace qlogic
