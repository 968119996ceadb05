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

#include "qlogic/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "qlogic/eig.hpp"
#include "qlogic/errors.hpp"
#include "qlogic/format.hpp"

namespace qlogic {

double frobenius_norm(const Eigen::MatrixXcd& m) {
    return m.norm();
}

HermitianMatrix::HermitianMatrix(Eigen::MatrixXcd m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatchError("Hermitian matrix must be square");
    }
    Eigen::MatrixXcd sym = 0.5 * (m + m.adjoint().eval());
    double drift = (m - sym).norm();
    if (drift > kHermitianTol) {
        throw InvariantBreach("anti-Hermitian drift " + format_float(drift) + " exceeds " +
                              format_float(kHermitianTol));
    }
    m_ = std::move(sym);
}

HermitianMatrix HermitianMatrix::zero(int dim) {
    return HermitianMatrix(Eigen::MatrixXcd::Zero(dim, dim));
}

HermitianMatrix HermitianMatrix::identity(int dim) {
    return HermitianMatrix(Eigen::MatrixXcd::Identity(dim, dim));
}

Projector::Projector(const Eigen::MatrixXcd& p) : h_(p) {
    const Eigen::MatrixXcd& m = h_.matrix();
    double idem = (m * m - m).norm();
    if (idem > kProjectorTol) {
        throw InputError("not a projector: ||p^2 - p|| = " + format_float(idem));
    }
    for (double ev : hermitian_eigenvalues(m)) {
        if (std::abs(ev) > kEigenvalue01Tol && std::abs(ev - 1.0) > kEigenvalue01Tol) {
            throw InputError("not a projector: eigenvalue " + format_float(ev));
        }
    }
}

Projector Projector::zero(int dim) {
    return Projector(Eigen::MatrixXcd::Zero(dim, dim));
}

Projector Projector::identity(int dim) {
    return Projector(Eigen::MatrixXcd::Identity(dim, dim));
}

Projector Projector::complement() const {
    return Projector(Eigen::MatrixXcd::Identity(dim(), dim()) - matrix());
}

bool Projector::orthogonal_to(const Projector& other, double tol) const {
    if (other.dim() != dim()) {
        throw DimensionMismatchError("projector dimensions differ");
    }
    return (matrix() * other.matrix()).norm() <= tol;
}

DensityState::DensityState(const Eigen::MatrixXcd& rho) : h_(rho) {
    double tr = h_.matrix().trace().real();
    if (std::abs(tr - 1.0) > kTraceOneTol) {
        throw InputError("density state trace " + format_float(tr) + " != 1");
    }
    double min_ev = smallest_eigenvalue(h_.matrix());
    if (min_ev < -kPsdTol) {
        throw InputError("density state not positive: min eigenvalue " + format_float(min_ev));
    }
}

EventTriple::EventTriple(Projector a, Projector b, Projector c)
    : e1(std::move(a)), e2(std::move(b)), e3(std::move(c)) {
    if (e1.dim() != e2.dim() || e2.dim() != e3.dim()) {
        throw DimensionMismatchError("event triple dimensions differ");
    }
    if (!e1.orthogonal_to(e2) || !e1.orthogonal_to(e3) || !e2.orthogonal_to(e3)) {
        throw NonOrthogonalError("event triple not pairwise orthogonal");
    }
}

double expectation(const DensityState& rho, const HermitianMatrix& x) {
    if (rho.dim() != x.dim()) {
        throw DimensionMismatchError("state and observable dimensions differ");
    }
    return (rho.matrix() * x.matrix()).trace().real();
}

HermitianMatrix u_map(const Projector& e, const HermitianMatrix& x) {
    if (e.dim() != x.dim()) {
        throw DimensionMismatchError("u_map: dimensions differ");
    }
    return HermitianMatrix(e.matrix() * x.matrix() * e.matrix());
}

HermitianMatrix t_map(const Projector& e, const HermitianMatrix& x) {
    if (e.dim() != x.dim()) {
        throw DimensionMismatchError("t_map: dimensions differ");
    }
    return HermitianMatrix(0.5 * (e.matrix() * x.matrix() + x.matrix() * e.matrix()));
}

HermitianMatrix t_map_via_u(const Projector& e, const HermitianMatrix& x) {
    Eigen::MatrixXcd ux = u_map(e, x).matrix();
    Eigen::MatrixXcd ucx = u_map(e.complement(), x).matrix();
    return HermitianMatrix(0.5 * (x.matrix() + ux - ucx));
}

Projector projector_sum(const Projector& a, const Projector& b) {
    if (!a.orthogonal_to(b)) {
        throw NonOrthogonalError("projector_sum of non-orthogonal events");
    }
    return Projector(a.matrix() + b.matrix());
}

double cond_prob(const DensityState& rho, const Projector& e, const Projector& f) {
    double p_e = expectation(rho, e.hermitian());
    if (p_e <= 1e-12) {
        throw ZeroProbabilityError("conditioning event has probability " + format_float(p_e));
    }
    double joint = expectation(rho, u_map(e, f.hermitian()));
    double p = joint / p_e;
    if (p < -kResidualTol || p > 1.0 + kResidualTol) {
        throw InvariantBreach("conditional probability " + format_float(p) + " outside [0,1]");
    }
    return p;
}

namespace {

// mu(U_p f) = trace(p rho p f): the product form of cond. prob. x probability,
// well-defined even when the conditioning event has zero probability.
double conditioned_term(const DensityState& rho, const Projector& p, const Projector& f) {
    return expectation(rho, u_map(p, f.hermitian()));
}

}  // namespace

double sorkin_i3(const DensityState& rho, const EventTriple& t, const Projector& f) {
    if (rho.dim() != t.e1.dim() || f.dim() != t.e1.dim()) {
        throw DimensionMismatchError("sorkin_i3: dimensions differ");
    }
    Projector e12 = projector_sum(t.e1, t.e2);
    Projector e13 = projector_sum(t.e1, t.e3);
    Projector e23 = projector_sum(t.e2, t.e3);
    Projector e123 = projector_sum(e12, t.e3);
    return conditioned_term(rho, e123, f) - conditioned_term(rho, e12, f) -
           conditioned_term(rho, e13, f) - conditioned_term(rho, e23, f) +
           conditioned_term(rho, t.e1, f) + conditioned_term(rho, t.e2, f) +
           conditioned_term(rho, t.e3, f);
}

double sorkin_i2(const DensityState& rho, const Projector& e1, const Projector& e2,
                 const Projector& f) {
    if (rho.dim() != e1.dim() || f.dim() != e1.dim()) {
        throw DimensionMismatchError("sorkin_i2: dimensions differ");
    }
    Projector e12 = projector_sum(e1, e2);
    return conditioned_term(rho, e12, f) - conditioned_term(rho, e1, f) -
           conditioned_term(rho, e2, f);
}

double check_t_additivity(const Projector& e, const Projector& f, const HermitianMatrix& x) {
    if (x.dim() != e.dim()) {
        throw DimensionMismatchError("check_t_additivity: dimensions differ");
    }
    Projector ef = projector_sum(e, f);  // throws NonOrthogonalError if needed
    Eigen::MatrixXcd lhs = t_map(ef, x).matrix();
    Eigen::MatrixXcd rhs = t_map(e, x).matrix() + t_map(f, x).matrix();
    return (lhs - rhs).norm();
}

double PropertyReport::max_residual() const {
    double m = 0.0;
    for (const auto& [name, r] : residuals) {
        m = std::max(m, r);
    }
    return m;
}

std::string PropertyReport::summary() const {
    std::string out;
    for (const auto& [name, r] : residuals) {
        if (!out.empty()) {
            out += ' ';
        }
        out += name + "=" + format_float(r);
    }
    return out;
}

namespace {

// Rank-1 subevent of e, derived deterministically from a sample: the
// normalized image of the sample's first column under e. Nullopt when the
// image is too small to normalize stably.
std::optional<Projector> subevent_of(const Projector& e, const HermitianMatrix& x) {
    Eigen::VectorXcd w = e.matrix() * x.matrix().col(0);
    double n = w.norm();
    if (n <= 1e-8) {
        return std::nullopt;
    }
    return rank_one(w / n);
}

// Conditioned state e rho e / trace(e rho e); nullopt when the probability is
// too small for a numerically stable renormalization.
std::optional<DensityState> conditioned_state(const DensityState& rho, const Projector& e) {
    Eigen::MatrixXcd raw = e.matrix() * rho.matrix() * e.matrix();
    double tr = raw.trace().real();
    if (tr <= 1e-3) {
        return std::nullopt;
    }
    return DensityState(raw / tr);
}

}  // namespace

PropertyReport check_u_properties(const Projector& e, const std::vector<HermitianMatrix>& samples,
                                  const std::vector<DensityState>& states) {
    PropertyReport rep;
    Projector comp = e.complement();
    HermitianMatrix ident = HermitianMatrix::identity(e.dim());

    double idem = 0, fixes_sub = 0, preserve = 0;
    for (const auto& x : samples) {
        HermitianMatrix ux = u_map(e, x);
        idem = std::max(idem, (u_map(e, ux).matrix() - ux.matrix()).norm());
        if (auto f = subevent_of(e, x)) {
            fixes_sub = std::max(fixes_sub, (u_map(e, f->hermitian()).matrix() - f->matrix()).norm());
        }
    }
    for (const auto& rho : states) {
        auto cond = conditioned_state(rho, e);
        if (!cond) {
            continue;
        }
        for (const auto& x : samples) {
            double lhs = expectation(*cond, u_map(e, x));
            double rhs = expectation(*cond, x);
            preserve = std::max(preserve, std::abs(lhs - rhs));
        }
    }
    rep.residuals = {
        {"u_idempotent", idem},
        {"u_unit_to_e", (u_map(e, ident).matrix() - e.matrix()).norm()},
        {"u_fixes_e", (u_map(e, e.hermitian()).matrix() - e.matrix()).norm()},
        {"u_kills_orthogonal", u_map(e, comp.hermitian()).matrix().norm()},
        {"u_fixes_subevents", fixes_sub},
        {"u_preserves_certain_states", preserve},
    };
    return rep;
}

PropertyReport check_t_properties(const Projector& e, const std::vector<HermitianMatrix>& samples,
                                  const std::vector<DensityState>& states) {
    PropertyReport rep;
    Projector comp = e.complement();
    HermitianMatrix ident = HermitianMatrix::identity(e.dim());

    double agree = 0, preserve = 0;
    for (const auto& x : samples) {
        agree = std::max(agree, (t_map(e, x).matrix() - t_map_via_u(e, x).matrix()).norm());
    }
    for (const auto& rho : states) {
        auto cond = conditioned_state(rho, e);
        if (!cond) {
            continue;
        }
        for (const auto& x : samples) {
            double lhs = expectation(*cond, t_map(e, x));
            double rhs = expectation(*cond, x);
            preserve = std::max(preserve, std::abs(lhs - rhs));
        }
    }
    rep.residuals = {
        {"t_unit_to_e", (t_map(e, ident).matrix() - e.matrix()).norm()},
        {"t_fixes_e", (t_map(e, e.hermitian()).matrix() - e.matrix()).norm()},
        {"t_kills_orthogonal", t_map(e, comp.hermitian()).matrix().norm()},
        {"t_form_agreement", agree},
        {"t_preserves_certain_states", preserve},
    };
    return rep;
}

Eigen::VectorXcd random_unit_vector(int dim, Rng& rng) {
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) {
        v(i) = std::complex<double>(rng.next_gaussian(), rng.next_gaussian());
    }
    double n = v.norm();
    while (n <= 1e-12) {  // essentially impossible, but stay total
        for (int i = 0; i < dim; ++i) {
            v(i) = std::complex<double>(rng.next_gaussian(), rng.next_gaussian());
        }
        n = v.norm();
    }
    return v / n;
}

HermitianMatrix random_hermitian(int dim, Rng& rng) {
    Eigen::MatrixXcd g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = std::complex<double>(rng.next_gaussian(), rng.next_gaussian());
        }
    }
    return HermitianMatrix(0.5 * (g + g.adjoint().eval()));
}

DensityState random_density(int dim, Rng& rng) {
    Eigen::MatrixXcd g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = std::complex<double>(rng.next_gaussian(), rng.next_gaussian());
        }
    }
    Eigen::MatrixXcd rho = g * g.adjoint();
    return DensityState(rho / rho.trace().real());
}

Eigen::MatrixXcd random_unitary(int dim, Rng& rng) {
    Eigen::MatrixXcd g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = std::complex<double>(rng.next_gaussian(), rng.next_gaussian());
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    return qr.householderQ();
}

Projector rank_one(const Eigen::VectorXcd& unit_vector) {
    return Projector(unit_vector * unit_vector.adjoint());
}

Projector random_projector(int dim, Rng& rng) {
    int rank = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(dim)));
    Eigen::MatrixXcd q = random_unitary(dim, rng);
    Eigen::MatrixXcd cols = q.leftCols(rank);
    return Projector(cols * cols.adjoint());
}

EventTriple random_orthogonal_triple(int dim, Rng& rng) {
    if (dim < 3) {
        throw InputError("orthogonal triples need dimension >= 3");
    }
    // All rank splits (r1, r2, r3) with each >= 1 and sum <= dim.
    std::vector<std::array<int, 3>> splits;
    for (int r1 = 1; r1 <= dim - 2; ++r1) {
        for (int r2 = 1; r1 + r2 <= dim - 1; ++r2) {
            for (int r3 = 1; r1 + r2 + r3 <= dim; ++r3) {
                splits.push_back({r1, r2, r3});
            }
        }
    }
    auto ranks = splits[rng.next_below(splits.size())];
    Eigen::MatrixXcd q = random_unitary(dim, rng);
    int off = 0;
    std::vector<Projector> ps;
    for (int r : ranks) {
        Eigen::MatrixXcd cols = q.middleCols(off, r);
        ps.push_back(Projector(cols * cols.adjoint()));
        off += r;
    }
    return EventTriple(ps[0], ps[1], ps[2]);
}

I2Witness i2_witness() {
    Eigen::VectorXcd psi(3);
    psi << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.0;
    Eigen::MatrixXcd e1 = Eigen::MatrixXcd::Zero(3, 3);
    e1(0, 0) = 1.0;
    Eigen::MatrixXcd e2 = Eigen::MatrixXcd::Zero(3, 3);
    e2(1, 1) = 1.0;
    return I2Witness{
        DensityState(psi * psi.adjoint()),
        Projector(e1),
        Projector(e2),
        rank_one(psi),
        0.5,
        "dim=3 rho=|psi><psi| f=|phi><phi| psi=phi=(1,1,0)/sqrt2 e1=|0><0| e2=|1><1|",
    };
}

}  // namespace qlogic
