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

#include "qlogic/eig.hpp"

#include <algorithm>
#include <cmath>

#include "qlogic/errors.hpp"

namespace qlogic {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& s) {
    double sum = 0.0;
    for (Eigen::Index p = 0; p < s.rows(); ++p) {
        for (Eigen::Index q = 0; q < s.cols(); ++q) {
            if (p != q) {
                sum += s(p, q) * s(p, q);
            }
        }
    }
    return std::sqrt(sum);
}

}  // namespace

std::vector<double> jacobi_symmetric_eigenvalues(Eigen::MatrixXd s, double off_tol) {
    const Eigen::Index n = s.rows();
    if (n != s.cols()) {
        throw DimensionMismatchError("jacobi: matrix not square");
    }
    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    while (off_diagonal_norm(s) > off_tol) {
        if (++sweep > kMaxSweeps) {
            throw InvariantBreach("jacobi: no convergence after 100 sweeps");
        }
        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                double apq = s(p, q);
                if (apq == 0.0) {
                    continue;
                }
                // Rotation angle choice of Golub & Van Loan (8.4): the smaller
                // root keeps |t| <= 1 and the iteration stable.
                double tau = (s(q, q) - s(p, p)) / (2.0 * apq);
                double t;
                if (tau >= 0.0) {
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                } else {
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                }
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double sn = t * c;
                // s <- J^T s J with the Givens rotation J in the (p, q) plane.
                for (Eigen::Index k = 0; k < n; ++k) {
                    double skp = s(k, p), skq = s(k, q);
                    s(k, p) = c * skp - sn * skq;
                    s(k, q) = sn * skp + c * skq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    double spk = s(p, k), sqk = s(q, k);
                    s(p, k) = c * spk - sn * sqk;
                    s(q, k) = sn * spk + c * sqk;
                }
            }
        }
    }
    std::vector<double> eigs(static_cast<size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        eigs[static_cast<size_t>(i)] = s(i, i);
    }
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& h, double off_tol) {
    const Eigen::Index n = h.rows();
    if (n != h.cols()) {
        throw DimensionMismatchError("hermitian_eigenvalues: matrix not square");
    }
    Eigen::MatrixXd a = h.real();
    Eigen::MatrixXd b = h.imag();
    Eigen::MatrixXd s(2 * n, 2 * n);
    s << a, -b, b, a;
    std::vector<double> doubled = jacobi_symmetric_eigenvalues(std::move(s), off_tol);
    // The embedding doubles every eigenvalue; collapse adjacent sorted pairs.
    std::vector<double> eigs(static_cast<size_t>(n));
    for (size_t i = 0; i < eigs.size(); ++i) {
        eigs[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    }
    return eigs;
}

double largest_eigenvalue(const Eigen::MatrixXcd& h) {
    return hermitian_eigenvalues(h).back();
}

double smallest_eigenvalue(const Eigen::MatrixXcd& h) {
    return hermitian_eigenvalues(h).front();
}

}  // namespace qlogic
