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

#ifndef QLOGIC_EIG_HPP
#define QLOGIC_EIG_HPP

#include <vector>

#include <Eigen/Dense>

namespace qlogic {

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi sweeps, ascending.
/// Sweeps run until the off-diagonal Frobenius norm is <= off_tol (absolute).
/// Throws InvariantBreach if convergence is not reached within 100 sweeps,
/// which does not happen for the desk-scale matrices this library handles.
std::vector<double> jacobi_symmetric_eigenvalues(Eigen::MatrixXd s, double off_tol = 1e-12);

/// Eigenvalues of a complex Hermitian matrix, ascending. Solved by the real
/// embedding: h = a + ib maps to the symmetric 2n x 2n block matrix
/// [[a, -b], [b, a]], whose spectrum is that of h with every eigenvalue
/// doubled; pairs are collapsed after the symmetric solve.
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& h, double off_tol = 1e-12);

double largest_eigenvalue(const Eigen::MatrixXcd& h);
double smallest_eigenvalue(const Eigen::MatrixXcd& h);

}  // namespace qlogic

#endif
