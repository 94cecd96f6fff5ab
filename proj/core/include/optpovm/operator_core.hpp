// Copyright 2026 The optpovm Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * @file operator_core.hpp
 * Dense complex matrices and state vectors, plus the Hermitian / spectral /
 * positivity predicates used throughout the library.
 *
 * Dimensions in this library are small (d = N+1, a few dozen at most), so
 * everything is dense and row-major.
 */

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace optpovm {

using Complex = std::complex<double>;

/// Row-major dense complex matrix.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Column of complex amplitudes. Normalization is a convention of the
/// caller, not an invariant of the type.
using StateVector = Eigen::VectorXcd;

/// Ascending eigenvalues with matching orthonormal eigenvectors
/// (eigenvector i is column i of `eigenvectors`).
struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;
  ComplexMatrix eigenvectors;

  [[nodiscard]] StateVector eigenvector(Eigen::Index i) const {
    return eigenvectors.col(i);
  }
};

/// True iff max |m(i,j) - conj(m(j,i))| <= tol. Throws std::invalid_argument
/// for a non-square matrix.
[[nodiscard]] bool is_hermitian(const ComplexMatrix& m, double tol);

/// Largest per-entry deviation from Hermiticity.
[[nodiscard]] double hermiticity_defect(const ComplexMatrix& m);

/// Spectral decomposition of a Hermitian matrix. Throws std::invalid_argument
/// if `m` is not Hermitian within `1e-10 * max(1, ||m||_F)`.
[[nodiscard]] EigenDecomposition eigh(const ComplexMatrix& m);

/// Smallest eigenvalue of a Hermitian matrix.
[[nodiscard]] double min_eigenvalue(const ComplexMatrix& m);

/// Largest eigenvalue of a Hermitian matrix.
[[nodiscard]] double max_eigenvalue(const ComplexMatrix& m);

/// |v><v| (no normalization applied).
[[nodiscard]] ComplexMatrix outer(const StateVector& v);

/// Frobenius norm of `m - identity`.
[[nodiscard]] double identity_residual(const ComplexMatrix& m);

/// True iff every entry is finite.
[[nodiscard]] bool all_finite(const ComplexMatrix& m);

/// Matrix with the given entries on the diagonal.
[[nodiscard]] ComplexMatrix diagonal_matrix(const std::vector<double>& diag);

}  // namespace optpovm
