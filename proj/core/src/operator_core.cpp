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

#include "optpovm/operator_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace optpovm {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix is " +
                                std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", expected square");
  }
}

}  // namespace

double hermiticity_defect(const ComplexMatrix& m) {
  require_square(m, "hermiticity_defect");
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  require_square(m, "is_hermitian");
  return hermiticity_defect(m) <= tol;
}

EigenDecomposition eigh(const ComplexMatrix& m) {
  require_square(m, "eigh");
  const double scale = std::max(1.0, m.norm());
  if (!is_hermitian(m, 1e-10 * scale)) {
    throw std::invalid_argument("eigh: matrix is not Hermitian");
  }
  // Symmetrize so the solver sees an exactly Hermitian input.
  const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigh: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const ComplexMatrix& m) {
  if (m.rows() == 0) {
    throw std::invalid_argument("min_eigenvalue: empty matrix");
  }
  return eigh(m).eigenvalues(0);
}

double max_eigenvalue(const ComplexMatrix& m) {
  if (m.rows() == 0) {
    throw std::invalid_argument("max_eigenvalue: empty matrix");
  }
  const auto ed = eigh(m);
  return ed.eigenvalues(ed.eigenvalues.size() - 1);
}

ComplexMatrix outer(const StateVector& v) { return v * v.adjoint(); }

double identity_residual(const ComplexMatrix& m) {
  require_square(m, "identity_residual");
  return (m - ComplexMatrix::Identity(m.rows(), m.cols())).norm();
}

bool all_finite(const ComplexMatrix& m) {
  return std::all_of(m.data(), m.data() + m.size(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix diagonal_matrix(const std::vector<double>& diag) {
  const auto n = static_cast<Eigen::Index>(diag.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = diag[static_cast<size_t>(i)];
  return m;
}

}  // namespace optpovm
