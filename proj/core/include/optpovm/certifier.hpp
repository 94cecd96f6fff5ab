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
 * @file certifier.hpp
 * Independent checks on a measurement: completeness, positivity, rank-1
 * consistency, and the mean fidelity evaluated two ways:
 *
 *  - analytic: sum_r Tr[O_r U_r F U_r^dagger] with the closed-form kernel;
 *  - direct:   the defining group average
 *              sum_r \int dmu(x) Tr[O_r U^N(x) Omega_0 U^N(x)^dagger]
 *                                |<psi_0|U(x_r)^dagger U(x)|psi_0>|^2
 *              by exact product quadrature.
 */

#include <optional>
#include <string>
#include <vector>

#include "optpovm/fidelity_kernel.hpp"
#include "optpovm/povm.hpp"

namespace optpovm {

struct CompletenessCheck {
  double residual = 0.0;     ///< ||sum_r O_r - 1||_F
  double min_eigenvalue = 0.0;  ///< minimum over elements
};

/// Throws std::invalid_argument if any element is not rep.dim square.
[[nodiscard]] CompletenessCheck verify_povm(const POVM& p);

/// sum_r Tr[O_r U_r F U_r^dagger]. Throws std::invalid_argument on a
/// representation mismatch.
[[nodiscard]] double mean_fidelity_analytic(const POVM& p, const FidelityOperator& f);

/// Group average of the outcome-weighted single-copy fidelity.
[[nodiscard]] double mean_fidelity_direct(const POVM& p, const ReferenceState& ref,
                                          GroupQuadratureOrder order);

struct ExtendedOperator {
  ComplexMatrix matrix;
  GroupPoint guess;
};

/// Replicates every operator over the one-parameter subgroup
/// U(phi) = diag(exp(i omega_m phi)):
///
///     O'_{rs} = (1/S) U(phi_s) O_r U(phi_s)^dagger,   S = phis.size(),
///
/// with guesses composed along psi (guess_r.psi + phi_s). `omegas` must be
/// the psi_generator() of the representation the guesses live in.
/// Throws std::invalid_argument for degenerate omegas, or for phis whose
/// character sums (1/S) sum_s exp(i phi_s (w_m - w_n)) are not delta_{m,n}
/// within 1e-12.
[[nodiscard]] std::vector<ExtendedOperator> extend_ansatz(const std::vector<ComplexMatrix>& ops,
                                                          const std::vector<GroupPoint>& guesses,
                                                          const std::vector<double>& omegas,
                                                          const std::vector<double>& phis);

struct CertifyOptions {
  double tolerance = 1e-10;
  /// Unset: exact_quadrature_order(rep).
  std::optional<GroupQuadratureOrder> quadrature;
};

struct CertificationTolerances {
  double completeness = 0.0;
  double positivity = 0.0;
  double rank_one = 0.0;
  double fidelity_agreement = 0.0;
  double attainment = 1e-8;
  double bound_slack = 1e-12;
};

struct CertificationReport {
  RepDescriptor rep;
  std::size_t element_count = 0;
  double completeness_residual = 0.0;
  double min_element_eigenvalue = 0.0;
  double max_rank_one_defect = 0.0;
  double mean_fidelity_analytic = 0.0;
  double mean_fidelity_quadrature = 0.0;
  std::optional<double> bound_massar_popescu;  ///< (N+1)/(N+2), SU2 only
  double bound_lambda_d = 0.0;
  bool attained = false;  ///< SU2 only
  std::string grid_used;
  GroupQuadratureOrder quadrature;
  CertificationTolerances tolerances;
  std::vector<std::string> failures;

  [[nodiscard]] bool passed() const { return failures.empty(); }
};

/// Runs every check and records which predicates failed.
[[nodiscard]] CertificationReport certify(const POVM& p, const CertifyOptions& options = {});

}  // namespace optpovm
