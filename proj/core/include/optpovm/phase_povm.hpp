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
 * @file phase_povm.hpp
 * Optimal covariant estimation of a U(1) phase imprinted on N qubits, each
 * prepared in (|0> + |1>)/sqrt(2).
 *
 * The optimal seed |Psi> has unit-modulus amplitudes exp(i phi_m) and
 * maximizes g(phi) = <Psi|F|Psi>, subject to |<m|Psi>| = 1 for every m.
 * At a constrained stationary point (F - L)|Psi> = 0 with the diagonal
 * multiplier L_m = Re[conj(Psi_m) (F Psi)_m], and Tr L = g. Rotating the
 * seed over N+1 equally spaced phases gives a projective measurement.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "optpovm/fidelity_kernel.hpp"
#include "optpovm/povm.hpp"

namespace optpovm {

struct LagrangePhaseSolution {
  int n_copies = 0;
  std::vector<double> phases;       ///< gauge phi_0 = 0, each in [0, 2 pi)
  std::vector<double> multipliers;  ///< L_m
  double fidelity = 0.0;            ///< sum_{m,n} F_{m,n} exp(i(phi_n - phi_m))
  StateVector seed_state;           ///< exp(i phi_m); norm^2 = N+1
  double stationarity_residual = 0.0;  ///< ||(F - diag(L)) Psi||
  double min_singular_value = 0.0;     ///< of F - diag(L)
  double gradient_norm = 0.0;
};

struct PhaseOptimizerOptions {
  int random_restarts = 32;
  std::uint64_t seed = 0x5eedf00dULL;
  double gradient_tolerance = 1e-12;
  int max_iterations = 2000;
  double stationarity_tolerance = 1e-8;
};

/// g(phi) for the given kernel.
[[nodiscard]] double phase_objective(const ComplexMatrix& f, const std::vector<double>& phases);

/// Gradient of g: 2 Im[conj(Psi_k) (F Psi)_k].
[[nodiscard]] std::vector<double> phase_gradient(const ComplexMatrix& f,
                                                 const std::vector<double>& phases);

/// Multi-start maximization of g starting from all-zero phases plus
/// `random_restarts` random starts. Ties within 1e-12 in fidelity go to the
/// lexicographically smallest canonical phase vector. Throws SolverError if
/// the winner is not stationary within `stationarity_tolerance`.
[[nodiscard]] LagrangePhaseSolution optimize_phases(const FidelityOperator& f,
                                                    const PhaseOptimizerOptions& options = {});

/// Fills multipliers, fidelity, residuals from the phases alone.
[[nodiscard]] LagrangePhaseSolution evaluate_phases(const FidelityOperator& f,
                                                    std::vector<double> phases);

/// [sum_m 2 C(N,m) + sum_m 2 sqrt(C(N,m) C(N,m+1))] / 2^{N+2}: the value of
/// g at equal phases, which is the maximum because F is entrywise
/// non-negative.
[[nodiscard]] double fidelity_closed_form(int n_copies);

/// The same value as a reduced surd expression, e.g. "(2+sqrt(2))/4".
/// Empty for N > 30.
[[nodiscard]] std::string fidelity_closed_form_expression(int n_copies);

/// N+1 elements (1/(N+1)) U(phi_s)|Psi><Psi|U(phi_s)^dagger, phi_s = 2 pi s/(N+1).
[[nodiscard]] POVM build_vonneumann_povm(const LagrangePhaseSolution& solution);

}  // namespace optpovm
