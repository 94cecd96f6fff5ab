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
 * @file fidelity_kernel.hpp
 * The fidelity kernel
 *
 *     F = \int dmu(x) U^N(x) Omega_0 U^N(x)^dagger  |<psi_0| U(x) |psi_0>|^2
 *
 * over the uniform prior on the group, which turns the mean fidelity of a
 * measurement into sum_r Tr[O_r U_r F U_r^dagger]. Built in closed form for
 * both families and by exact group quadrature as an independent check.
 *
 * Measures are normalized to unit mass: sin(theta) dtheta dpsi / (4 pi) on
 * the SU(2) coset (the Bloch sphere) and dpsi / (2 pi) for U(1).
 */

#include <functional>
#include <vector>

#include "optpovm/operator_core.hpp"
#include "optpovm/su2_rep.hpp"

namespace optpovm {

enum class Provenance { ANALYTIC, QUADRATURE };

struct FidelityOperator {
  RepDescriptor rep;
  ComplexMatrix matrix;
  double lambda_max = 0.0;
  Provenance provenance = Provenance::ANALYTIC;
};

/// Reference state of one copy (rho0_single = |psi_0><psi_0|) and of all N
/// copies in the symmetric subspace (omega0).
///  - SU2_COSET: psi_0 = |up>, omega0 = |N/2, N/2>.
///  - U1: psi_0 = (|0> + |1>)/sqrt(2), omega0_m = sqrt(C(N, m)) / 2^{N/2}.
struct ReferenceState {
  RepDescriptor rep;
  StateVector omega0;
  StateVector psi0_single;
  ComplexMatrix rho0_single;
};

[[nodiscard]] ReferenceState reference_state(const RepDescriptor& rep);

/// Node counts of a product quadrature over the group. `theta_nodes` is the
/// Gauss-Legendre order in cos(theta) and is ignored for U1.
struct GroupQuadratureOrder {
  int theta_nodes = 0;
  int psi_nodes = 0;

  friend bool operator==(const GroupQuadratureOrder&, const GroupQuadratureOrder&) = default;
};

struct GroupNode {
  GroupPoint point;
  double weight = 0.0;
};

/// Quadrature nodes whose weights sum to 1 (normalized Haar measure).
/// Ordered theta-major, then psi, and always enumerated in the same order.
[[nodiscard]] std::vector<GroupNode> group_quadrature(RepKind kind, GroupQuadratureOrder order);

/// Orders that integrate both the kernel and the mean-fidelity integrand
/// exactly for N copies: theta N+2 Gauss-Legendre nodes, psi N+3 nodes.
[[nodiscard]] GroupQuadratureOrder exact_quadrature_order(const RepDescriptor& rep);

/// Single-copy fidelity |<psi_0| U(guess)^dagger U(x) |psi_0>|^2.
[[nodiscard]] double single_copy_fidelity(RepKind kind, const GroupPoint& guess,
                                          const GroupPoint& x);

/// Diagonal kernel F_{m,m} = (N/2 + m + 1) / ((N+2)(N+1)).
[[nodiscard]] FidelityOperator f_su2_analytic(int n_copies);

/// Kernel by quadrature with `order` Gauss-Legendre nodes in cos(theta) and
/// `order` uniform nodes in psi. Exact once order >= N+2.
[[nodiscard]] FidelityOperator f_su2_quadrature(int n_copies, int order);

/// Tridiagonal kernel
/// F_{m,n} = sqrt(C(N,m) C(N,n)) / 2^{N+2} * (2 delta_{m,n} + delta_{m,n+1} + delta_{m+1,n}).
[[nodiscard]] FidelityOperator f_u1_analytic(int n_copies);

/// Kernel by the uniform rule on the circle; exact once num_nodes >= N+2.
[[nodiscard]] FidelityOperator f_u1_quadrature(int n_copies, int num_nodes);

/// Analytic kernel for the representation's family.
[[nodiscard]] FidelityOperator analytic_kernel(const RepDescriptor& rep);

/// Upper bound lambda_max * d on the mean fidelity of any measurement.
[[nodiscard]] double upper_bound(const FidelityOperator& f);

/// Binomial coefficient as a double (exact for the sizes used here).
[[nodiscard]] double binomial(int n, int k);

}  // namespace optpovm
