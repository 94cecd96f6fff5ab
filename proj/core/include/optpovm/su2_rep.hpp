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
 * @file su2_rep.hpp
 * Group representations acting on the totally symmetric subspace of N
 * two-level systems (dimension d = N+1):
 *
 *  - SU2_COSET: the spin-N/2 representation restricted to the coset
 *    (theta, psi, chi = 0). Basis |N/2, m>, m = -N/2..N/2, stored at index
 *    m + N/2. Matrix elements D_{m,n}(theta, psi) = exp(-i m psi) d_{m,n}(theta).
 *  - U1: phase rotations diag(exp(i m psi)), m = 0..N (number of excited
 *    qubits).
 *
 * Wigner small-d convention: d^j_{m,n}(theta) = <j m| exp(-i theta J_y) |j n>
 * with Condon-Shortley phases, so d^{1/2}_{1/2,1/2} = cos(theta/2) and
 * d^{1/2}_{-1/2,1/2} = sin(theta/2).
 */

#include <string>
#include <string_view>
#include <vector>

#include "optpovm/operator_core.hpp"

namespace optpovm {

enum class RepKind { SU2_COSET, U1 };

[[nodiscard]] std::string_view to_string(RepKind kind);
/// Accepts "SU2_COSET"/"su2" and "U1"/"u1". Throws std::invalid_argument.
[[nodiscard]] RepKind rep_kind_from_string(std::string_view s);

/// Point of the group (SU2 coset angles, or a U(1) phase in `psi` with
/// theta unused and kept at 0).
struct GroupPoint {
  double theta = 0.0;  ///< [0, pi]
  double psi = 0.0;    ///< [0, 2 pi)

  friend bool operator==(const GroupPoint&, const GroupPoint&) = default;
};

/// Maps an angle into [0, 2 pi). Values within 1e-13 of 2 pi map to 0.
[[nodiscard]] double wrap_angle(double a);

struct RepDescriptor {
  RepKind kind = RepKind::SU2_COSET;
  int n_copies = 1;
  int dim = 2;  ///< N + 1
  /// Generator eigenvalues, strictly increasing: m = -N/2..N/2 (SU2) or
  /// m = 0..N (U1).
  std::vector<double> generator_eigenvalues;
  int single_system_dim = 2;

  friend bool operator==(const RepDescriptor&, const RepDescriptor&) = default;
};

/// Throws std::invalid_argument for n_copies < 1.
[[nodiscard]] RepDescriptor make_rep(RepKind kind, int n_copies);

/// Wigner small-d element d^j_{m,n}(theta), all quantum numbers doubled.
/// Explicit factorial sum, evaluated in extended precision with log-gamma
/// factorials. Throws std::invalid_argument on out-of-range or
/// parity-mismatched indices.
[[nodiscard]] double wigner_d(int two_j, int two_m, int two_n, double theta);

/// (N+1)x(N+1) matrix exp(-i m psi) d^{N/2}_{m,n}(theta). Requires SU2_COSET.
[[nodiscard]] ComplexMatrix rotation_matrix(const RepDescriptor& rep,
                                            const GroupPoint& g);

/// diag(exp(i m psi)), m = 0..N. Requires U1.
[[nodiscard]] ComplexMatrix phase_rotation_matrix(const RepDescriptor& rep,
                                                  double psi);

/// Dispatches to rotation_matrix or phase_rotation_matrix.
[[nodiscard]] ComplexMatrix representation_matrix(const RepDescriptor& rep,
                                                  const GroupPoint& g);

/// Eigenvalues w_m such that representation_matrix(rep, {0, psi}) equals
/// diag(exp(i w_m psi)): -m for SU2_COSET, m for U1.
[[nodiscard]] std::vector<double> psi_generator(const RepDescriptor& rep);

/// Group point of the product g1 * g2, as seen on the reference state:
/// U(result)|ref> equals U(g1) U(g2)|ref> up to a global phase.
[[nodiscard]] GroupPoint compose(RepKind kind, const GroupPoint& g1,
                                 const GroupPoint& g2);

}  // namespace optpovm
