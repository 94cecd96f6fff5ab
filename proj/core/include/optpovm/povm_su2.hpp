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
 * @file povm_su2.hpp
 * Finite optimal measurement for estimating a pure qubit state from N
 * identical copies.
 *
 * Construction: pick N+1 polar angles theta_r, solve the N+1 diagonal
 * completeness conditions
 *
 *     sum_r c_r^2 [d^{N/2}_{m,N/2}(theta_r)]^2 = 1,   m = -N/2..N/2,
 *
 * for the weights c_r^2, then replicate every polar direction over the
 * N+1 azimuths psi_s = 2 pi s / (N+1). The azimuthal roots-of-unity sum
 * cancels every off-diagonal term, so the (N+1)^2 elements
 * (c_r^2 / (N+1)) |theta_r, psi_s><theta_r, psi_s| resolve the identity.
 * Each element projects onto a rotated highest-weight state |N/2, N/2>,
 * which attains the bound (N+1)/(N+2).
 */

#include <string_view>
#include <vector>

#include "optpovm/povm.hpp"

namespace optpovm {

enum class ThetaGrid {
  Endpoint,   ///< theta_r = r pi / N, r = 0..N
  Chebyshev,  ///< theta_r = pi (r + 1/2) / (N + 1), r = 0..N
};

[[nodiscard]] std::string_view to_string(ThetaGrid grid);
[[nodiscard]] ThetaGrid theta_grid_from_string(std::string_view s);

/// N+1 polar angles on the requested grid.
[[nodiscard]] std::vector<double> choose_thetas(int n_copies, ThetaGrid grid = ThetaGrid::Endpoint);

/// Weights c_r^2 solving the diagonal completeness system. Weights in
/// [-1e-12, 0) are clamped to 0.
/// Throws ConstructionError for a singular design or a residual above 1e-12,
/// NegativeWeightsError if some weight falls below -1e-9.
[[nodiscard]] std::vector<double> solve_weights(int n_copies, const std::vector<double>& thetas);

/// psi_s = 2 pi s / (N+1), s = 0..N.
[[nodiscard]] std::vector<double> psi_angles(int n_copies);

/// The (N+1)^2-element optimal measurement. If the requested grid yields
/// negative weights and `allow_fallback` is set, the Chebyshev grid is tried
/// and the substitution is recorded in POVM::grid.
[[nodiscard]] POVM build_povm_su2(int n_copies, ThetaGrid grid = ThetaGrid::Endpoint,
                                  bool allow_fallback = true);

}  // namespace optpovm
