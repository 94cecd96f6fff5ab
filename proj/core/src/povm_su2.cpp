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
#include "optpovm/povm_su2.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "optpovm/errors.hpp"

namespace optpovm {

namespace {

void require_copies(int n_copies, const char* what) {
  if (n_copies < 1) {
    throw std::invalid_argument(std::string(what) + ": N must be >= 1, got " +
                                std::to_string(n_copies));
  }
}

}  // namespace

std::string_view to_string(ThetaGrid grid) {
  return grid == ThetaGrid::Endpoint ? "endpoint" : "chebyshev";
}

ThetaGrid theta_grid_from_string(std::string_view s) {
  if (s == "endpoint") return ThetaGrid::Endpoint;
  if (s == "chebyshev") return ThetaGrid::Chebyshev;
  throw std::invalid_argument("unknown theta grid '" + std::string(s) + "'");
}

std::vector<double> choose_thetas(int n_copies, ThetaGrid grid) {
  require_copies(n_copies, "choose_thetas");
  std::vector<double> thetas;
  thetas.reserve(static_cast<size_t>(n_copies + 1));
  for (int r = 0; r <= n_copies; ++r) {
    thetas.push_back(grid == ThetaGrid::Endpoint ? r * std::numbers::pi / n_copies
                                                 : std::numbers::pi * (r + 0.5) / (n_copies + 1));
  }
  return thetas;
}

std::vector<double> solve_weights(int n_copies, const std::vector<double>& thetas) {
  require_copies(n_copies, "solve_weights");
  const int d = n_copies + 1;
  if (static_cast<int>(thetas.size()) != d) {
    throw std::invalid_argument("solve_weights: expected " + std::to_string(d) + " angles, got " +
                                std::to_string(thetas.size()));
  }
  for (size_t a = 0; a < thetas.size(); ++a) {
    for (size_t b = a + 1; b < thetas.size(); ++b) {
      if (thetas[a] == thetas[b]) throw std::invalid_argument("solve_weights: angles must be distinct");
    }
  }

  // design(m, r) = d^{N/2}_{m, N/2}(theta_r)^2
  Eigen::MatrixXd design(d, d);
  for (int row = 0; row < d; ++row) {
    for (int r = 0; r < d; ++r) {
      const double dm = wigner_d(n_copies, 2 * row - n_copies, n_copies, thetas[static_cast<size_t>(r)]);
      design(row, r) = dm * dm;
    }
  }
  const Eigen::VectorXd rhs = Eigen::VectorXd::Ones(d);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(design);
  lu.setThreshold(1e-14);
  if (!lu.isInvertible()) {
    throw ConstructionError("solve_weights: singular completeness system for N=" +
                            std::to_string(n_copies));
  }
  const Eigen::VectorXd c2 = lu.solve(rhs);
  const double residual = (design * c2 - rhs).cwiseAbs().maxCoeff();
  if (!(residual <= 1e-12)) {
    throw ConstructionError("solve_weights: residual " + std::to_string(residual) +
                            " exceeds 1e-12 for N=" + std::to_string(n_copies));
  }

  std::vector<double> weights(static_cast<size_t>(d));
  for (int r = 0; r < d; ++r) {
    const double w = c2(r);
    if (w < -1e-9) {
      throw NegativeWeightsError("solve_weights: grid yields negative weights (c^2 = " +
                                 std::to_string(w) + " at r=" + std::to_string(r) + ")");
    }
    weights[static_cast<size_t>(r)] = w < 0.0 && w >= -1e-12 ? 0.0 : w;
  }
  return weights;
}

std::vector<double> psi_angles(int n_copies) {
  require_copies(n_copies, "psi_angles");
  std::vector<double> psis;
  for (int s = 0; s <= n_copies; ++s) psis.push_back(2.0 * std::numbers::pi * s / (n_copies + 1));
  return psis;
}

POVM build_povm_su2(int n_copies, ThetaGrid grid, bool allow_fallback) {
  require_copies(n_copies, "build_povm_su2");
  std::vector<double> thetas = choose_thetas(n_copies, grid);
  std::vector<double> weights;
  std::string grid_note{to_string(grid)};
  try {
    weights = solve_weights(n_copies, thetas);
  } catch (const NegativeWeightsError&) {
    if (!allow_fallback || grid == ThetaGrid::Chebyshev) throw;
    thetas = choose_thetas(n_copies, ThetaGrid::Chebyshev);
    weights = solve_weights(n_copies, thetas);
    grid_note = "chebyshev (fallback: endpoint grid gave negative weights)";
  }

  POVM povm;
  povm.rep = make_rep(RepKind::SU2_COSET, n_copies);
  povm.grid = "theta=" + grid_note + ";psi=uniform(" + std::to_string(n_copies + 1) + ")";

  StateVector highest = StateVector::Zero(povm.rep.dim);
  highest(povm.rep.dim - 1) = 1.0;

  const auto psis = psi_angles(n_copies);
  povm.elements.reserve(thetas.size() * psis.size());
  for (size_t r = 0; r < thetas.size(); ++r) {
    for (const double psi : psis) {
      povm.elements.push_back(
          make_element(povm.rep, weights[r] / (n_copies + 1), {thetas[r], psi}, highest));
    }
  }
  return povm;
}

}  // namespace optpovm
