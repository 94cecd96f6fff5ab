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
#include "optpovm/fidelity_kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "optpovm/quadrature.hpp"

namespace optpovm {

namespace {

void require_copies(int n_copies, const char* what) {
  if (n_copies < 1) {
    throw std::invalid_argument(std::string(what) + ": N must be >= 1, got " +
                                std::to_string(n_copies));
  }
}

FidelityOperator finish(RepDescriptor rep, ComplexMatrix m, Provenance provenance) {
  FidelityOperator f;
  f.rep = std::move(rep);
  f.lambda_max = max_eigenvalue(m);
  f.matrix = std::move(m);
  f.provenance = provenance;
  return f;
}

// Integrates U^N(x) Omega_0 Omega_0^dagger U^N(x)^dagger times the
// single-copy fidelity to the group origin.
ComplexMatrix integrate_kernel(const RepDescriptor& rep, GroupQuadratureOrder order) {
  const auto ref = reference_state(rep);
  ComplexMatrix acc = ComplexMatrix::Zero(rep.dim, rep.dim);
  for (const auto& node : group_quadrature(rep.kind, order)) {
    const StateVector v = representation_matrix(rep, node.point) * ref.omega0;
    const double f = single_copy_fidelity(rep.kind, GroupPoint{}, node.point);
    acc += (node.weight * f) * outer(v);
  }
  return acc;
}

}  // namespace

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

ReferenceState reference_state(const RepDescriptor& rep) {
  ReferenceState ref;
  ref.rep = rep;
  ref.omega0 = StateVector::Zero(rep.dim);
  ref.psi0_single = StateVector::Zero(2);
  if (rep.kind == RepKind::SU2_COSET) {
    ref.omega0(rep.dim - 1) = 1.0;
    ref.psi0_single(1) = 1.0;
  } else {
    const double scale = std::pow(2.0, -0.5 * rep.n_copies);
    for (int m = 0; m < rep.dim; ++m) {
      ref.omega0(m) = std::sqrt(binomial(rep.n_copies, m)) * scale;
    }
    ref.psi0_single(0) = std::numbers::sqrt2 / 2.0;
    ref.psi0_single(1) = std::numbers::sqrt2 / 2.0;
  }
  ref.rho0_single = outer(ref.psi0_single);
  return ref;
}

std::vector<GroupNode> group_quadrature(RepKind kind, GroupQuadratureOrder order) {
  const auto psi_rule = uniform_circle(order.psi_nodes);
  std::vector<GroupNode> nodes;
  if (kind == RepKind::U1) {
    nodes.reserve(psi_rule.size());
    for (size_t k = 0; k < psi_rule.size(); ++k) {
      nodes.push_back({{0.0, psi_rule.nodes[k]}, psi_rule.weights[k]});
    }
    return nodes;
  }
  const auto x_rule = gauss_legendre(order.theta_nodes);
  nodes.reserve(x_rule.size() * psi_rule.size());
  for (size_t i = 0; i < x_rule.size(); ++i) {
    const double theta = std::acos(x_rule.nodes[i]);
    for (size_t k = 0; k < psi_rule.size(); ++k) {
      nodes.push_back({{theta, psi_rule.nodes[k]}, 0.5 * x_rule.weights[i] * psi_rule.weights[k]});
    }
  }
  return nodes;
}

GroupQuadratureOrder exact_quadrature_order(const RepDescriptor& rep) {
  const int n = rep.n_copies;
  return {rep.kind == RepKind::SU2_COSET ? n + 2 : 0, n + 3};
}

double single_copy_fidelity(RepKind kind, const GroupPoint& guess, const GroupPoint& x) {
  const auto one = make_rep(kind, 1);
  const auto ref = reference_state(one);
  const StateVector a = representation_matrix(one, guess) * ref.psi0_single;
  const StateVector b = representation_matrix(one, x) * ref.psi0_single;
  return std::norm(a.dot(b));
}

FidelityOperator f_su2_analytic(int n_copies) {
  require_copies(n_copies, "f_su2_analytic");
  const auto rep = make_rep(RepKind::SU2_COSET, n_copies);
  const double denom = (n_copies + 2.0) * (n_copies + 1.0);
  std::vector<double> diag;
  for (int i = 0; i < rep.dim; ++i) {
    // N/2 + m + 1 with m = i - N/2.
    diag.push_back((i + 1.0) / denom);
  }
  FidelityOperator f;
  f.rep = rep;
  f.matrix = diagonal_matrix(diag);
  f.lambda_max = 1.0 / (n_copies + 2.0);
  f.provenance = Provenance::ANALYTIC;
  return f;
}

FidelityOperator f_su2_quadrature(int n_copies, int order) {
  require_copies(n_copies, "f_su2_quadrature");
  auto rep = make_rep(RepKind::SU2_COSET, n_copies);
  auto m = integrate_kernel(rep, {order, order});
  return finish(std::move(rep), std::move(m), Provenance::QUADRATURE);
}

FidelityOperator f_u1_analytic(int n_copies) {
  require_copies(n_copies, "f_u1_analytic");
  auto rep = make_rep(RepKind::U1, n_copies);
  const double scale = std::pow(2.0, -(n_copies + 2));
  ComplexMatrix m = ComplexMatrix::Zero(rep.dim, rep.dim);
  for (int i = 0; i < rep.dim; ++i) {
    for (int j = std::max(0, i - 1); j <= std::min(rep.dim - 1, i + 1); ++j) {
      const double amp = std::sqrt(binomial(n_copies, n_copies - i) * binomial(n_copies, n_copies - j));
      m(i, j) = scale * amp * (i == j ? 2.0 : 1.0);
    }
  }
  return finish(std::move(rep), std::move(m), Provenance::ANALYTIC);
}

FidelityOperator f_u1_quadrature(int n_copies, int num_nodes) {
  require_copies(n_copies, "f_u1_quadrature");
  auto rep = make_rep(RepKind::U1, n_copies);
  auto m = integrate_kernel(rep, {0, num_nodes});
  return finish(std::move(rep), std::move(m), Provenance::QUADRATURE);
}

FidelityOperator analytic_kernel(const RepDescriptor& rep) {
  return rep.kind == RepKind::SU2_COSET ? f_su2_analytic(rep.n_copies) : f_u1_analytic(rep.n_copies);
}

double upper_bound(const FidelityOperator& f) { return f.lambda_max * f.rep.dim; }

}  // namespace optpovm
