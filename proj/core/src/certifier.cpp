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
#include "optpovm/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace optpovm {

namespace {

void require_same_rep(const RepDescriptor& a, const RepDescriptor& b, const char* what) {
  if (a.kind != b.kind || a.n_copies != b.n_copies || a.dim != b.dim) {
    throw std::invalid_argument(std::string(what) + ": representation mismatch");
  }
}

void require_element_dims(const POVM& p, const char* what) {
  for (const auto& e : p.elements) {
    if (e.matrix.rows() != p.rep.dim || e.matrix.cols() != p.rep.dim) {
      throw std::invalid_argument(std::string(what) + ": element dimension mismatch");
    }
  }
}

}  // namespace

CompletenessCheck verify_povm(const POVM& p) {
  require_element_dims(p, "verify_povm");
  CompletenessCheck check;
  check.residual = identity_residual(p.sum());
  check.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (const auto& e : p.elements) {
    check.min_eigenvalue = std::min(check.min_eigenvalue, min_eigenvalue(e.matrix));
  }
  return check;
}

double mean_fidelity_analytic(const POVM& p, const FidelityOperator& f) {
  require_same_rep(p.rep, f.rep, "mean_fidelity_analytic");
  require_element_dims(p, "mean_fidelity_analytic");
  double total = 0.0;
  for (const auto& e : p.elements) {
    const ComplexMatrix u = representation_matrix(p.rep, e.guess);
    const ComplexMatrix rotated = u * f.matrix * u.adjoint();
    total += std::real((e.matrix * rotated).trace());
  }
  return total;
}

double mean_fidelity_direct(const POVM& p, const ReferenceState& ref, GroupQuadratureOrder order) {
  require_same_rep(p.rep, ref.rep, "mean_fidelity_direct");
  require_element_dims(p, "mean_fidelity_direct");

  const auto single = make_rep(p.rep.kind, 1);
  std::vector<StateVector> guessed;
  guessed.reserve(p.elements.size());
  for (const auto& e : p.elements) {
    guessed.push_back(representation_matrix(single, e.guess) * ref.psi0_single);
  }

  double total = 0.0;
  for (const auto& node : group_quadrature(p.rep.kind, order)) {
    const StateVector state = representation_matrix(p.rep, node.point) * ref.omega0;
    const StateVector one = representation_matrix(single, node.point) * ref.psi0_single;
    double at_node = 0.0;
    for (size_t r = 0; r < p.elements.size(); ++r) {
      const double prob = std::real(state.dot(p.elements[r].matrix * state));
      at_node += prob * std::norm(guessed[r].dot(one));
    }
    total += node.weight * at_node;
  }
  return total;
}

std::vector<ExtendedOperator> extend_ansatz(const std::vector<ComplexMatrix>& ops,
                                            const std::vector<GroupPoint>& guesses,
                                            const std::vector<double>& omegas,
                                            const std::vector<double>& phis) {
  if (ops.size() != guesses.size()) {
    throw std::invalid_argument("extend_ansatz: operator and guess counts differ");
  }
  if (phis.empty()) throw std::invalid_argument("extend_ansatz: no subgroup angles");
  const auto d = static_cast<Eigen::Index>(omegas.size());
  for (const auto& op : ops) {
    if (op.rows() != d || op.cols() != d) {
      throw std::invalid_argument("extend_ansatz: operator dimension does not match omegas");
    }
  }
  for (size_t a = 0; a < omegas.size(); ++a) {
    for (size_t b = a + 1; b < omegas.size(); ++b) {
      if (std::abs(omegas[a] - omegas[b]) < 1e-12) {
        throw std::invalid_argument("extend_ansatz: degenerate generator eigenvalues are not supported");
      }
    }
  }
  const double inv_count = 1.0 / static_cast<double>(phis.size());
  for (size_t a = 0; a < omegas.size(); ++a) {
    for (size_t b = 0; b < omegas.size(); ++b) {
      Complex s = 0.0;
      for (const double phi : phis) s += std::polar(1.0, phi * (omegas[a] - omegas[b]));
      s *= inv_count;
      const double expected = a == b ? 1.0 : 0.0;
      if (std::abs(s - expected) > 1e-12) {
        throw std::invalid_argument("extend_ansatz: angles do not cancel off-diagonal terms");
      }
    }
  }

  std::vector<ExtendedOperator> out;
  out.reserve(ops.size() * phis.size());
  for (size_t r = 0; r < ops.size(); ++r) {
    for (const double phi : phis) {
      StateVector phases(d);
      for (Eigen::Index m = 0; m < d; ++m) phases(m) = std::polar(1.0, omegas[size_t(m)] * phi);
      ComplexMatrix rotated = inv_count * (phases.asDiagonal() * ops[r] * phases.conjugate().asDiagonal());
      out.push_back({std::move(rotated), {guesses[r].theta, wrap_angle(guesses[r].psi + phi)}});
    }
  }
  return out;
}

CertificationReport certify(const POVM& p, const CertifyOptions& options) {
  require_element_dims(p, "certify");
  CertificationReport report;
  report.rep = p.rep;
  report.element_count = p.elements.size();
  report.grid_used = p.grid;
  report.quadrature = options.quadrature.value_or(exact_quadrature_order(p.rep));

  auto& tol = report.tolerances;
  tol.completeness = options.tolerance;
  tol.positivity = options.tolerance;
  tol.rank_one = options.tolerance;
  tol.fidelity_agreement = options.tolerance;

  const auto check = verify_povm(p);
  report.completeness_residual = check.residual;
  report.min_element_eigenvalue = check.min_eigenvalue;
  for (const auto& e : p.elements) {
    report.max_rank_one_defect = std::max(report.max_rank_one_defect, rank_one_defect(p.rep, e));
  }

  const auto kernel = analytic_kernel(p.rep);
  report.mean_fidelity_analytic = mean_fidelity_analytic(p, kernel);
  report.mean_fidelity_quadrature = mean_fidelity_direct(p, reference_state(p.rep), report.quadrature);
  report.bound_lambda_d = upper_bound(kernel);
  if (p.rep.kind == RepKind::SU2_COSET) {
    const double n = p.rep.n_copies;
    report.bound_massar_popescu = (n + 1.0) / (n + 2.0);
    report.attained =
        std::abs(report.mean_fidelity_analytic - *report.bound_massar_popescu) <= tol.attainment;
  }

  auto fail = [&](const std::string& what, double value, double limit) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << ": " << value << " (limit " << limit << ")";
    report.failures.push_back(msg.str());
  };
  if (!(report.completeness_residual <= tol.completeness)) {
    fail("completeness residual", report.completeness_residual, tol.completeness);
  }
  if (!(report.min_element_eigenvalue >= -tol.positivity)) {
    fail("minimum element eigenvalue", report.min_element_eigenvalue, -tol.positivity);
  }
  if (!(report.max_rank_one_defect <= tol.rank_one)) {
    fail("rank-1 consistency defect", report.max_rank_one_defect, tol.rank_one);
  }
  const double disagreement = std::abs(report.mean_fidelity_analytic - report.mean_fidelity_quadrature);
  if (!(disagreement <= tol.fidelity_agreement)) {
    fail("analytic/quadrature fidelity disagreement", disagreement, tol.fidelity_agreement);
  }
  if (!(report.mean_fidelity_analytic <= report.bound_lambda_d + tol.bound_slack)) {
    fail("mean fidelity above lambda_max*d bound", report.mean_fidelity_analytic,
         report.bound_lambda_d + tol.bound_slack);
  }
  return report;
}

}  // namespace optpovm
