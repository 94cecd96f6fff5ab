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
#include "cli/report_file.hpp"

namespace optpovm::cli {

nlohmann::json report_to_json(const CertificationReport& r, const ReportContext& ctx) {
  using nlohmann::json;
  const auto& t = r.tolerances;
  return {
      {"tool", "optpovm"},
      {"tool_version", OPTPOVM_VERSION},
      {"input", ctx.input},
      {"rep", {{"kind", std::string(to_string(r.rep.kind))},
               {"n_copies", r.rep.n_copies},
               {"dim", r.rep.dim}}},
      {"element_count", r.element_count},
      {"completeness_residual", r.completeness_residual},
      {"min_element_eigenvalue", r.min_element_eigenvalue},
      {"max_rank_one_defect", r.max_rank_one_defect},
      {"mean_fidelity_analytic", r.mean_fidelity_analytic},
      {"mean_fidelity_quadrature", r.mean_fidelity_quadrature},
      {"bound_massar_popescu", r.bound_massar_popescu ? json(*r.bound_massar_popescu) : json(nullptr)},
      {"bound_lambda_d", r.bound_lambda_d},
      {"attained", r.attained},
      {"grid_used", r.grid_used},
      {"quadrature", {{"mode", ctx.quadrature_auto ? "auto" : "explicit"},
                      {"theta_nodes", r.quadrature.theta_nodes},
                      {"psi_nodes", r.quadrature.psi_nodes}}},
      {"tolerances", {{"completeness", t.completeness},
                      {"positivity", t.positivity},
                      {"rank_one", t.rank_one},
                      {"fidelity_agreement", t.fidelity_agreement},
                      {"attainment", t.attainment},
                      {"bound_slack", t.bound_slack}}},
      {"passed", r.passed()},
      {"failures", r.failures},
      {"duration_seconds", ctx.duration_seconds},
  };
}

}  // namespace optpovm::cli
