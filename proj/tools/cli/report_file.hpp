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

#include <string>

#include <json.hpp>

#include "optpovm/certifier.hpp"

namespace optpovm::cli {

struct ReportContext {
  std::string input;
  bool quadrature_auto = true;
  double duration_seconds = 0.0;
};

/// Report JSON: every CertificationReport field, the tolerances applied,
/// the resolved quadrature orders, tool version and wall-clock duration.
[[nodiscard]] nlohmann::json report_to_json(const CertificationReport& report,
                                            const ReportContext& context);

}  // namespace optpovm::cli
