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
 * @file commands.hpp
 * Subcommands of the `optpovm` tool. Each returns the process exit code:
 * 0 success, 1 construction/certification failure, 2 usage or input error.
 */

#include <iosfwd>
#include <optional>
#include <string>

#include "optpovm/povm_su2.hpp"
#include "optpovm/su2_rep.hpp"

namespace optpovm::cli {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

struct BuildArgs {
  RepKind family = RepKind::SU2_COSET;
  int n = 1;
  std::optional<std::string> out;  ///< unset: JSON to `out` stream, summary to `err`
  ThetaGrid theta_grid = ThetaGrid::Endpoint;
};

struct CertifyArgs {
  std::string in;
  double tol = 1e-10;
  std::optional<int> quad_order;  ///< unset: auto
  std::optional<std::string> report;  ///< unset: report JSON to `out`
};

enum class TableFormat { Csv, Json };

struct TableArgs {
  RepKind family = RepKind::U1;
  int n_max = 6;
  TableFormat format = TableFormat::Csv;
};

struct BoundArgs {
  RepKind family = RepKind::SU2_COSET;
  int n = 1;
  bool json = false;
};

int cmd_build(const BuildArgs& args, std::ostream& out, std::ostream& err);
int cmd_certify(const CertifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_table(const TableArgs& args, std::ostream& out, std::ostream& err);
int cmd_bound(const BoundArgs& args, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace optpovm::cli
