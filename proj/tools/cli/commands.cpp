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
#include "cli/commands.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/povm_file.hpp"
#include "cli/report_file.hpp"
#include "optpovm/certifier.hpp"
#include "optpovm/errors.hpp"
#include "optpovm/phase_povm.hpp"

namespace optpovm::cli {

using nlohmann::json;

namespace {

// Locale-independent fixed-point formatting.
std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

POVM build_family(RepKind family, int n, ThetaGrid grid) {
  if (family == RepKind::SU2_COSET) return build_povm_su2(n, grid);
  return build_vonneumann_povm(optimize_phases(f_u1_analytic(n)));
}

std::string family_name(RepKind kind) { return kind == RepKind::SU2_COSET ? "su2" : "u1"; }

std::string su2_fraction(int n) {
  int a = n + 1;
  int b = n + 2;  // consecutive integers are coprime
  return std::to_string(a) + "/" + std::to_string(b);
}

}  // namespace

int cmd_build(const BuildArgs& args, std::ostream& out, std::ostream& err) {
  if (args.n < 1) {
    err << "build: --n must be >= 1\n";
    return kExitUsage;
  }
  POVM povm;
  try {
    povm = build_family(args.family, args.n, args.theta_grid);
  } catch (const NegativeWeightsError& e) {
    report_error(err, "NegativeWeightsError", e.what());
    return kExitFailure;
  } catch (const ConstructionError& e) {
    report_error(err, "ConstructionError", e.what());
    return kExitFailure;
  } catch (const SolverError& e) {
    report_error(err, "SolverError", e.what());
    return kExitFailure;
  }

  const double fidelity = mean_fidelity_analytic(povm, analytic_kernel(povm.rep));
  std::ostringstream summary;
  summary << "built " << family_name(args.family) << " N=" << args.n << ": " << povm.size()
          << " elements, mean fidelity " << fixed(fidelity, 6) << " [" << povm.grid << "]\n";

  const std::string text = serialize_povm(povm);
  if (args.out) {
    try {
      write_file_atomically(*args.out, text);
    } catch (const std::exception& e) {
      report_error(err, "IOError", e.what());
      return kExitUsage;
    }
    out << summary.str();
  } else {
    out << text;
    err << summary.str();
  }
  return kExitOk;
}

int cmd_certify(const CertifyArgs& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  POVM povm;
  try {
    povm = read_povm_file(args.in);
  } catch (const FormatError& e) {
    report_error(err, "FormatError", e.what());
    return kExitUsage;
  }
  if (!(args.tol > 0.0)) {
    err << "certify: --tol must be positive\n";
    return kExitUsage;
  }

  CertifyOptions options;
  options.tolerance = args.tol;
  if (args.quad_order) {
    if (*args.quad_order < 1) {
      err << "certify: --quad-order must be 'auto' or a positive count\n";
      return kExitUsage;
    }
    options.quadrature = GroupQuadratureOrder{*args.quad_order, *args.quad_order};
    if (povm.rep.kind == RepKind::U1) options.quadrature->theta_nodes = 0;
  }

  CertificationReport report;
  try {
    report = certify(povm, options);
  } catch (const std::exception& e) {
    report_error(err, "CertificationError", e.what());
    return kExitUsage;
  }

  ReportContext ctx;
  ctx.input = args.in;
  ctx.quadrature_auto = !args.quad_order.has_value();
  ctx.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string text = report_to_json(report, ctx).dump(2) + "\n";

  std::ostringstream summary;
  summary << (report.passed() ? "PASS" : "FAIL") << " " << family_name(povm.rep.kind)
          << " N=" << povm.rep.n_copies << ": mean fidelity " << fixed(report.mean_fidelity_analytic, 6)
          << " (quadrature " << fixed(report.mean_fidelity_quadrature, 6) << "), residual "
          << report.completeness_residual << ", min eigenvalue " << report.min_element_eigenvalue;
  if (report.bound_massar_popescu) summary << ", attained " << (report.attained ? "true" : "false");
  summary << "\n";
  for (const auto& f : report.failures) summary << "  failed: " << f << "\n";

  if (args.report) {
    try {
      write_file_atomically(*args.report, text);
    } catch (const std::exception& e) {
      report_error(err, "IOError", e.what());
      return kExitUsage;
    }
    out << summary.str();
  } else {
    out << text;
    err << summary.str();
  }
  return report.passed() ? kExitOk : kExitFailure;
}

int cmd_table(const TableArgs& args, std::ostream& out, std::ostream& err) {
  if (args.n_max < 1) {
    err << "table: --n-max must be >= 1\n";
    return kExitUsage;
  }
  json rows = json::array();
  if (args.format == TableFormat::Csv) out << "N,fidelity_exact,fidelity_numeric,bound_lambda_d\n";
  for (int n = 1; n <= args.n_max; ++n) {
    std::string exact;
    double numeric = 0.0;
    double bound = 0.0;
    try {
      if (args.family == RepKind::U1) {
        const auto kernel = f_u1_analytic(n);
        numeric = optimize_phases(kernel).fidelity;
        exact = fidelity_closed_form_expression(n);
        bound = upper_bound(kernel);
      } else {
        const auto kernel = f_su2_analytic(n);
        numeric = mean_fidelity_analytic(build_povm_su2(n), kernel);
        exact = su2_fraction(n);
        bound = upper_bound(kernel);
      }
    } catch (const std::exception& e) {
      report_error(err, "TableError", e.what());
      return kExitFailure;
    }
    if (args.format == TableFormat::Csv) {
      out << n << "," << exact << "," << fixed(numeric, 6) << "," << fixed(bound, 6) << "\n";
    } else {
      rows.push_back({{"N", n},
                      {"fidelity_exact", exact.empty() ? json(nullptr) : json(exact)},
                      {"fidelity_numeric", numeric},
                      {"bound_lambda_d", bound}});
    }
  }
  if (args.format == TableFormat::Json) out << rows.dump(2) << "\n";
  return kExitOk;
}

int cmd_bound(const BoundArgs& args, std::ostream& out, std::ostream& err) {
  if (args.n < 1) {
    err << "bound: --n must be >= 1\n";
    return kExitUsage;
  }
  const auto kernel = args.family == RepKind::SU2_COSET ? f_su2_analytic(args.n) : f_u1_analytic(args.n);
  const double bound = upper_bound(kernel);
  if (args.json) {
    json j = {{"family", family_name(args.family)},
              {"N", args.n},
              {"dim", kernel.rep.dim},
              {"lambda_max", kernel.lambda_max},
              {"bound_lambda_d", bound}};
    if (args.family == RepKind::SU2_COSET) j["bound_massar_popescu"] = (args.n + 1.0) / (args.n + 2.0);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "bound " << family_name(args.family) << " N=" << args.n << ": lambda_max "
      << fixed(kernel.lambda_max, 6) << ", d " << kernel.rep.dim << ", lambda_max*d " << fixed(bound, 6);
  if (args.family == RepKind::SU2_COSET) out << ", (N+1)/(N+2) " << fixed((args.n + 1.0) / (args.n + 2.0), 6);
  if (bound > 1.0) out << " (exceeds 1)";
  out << "\n";
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite optimal POVMs for qubit state and phase estimation"};
  app.set_version_flag("--version", std::string(OPTPOVM_VERSION));
  app.require_subcommand(1);

  const std::vector<std::string> families{"su2", "u1"};
  auto family_of = [](const std::string& name) {
    return name == "su2" ? RepKind::SU2_COSET : RepKind::U1;
  };

  BuildArgs build;
  std::string out_path;
  auto* build_cmd = app.add_subcommand("build", "Construct an optimal POVM and write it as JSON");
  std::string build_family;
  build_cmd->add_option("family", build_family, "su2 or u1")
      ->required()
      ->transform(CLI::IsMember(families, CLI::ignore_case));
  build_cmd->add_option("--n", build.n, "Number of copies N")->required()->check(CLI::Range(1, std::numeric_limits<int>::max()));
  build_cmd->add_option("--out", out_path, "Output file (default: standard output)");
  std::string theta_grid = "endpoint";
  build_cmd->add_option("--theta-grid", theta_grid, "endpoint or chebyshev (su2 only)")
      ->transform(CLI::IsMember({"endpoint", "chebyshev"}, CLI::ignore_case))
      ->capture_default_str();

  CertifyArgs certify_args;
  std::string quad_order = "auto";
  std::string report_path;
  auto* certify_cmd = app.add_subcommand("certify", "Certify a POVM file and write a report");
  certify_cmd->add_option("--in", certify_args.in, "POVM JSON file")->required();
  certify_cmd->add_option("--tol", certify_args.tol, "Tolerance for every predicate")
      ->capture_default_str();
  certify_cmd->add_option("--quad-order", quad_order, "'auto' or a node count")->capture_default_str();
  certify_cmd->add_option("--report", report_path, "Report file (default: standard output)");

  TableArgs table;
  std::string table_format = "csv";
  auto* table_cmd = app.add_subcommand("table", "Print optimal mean fidelities for N = 1..n-max");
  std::string table_family;
  table_cmd->add_option("family", table_family, "su2 or u1")
      ->required()
      ->transform(CLI::IsMember(families, CLI::ignore_case));
  table_cmd->add_option("--n-max", table.n_max, "Largest N")->required()->check(CLI::Range(1, std::numeric_limits<int>::max()));
  table_cmd->add_option("--format", table_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  BoundArgs bound;
  std::string bound_format = "text";
  auto* bound_cmd = app.add_subcommand("bound", "Print the lambda_max * d fidelity bound");
  std::string bound_family;
  bound_cmd->add_option("family", bound_family, "su2 or u1")
      ->required()
      ->transform(CLI::IsMember(families, CLI::ignore_case));
  bound_cmd->add_option("--n", bound.n, "Number of copies N")->required()->check(CLI::Range(1, std::numeric_limits<int>::max()));
  bound_cmd->add_option("--format", bound_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (*build_cmd) {
    build.family = family_of(build_family);
    build.theta_grid = theta_grid_from_string(theta_grid);
    if (!out_path.empty()) build.out = out_path;
    return cmd_build(build, out, err);
  }
  if (*certify_cmd) {
    if (!report_path.empty()) certify_args.report = report_path;
    if (quad_order != "auto") {
      try {
        size_t used = 0;
        certify_args.quad_order = std::stoi(quad_order, &used);
        if (used != quad_order.size()) throw std::invalid_argument(quad_order);
      } catch (const std::exception&) {
        err << "certify: --quad-order must be 'auto' or a positive count\n";
        return kExitUsage;
      }
    }
    return cmd_certify(certify_args, out, err);
  }
  if (*table_cmd) {
    table.family = family_of(table_family);
    table.format = table_format == "json" ? TableFormat::Json : TableFormat::Csv;
    return cmd_table(table, out, err);
  }
  bound.family = family_of(bound_family);
  bound.json = bound_format == "json";
  return cmd_bound(bound, out, err);
}

}  // namespace optpovm::cli
