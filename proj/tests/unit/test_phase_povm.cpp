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
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "optpovm/certifier.hpp"
#include "optpovm/errors.hpp"
#include "optpovm/phase_povm.hpp"

using namespace optpovm;

namespace {

// The closed forms as printed, evaluated independently of the library.
double printed_table(int n) {
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r5 = std::sqrt(5.0), r6 = std::sqrt(6.0),
               r10 = std::sqrt(10.0);
  switch (n) {
    case 1: return 3.0 / 4.0;
    case 2: return (2.0 + r2) / 4.0;
    case 3: return (11.0 + 2.0 * r3) / 16.0;
    case 4: return (5.0 + r6) / 8.0;
    case 5: return (32.0 + 5.0 * r2 + 2.0 * r5 + 5.0 * r2 * std::sqrt(3.0 + 2.0 * r2)) / 64.0;
    case 6: return (32.0 + 10.0 * r3 + 3.0 * r10 + r6) / 64.0;
    default: return NAN;
  }
}

}  // namespace

TEST_CASE("fidelity_closed_form reproduces the printed table") {
  for (int n = 1; n <= 6; ++n) CHECK(std::abs(fidelity_closed_form(n) - printed_table(n)) <= 1e-12);
  // 30-digit reference values of the same expressions.
  CHECK(std::abs(fidelity_closed_form(3) - 0.904006350946109661690930792688) < 1e-15);
  CHECK(std::abs(fidelity_closed_form(5) - 0.947097993417664529388050540306) < 1e-15);
  CHECK(std::abs(fidelity_closed_form(6) - 0.957137981234017016085444189423) < 1e-15);
  CHECK_THROWS((void)fidelity_closed_form(0));
}

TEST_CASE("fidelity_closed_form_expression") {
  CHECK(fidelity_closed_form_expression(1) == "3/4");
  CHECK(fidelity_closed_form_expression(2) == "(2+sqrt(2))/4");
  CHECK(fidelity_closed_form_expression(3) == "(11+2*sqrt(3))/16");
  CHECK(fidelity_closed_form_expression(4) == "(5+sqrt(6))/8");
  // sqrt(3 + 2 sqrt(2)) = 1 + sqrt(2) simplifies the printed N = 5 form.
  CHECK(fidelity_closed_form_expression(5) == "(21+5*sqrt(2)+sqrt(5))/32");
  CHECK(fidelity_closed_form_expression(6) == "(32+10*sqrt(3)+sqrt(6)+3*sqrt(10))/64");
  CHECK(fidelity_closed_form_expression(31).empty());
}

TEST_CASE("optimize_phases hits the table values") {
  const auto s1 = optimize_phases(f_u1_analytic(1));
  CHECK(s1.phases == std::vector<double>{0.0, 0.0});
  CHECK(std::abs(s1.fidelity - 0.75) < 1e-14);

  CHECK(std::abs(optimize_phases(f_u1_analytic(2)).fidelity - printed_table(2)) <= 1e-10);
  CHECK(std::abs(optimize_phases(f_u1_analytic(4)).fidelity - printed_table(4)) <= 1e-10);
}

TEST_CASE("Lagrange conditions at the optimum") {
  for (int n = 1; n <= 12; ++n) {
    const auto f = f_u1_analytic(n);
    const auto s = optimize_phases(f);
    CHECK(s.n_copies == n);
    CHECK(s.phases.front() == 0.0);
    for (double p : s.phases) {
      CHECK(p >= 0.0);
      CHECK(p < 2 * std::numbers::pi);
    }
    for (Eigen::Index m = 0; m < s.seed_state.size(); ++m) CHECK(std::abs(std::abs(s.seed_state(m)) - 1.0) <= 1e-10);
    double trace_l = 0.0;
    for (double l : s.multipliers) trace_l += l;
    CHECK(std::abs(trace_l - s.fidelity) <= 1e-10);
    CHECK(s.stationarity_residual <= 1e-8);
    CHECK(s.min_singular_value <= 1e-8);
    CHECK(s.fidelity >= phase_objective(f.matrix, std::vector<double>(size_t(n + 1), 0.0)) - 1e-12);
    CHECK(std::abs(s.fidelity - fidelity_closed_form(n)) <= 1e-10);
  }
}

TEST_CASE("optimizer is deterministic and works on the quadrature kernel") {
  const auto a = optimize_phases(f_u1_analytic(5));
  const auto b = optimize_phases(f_u1_analytic(5));
  CHECK(a.phases == b.phases);
  CHECK(a.fidelity == b.fidelity);

  const auto q = optimize_phases(f_u1_quadrature(5, 8));
  CHECK(std::abs(q.fidelity - fidelity_closed_form(5)) <= 1e-10);
}

TEST_CASE("random restarts alone find the global maximum") {
  // Without the all-zero start the winner is still at equal phases.
  PhaseOptimizerOptions opts;
  opts.random_restarts = 8;
  opts.seed = 1234;
  for (int n = 2; n <= 6; ++n) {
    const auto f = f_u1_analytic(n);
    const auto s = optimize_phases(f, opts);
    CHECK(std::abs(s.fidelity - fidelity_closed_form(n)) <= 1e-10);
  }
}

TEST_CASE("gradient matches finite differences") {
  const auto f = f_u1_analytic(4);
  const std::vector<double> phases{0.0, 0.4, 2.1, 5.0, 3.3};
  const auto g = phase_gradient(f.matrix, phases);
  const double h = 1e-6;
  for (size_t k = 0; k < phases.size(); ++k) {
    auto plus = phases, minus = phases;
    plus[k] += h;
    minus[k] -= h;
    const double fd = (phase_objective(f.matrix, plus) - phase_objective(f.matrix, minus)) / (2 * h);
    CHECK(std::abs(fd - g[k]) < 1e-8);
  }
}

TEST_CASE("stationary but non-maximal phases still satisfy the Lagrange identity") {
  // Alternating phases (0, pi, 0, ...) are a stationary point of g.
  const auto f = f_u1_analytic(3);
  const auto s = evaluate_phases(f, {0.0, std::numbers::pi, 0.0, std::numbers::pi});
  CHECK(s.gradient_norm < 1e-14);
  CHECK(s.stationarity_residual < 1e-14);
  double trace_l = 0.0;
  for (double l : s.multipliers) trace_l += l;
  CHECK(std::abs(trace_l - s.fidelity) < 1e-14);
  CHECK(s.fidelity < fidelity_closed_form(3));
}

TEST_CASE("optimize_phases rejects SU2 kernels") {
  CHECK_THROWS_AS((void)optimize_phases(f_su2_analytic(2)), std::invalid_argument);
}

TEST_CASE("von Neumann measurement") {
  SUBCASE("N = 1 gives projectors onto (|0> +- |1>)/sqrt(2)") {
    const auto p = build_vonneumann_povm(optimize_phases(f_u1_analytic(1)));
    REQUIRE(p.size() == 2);
    ComplexMatrix plus(2, 2), minus(2, 2);
    plus << 0.5, 0.5, 0.5, 0.5;
    minus << 0.5, -0.5, -0.5, 0.5;
    CHECK((p.elements[0].matrix - plus).norm() < 1e-15);
    CHECK((p.elements[1].matrix - minus).norm() < 1e-15);
  }
  SUBCASE("orthogonal rank-1 projectors resolving the identity") {
    for (int n = 1; n <= 10; ++n) {
      const auto sol = optimize_phases(f_u1_analytic(n));
      const auto p = build_vonneumann_povm(sol);
      REQUIRE(p.size() == static_cast<size_t>(n + 1));
      CHECK(identity_residual(p.sum()) <= 1e-12);
      for (size_t s = 0; s < p.size(); ++s) {
        const auto& o = p.elements[s].matrix;
        CHECK((o * o - o).norm() <= 1e-12);
        CHECK(std::abs(o.trace() - 1.0) <= 1e-12);
        CHECK(std::abs(p.elements[s].guess.psi - 2 * std::numbers::pi * s / (n + 1)) < 1e-15);
        for (size_t t = s + 1; t < p.size(); ++t) CHECK((o * p.elements[t].matrix).norm() <= 1e-12);
      }
      CHECK(std::abs(mean_fidelity_analytic(p, f_u1_analytic(n)) - sol.fidelity) <= 1e-10);
    }
  }
}

TEST_CASE("table values increase with N") {
  double prev = 0.0;
  for (int n = 1; n <= 6; ++n) {
    const double f = optimize_phases(f_u1_analytic(n)).fidelity;
    CHECK(f > prev);
    prev = f;
  }
}
