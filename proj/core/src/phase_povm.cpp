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
#include "optpovm/phase_povm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "optpovm/errors.hpp"

namespace optpovm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

StateVector unit_modulus_state(const std::vector<double>& phases) {
  StateVector psi(static_cast<Eigen::Index>(phases.size()));
  for (size_t m = 0; m < phases.size(); ++m) {
    psi(static_cast<Eigen::Index>(m)) = std::polar(1.0, phases[m]);
  }
  return psi;
}

// Free variables are phi_1..phi_N; phi_0 stays 0.
Eigen::VectorXd free_gradient(const ComplexMatrix& f, const std::vector<double>& phases) {
  const auto full = phase_gradient(f, phases);
  return Eigen::Map<const Eigen::VectorXd>(full.data() + 1, static_cast<Eigen::Index>(full.size() - 1));
}

// Hessian of g restricted to the free phases.
Eigen::MatrixXd free_hessian(const ComplexMatrix& f, const std::vector<double>& phases) {
  const auto d = static_cast<Eigen::Index>(phases.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d - 1, d - 1);
  for (Eigen::Index k = 1; k < d; ++k) {
    double diag = 0.0;
    for (Eigen::Index n = 0; n < d; ++n) {
      if (n == k) continue;
      const double term =
          2.0 * std::real(f(k, n) * std::polar(1.0, phases[size_t(n)] - phases[size_t(k)]));
      diag -= term;
      if (n >= 1) h(k - 1, n - 1) = term;
    }
    h(k - 1, k - 1) = diag;
  }
  return h;
}

std::vector<double> step_phases(const std::vector<double>& phases, const Eigen::VectorXd& step,
                                double t) {
  std::vector<double> next = phases;
  for (size_t k = 1; k < next.size(); ++k) next[k] += t * step(static_cast<Eigen::Index>(k - 1));
  return next;
}

// Newton ascent where the Hessian is negative definite, eigenvalue-modulus
// Newton otherwise, both with backtracking.
std::vector<double> local_ascent(const ComplexMatrix& f, std::vector<double> phases,
                                 const PhaseOptimizerOptions& opt) {
  double value = phase_objective(f, phases);
  for (int iter = 0; iter < opt.max_iterations; ++iter) {
    const Eigen::VectorXd grad = free_gradient(f, phases);
    if (grad.norm() <= opt.gradient_tolerance) break;

    Eigen::VectorXd dir = grad;
    const Eigen::MatrixXd h = free_hessian(f, phases);
    Eigen::LLT<Eigen::MatrixXd> neg(-h);
    if (neg.info() == Eigen::Success) {
      const Eigen::VectorXd newton = neg.solve(grad);
      if (newton.allFinite()) dir = newton;
    } else {
      // Indefinite: rescale the gradient by |eigenvalue|^-1 along each
      // eigenvector, which stays an ascent direction and leaves saddles fast.
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
      if (es.info() == Eigen::Success) {
        const Eigen::VectorXd ev = es.eigenvalues().cwiseAbs();
        const double floor = std::max(1e-6 * ev.maxCoeff(), 1e-12);
        const Eigen::VectorXd scaled =
            es.eigenvectors() * (es.eigenvectors().transpose() * grad).cwiseQuotient(ev.cwiseMax(floor));
        if (scaled.allFinite()) dir = scaled;
      }
    }

    double t = 1.0;
    bool moved = false;
    for (int ls = 0; ls < 60; ++ls, t *= 0.5) {
      auto trial = step_phases(phases, dir, t);
      const double trial_value = phase_objective(f, trial);
      if (trial_value > value && trial_value >= value + 1e-4 * t * grad.dot(dir)) {
        phases = std::move(trial);
        value = trial_value;
        moved = true;
        break;
      }
    }
    // Objective changes are below rounding; accept the full step only if it
    // shrinks the gradient.
    if (!moved) {
      auto trial = step_phases(phases, dir, 1.0);
      if (free_gradient(f, trial).norm() < grad.norm()) {
        phases = std::move(trial);
        value = phase_objective(f, phases);
      } else {
        break;
      }
    }
  }
  return phases;
}

std::vector<double> canonicalize(std::vector<double> phases) {
  const double ref = phases.front();
  for (auto& p : phases) {
    p = wrap_angle(p - ref);
    if (p < 1e-10 || kTwoPi - p < 1e-10) p = 0.0;
  }
  return phases;
}

bool lexicographically_less(const std::vector<double>& a, const std::vector<double>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > 1e-9) return a[i] < b[i];
  }
  return false;
}

// Prime factorization by trial division; inputs are binomials C(N, k), N <= 30.
void add_factors(std::uint64_t n, std::map<std::uint64_t, int>& exps) {
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++exps[p];
      n /= p;
    }
  }
  if (n > 1) ++exps[n];
}

std::uint64_t binomial_u64(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

double phase_objective(const ComplexMatrix& f, const std::vector<double>& phases) {
  const StateVector psi = unit_modulus_state(phases);
  return std::real(psi.dot(f * psi));
}

std::vector<double> phase_gradient(const ComplexMatrix& f, const std::vector<double>& phases) {
  const StateVector psi = unit_modulus_state(phases);
  const StateVector fpsi = f * psi;
  std::vector<double> g(phases.size());
  for (size_t k = 0; k < phases.size(); ++k) {
    const auto i = static_cast<Eigen::Index>(k);
    g[k] = 2.0 * std::imag(std::conj(psi(i)) * fpsi(i));
  }
  return g;
}

LagrangePhaseSolution evaluate_phases(const FidelityOperator& f, std::vector<double> phases) {
  if (static_cast<int>(phases.size()) != f.rep.dim) {
    throw std::invalid_argument("evaluate_phases: phase count does not match kernel dimension");
  }
  LagrangePhaseSolution sol;
  sol.n_copies = f.rep.n_copies;
  sol.seed_state = unit_modulus_state(phases);
  sol.phases = std::move(phases);

  const StateVector fpsi = f.matrix * sol.seed_state;
  sol.multipliers.resize(sol.phases.size());
  for (Eigen::Index m = 0; m < fpsi.size(); ++m) {
    sol.multipliers[size_t(m)] = std::real(std::conj(sol.seed_state(m)) * fpsi(m));
  }
  sol.fidelity = std::real(sol.seed_state.dot(fpsi));

  const ComplexMatrix stationary = f.matrix - diagonal_matrix(sol.multipliers);
  sol.stationarity_residual = (stationary * sol.seed_state).norm();
  sol.min_singular_value = eigh(stationary).eigenvalues.cwiseAbs().minCoeff();
  const auto grad = phase_gradient(f.matrix, sol.phases);
  sol.gradient_norm = std::sqrt(std::inner_product(grad.begin(), grad.end(), grad.begin(), 0.0));
  return sol;
}

LagrangePhaseSolution optimize_phases(const FidelityOperator& f, const PhaseOptimizerOptions& options) {
  if (f.rep.kind != RepKind::U1) {
    throw std::invalid_argument("optimize_phases: kernel must be a U1 kernel");
  }
  const auto d = static_cast<size_t>(f.rep.dim);
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> uniform(0.0, kTwoPi);

  std::vector<double> best;
  double best_value = -std::numeric_limits<double>::infinity();
  for (int start = 0; start <= options.random_restarts; ++start) {
    std::vector<double> phases(d, 0.0);
    if (start > 0) {
      for (size_t k = 1; k < d; ++k) phases[k] = uniform(rng);
    }
    auto local = canonicalize(local_ascent(f.matrix, std::move(phases), options));
    const double value = phase_objective(f.matrix, local);
    const bool better = value > best_value + 1e-12;
    const bool tie = std::abs(value - best_value) <= 1e-12;
    if (better || (tie && lexicographically_less(local, best))) {
      best = std::move(local);
      best_value = value;
    }
  }

  auto sol = evaluate_phases(f, std::move(best));
  if (!(sol.stationarity_residual <= options.stationarity_tolerance)) {
    std::ostringstream msg;
    msg << "optimize_phases: stationarity residual " << sol.stationarity_residual
        << " exceeds " << options.stationarity_tolerance;
    throw SolverError(msg.str());
  }
  return sol;
}

double fidelity_closed_form(int n_copies) {
  if (n_copies < 1) throw std::invalid_argument("fidelity_closed_form: N must be >= 1");
  double sum = 0.0;
  for (int m = 0; m <= n_copies; ++m) sum += 2.0 * binomial(n_copies, m);
  for (int m = 0; m < n_copies; ++m) {
    sum += 2.0 * std::sqrt(binomial(n_copies, m) * binomial(n_copies, m + 1));
  }
  return sum / std::pow(2.0, n_copies + 2);
}

std::string fidelity_closed_form_expression(int n_copies) {
  if (n_copies < 1) throw std::invalid_argument("fidelity_closed_form_expression: N must be >= 1");
  if (n_copies > 30) return {};

  // sqrt(C(N,m) C(N,m+1)) = k sqrt(s) with s square-free.
  std::uint64_t rational = std::uint64_t{1} << (n_copies + 1);
  std::map<std::uint64_t, std::uint64_t> radicals;
  for (int m = 0; m < n_copies; ++m) {
    std::map<std::uint64_t, int> exps;
    add_factors(binomial_u64(n_copies, m), exps);
    add_factors(binomial_u64(n_copies, m + 1), exps);
    std::uint64_t k = 1;
    std::uint64_t s = 1;
    for (const auto& [p, e] : exps) {
      for (int i = 0; i < e / 2; ++i) k *= p;
      if (e % 2 == 1) s *= p;
    }
    if (s == 1) {
      rational += 2 * k;
    } else {
      radicals[s] += 2 * k;
    }
  }
  std::uint64_t denom = std::uint64_t{1} << (n_copies + 2);
  std::uint64_t g = std::gcd(denom, rational);
  for (const auto& [s, c] : radicals) g = std::gcd(g, c);
  rational /= g;
  denom /= g;

  std::ostringstream out;
  std::ostringstream num;
  num << rational;
  for (const auto& [s, c] : radicals) {
    num << '+';
    if (c / g != 1) num << c / g << '*';
    num << "sqrt(" << s << ')';
  }
  if (radicals.empty()) {
    out << num.str();
  } else {
    out << '(' << num.str() << ')';
  }
  if (denom != 1) out << '/' << denom;
  return out.str();
}

POVM build_vonneumann_povm(const LagrangePhaseSolution& solution) {
  if (solution.n_copies < 1 || solution.seed_state.size() != solution.n_copies + 1) {
    throw std::invalid_argument("build_vonneumann_povm: malformed solution");
  }
  POVM povm;
  povm.rep = make_rep(RepKind::U1, solution.n_copies);
  const int d = povm.rep.dim;
  povm.grid = "phi=uniform(" + std::to_string(d) + ")";
  povm.elements.reserve(static_cast<size_t>(d));
  for (int s = 0; s < d; ++s) {
    povm.elements.push_back(
        make_element(povm.rep, 1.0 / d, {0.0, kTwoPi * s / d}, solution.seed_state));
  }
  return povm;
}

}  // namespace optpovm
