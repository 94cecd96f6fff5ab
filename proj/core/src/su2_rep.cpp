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
#include "optpovm/su2_rep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace optpovm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr int kLogFactorialTableSize = 512;

long double log_factorial(int n) {
  static const auto table = [] {
    std::array<long double, kLogFactorialTableSize> t{};
    for (int i = 0; i < kLogFactorialTableSize; ++i) t[size_t(i)] = std::lgamma(i + 1.0L);
    return t;
  }();
  return n < kLogFactorialTableSize ? table[size_t(n)] : std::lgamma(n + 1.0L);
}

void require_kind(const RepDescriptor& rep, RepKind kind, const char* what) {
  if (rep.kind != kind) {
    throw std::invalid_argument(std::string(what) + ": wrong representation kind " +
                                std::string(to_string(rep.kind)));
  }
}

}  // namespace

std::string_view to_string(RepKind kind) {
  switch (kind) {
    case RepKind::SU2_COSET:
      return "SU2_COSET";
    case RepKind::U1:
      return "U1";
  }
  return "unknown";
}

RepKind rep_kind_from_string(std::string_view s) {
  if (s == "SU2_COSET" || s == "su2" || s == "SU2") return RepKind::SU2_COSET;
  if (s == "U1" || s == "u1") return RepKind::U1;
  throw std::invalid_argument("unknown representation kind '" + std::string(s) + "'");
}

double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi - 1e-13) r = 0.0;
  return r;
}

RepDescriptor make_rep(RepKind kind, int n_copies) {
  if (n_copies < 1) {
    throw std::invalid_argument("make_rep: n_copies must be >= 1, got " +
                                std::to_string(n_copies));
  }
  RepDescriptor rep;
  rep.kind = kind;
  rep.n_copies = n_copies;
  rep.dim = n_copies + 1;
  rep.generator_eigenvalues.reserve(static_cast<size_t>(rep.dim));
  for (int i = 0; i < rep.dim; ++i) {
    rep.generator_eigenvalues.push_back(kind == RepKind::SU2_COSET
                                            ? i - 0.5 * n_copies
                                            : static_cast<double>(i));
  }
  return rep;
}

double wigner_d(int two_j, int two_m, int two_n, double theta) {
  if (two_j < 0 || std::abs(two_m) > two_j || std::abs(two_n) > two_j ||
      (two_j + two_m) % 2 != 0 || (two_j + two_n) % 2 != 0) {
    throw std::invalid_argument("wigner_d: invalid indices (2j=" + std::to_string(two_j) +
                                ", 2m=" + std::to_string(two_m) +
                                ", 2n=" + std::to_string(two_n) + ")");
  }
  const int jpm = (two_j + two_m) / 2;
  const int jmm = (two_j - two_m) / 2;
  const int jpn = (two_j + two_n) / 2;
  const int jmn = (two_j - two_n) / 2;
  const int n_minus_m = (two_n - two_m) / 2;

  const long double half = static_cast<long double>(theta) / 2.0L;
  const long double c = std::cos(half);
  const long double s = std::sin(half);
  const long double log_norm =
      0.5L * (log_factorial(jpm) + log_factorial(jmm) + log_factorial(jpn) + log_factorial(jmn));

  // Integer powers of cos(theta/2), sin(theta/2) up to 2j.
  std::vector<long double> cos_pow(static_cast<size_t>(two_j) + 1, 1.0L);
  std::vector<long double> sin_pow(static_cast<size_t>(two_j) + 1, 1.0L);
  for (size_t p = 1; p < cos_pow.size(); ++p) {
    cos_pow[p] = cos_pow[p - 1] * c;
    sin_pow[p] = sin_pow[p - 1] * s;
  }

  const int k_lo = std::max(0, n_minus_m);
  const int k_hi = std::min(jpn, jmm);
  long double sum = 0.0L;
  for (int k = k_lo; k <= k_hi; ++k) {
    const long double log_mag = log_norm - log_factorial(jpn - k) - log_factorial(k) -
                                log_factorial(jmm - k) - log_factorial(k - n_minus_m);
    const int cos_power = two_j - 2 * k + n_minus_m;
    const int sin_power = 2 * k - n_minus_m;
    const long double sign = ((k - n_minus_m) % 2 == 0) ? 1.0L : -1.0L;
    sum += sign * std::exp(log_mag) * cos_pow[size_t(cos_power)] * sin_pow[size_t(sin_power)];
  }
  return static_cast<double>(sum);
}

ComplexMatrix rotation_matrix(const RepDescriptor& rep, const GroupPoint& g) {
  require_kind(rep, RepKind::SU2_COSET, "rotation_matrix");
  const int two_j = rep.n_copies;
  ComplexMatrix u(rep.dim, rep.dim);
  for (int row = 0; row < rep.dim; ++row) {
    const int two_m = 2 * row - two_j;
    const Complex phase = std::polar(1.0, -0.5 * two_m * g.psi);
    for (int col = 0; col < rep.dim; ++col) {
      const int two_n = 2 * col - two_j;
      u(row, col) = phase * wigner_d(two_j, two_m, two_n, g.theta);
    }
  }
  return u;
}

ComplexMatrix phase_rotation_matrix(const RepDescriptor& rep, double psi) {
  require_kind(rep, RepKind::U1, "phase_rotation_matrix");
  ComplexMatrix u = ComplexMatrix::Zero(rep.dim, rep.dim);
  for (int m = 0; m < rep.dim; ++m) u(m, m) = std::polar(1.0, m * psi);
  return u;
}

ComplexMatrix representation_matrix(const RepDescriptor& rep, const GroupPoint& g) {
  return rep.kind == RepKind::SU2_COSET ? rotation_matrix(rep, g)
                                        : phase_rotation_matrix(rep, g.psi);
}

std::vector<double> psi_generator(const RepDescriptor& rep) {
  std::vector<double> w = rep.generator_eigenvalues;
  if (rep.kind == RepKind::SU2_COSET) {
    for (auto& x : w) x = -x;
  }
  return w;
}

GroupPoint compose(RepKind kind, const GroupPoint& g1, const GroupPoint& g2) {
  if (kind == RepKind::U1) return {0.0, wrap_angle(g1.psi + g2.psi)};

  const auto spin_half = make_rep(RepKind::SU2_COSET, 1);
  StateVector up = StateVector::Zero(2);
  up(1) = 1.0;  // |1/2, +1/2>
  const StateVector v = rotation_matrix(spin_half, g1) * (rotation_matrix(spin_half, g2) * up);
  // U(theta, psi)|up> = (exp(i psi/2) sin(theta/2), exp(-i psi/2) cos(theta/2)).
  const double theta = 2.0 * std::atan2(std::abs(v(0)), std::abs(v(1)));
  double psi = 0.0;
  if (std::abs(v(0)) > 1e-15 && std::abs(v(1)) > 1e-15) {
    psi = wrap_angle(std::arg(v(0)) - std::arg(v(1)));
  }
  return {theta, psi};
}

}  // namespace optpovm
