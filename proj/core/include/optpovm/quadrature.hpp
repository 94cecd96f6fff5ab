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

#include <vector>

namespace optpovm {

/// Nodes and weights of a one-dimensional quadrature rule.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  [[nodiscard]] std::size_t size() const { return nodes.size(); }
};

/// n-point Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree
/// <= 2n-1. Nodes ascending.
[[nodiscard]] QuadratureRule gauss_legendre(int n);

/// n uniform nodes 2*pi*k/n on [0, 2*pi) with weights 1/n, i.e. the
/// trapezoid rule for the normalized measure dpsi/(2*pi). Exact for
/// trigonometric polynomials with harmonics |k| < n.
[[nodiscard]] QuadratureRule uniform_circle(int n);

}  // namespace optpovm
