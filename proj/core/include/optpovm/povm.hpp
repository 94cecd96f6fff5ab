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
#include <vector>

#include "optpovm/operator_core.hpp"
#include "optpovm/su2_rep.hpp"

namespace optpovm {

/// One outcome of a measurement: matrix = weight * |U(guess) seed><U(guess) seed|.
/// The seed need not be normalized, so trace(matrix) = weight * |seed|^2.
struct POVMElement {
  double weight = 0.0;
  GroupPoint guess;
  StateVector seed_state;
  ComplexMatrix matrix;
};

struct POVM {
  RepDescriptor rep;
  std::vector<POVMElement> elements;
  /// How the construction grid was chosen, e.g. "theta=endpoint;psi=uniform(3)".
  std::string grid;

  [[nodiscard]] std::size_t size() const { return elements.size(); }
  [[nodiscard]] ComplexMatrix sum() const;
};

/// Element built from its rank-1 parameterization.
[[nodiscard]] POVMElement make_element(const RepDescriptor& rep, double weight,
                                       const GroupPoint& guess, StateVector seed);

/// Frobenius distance between the stored matrix and its rank-1 form.
[[nodiscard]] double rank_one_defect(const RepDescriptor& rep, const POVMElement& e);

}  // namespace optpovm
