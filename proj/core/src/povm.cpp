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
#include "optpovm/povm.hpp"

#include <stdexcept>
#include <utility>

namespace optpovm {

ComplexMatrix POVM::sum() const {
  ComplexMatrix acc = ComplexMatrix::Zero(rep.dim, rep.dim);
  for (const auto& e : elements) {
    if (e.matrix.rows() != rep.dim || e.matrix.cols() != rep.dim) {
      throw std::invalid_argument("POVM::sum: element dimension mismatch");
    }
    acc += e.matrix;
  }
  return acc;
}

POVMElement make_element(const RepDescriptor& rep, double weight, const GroupPoint& guess,
                         StateVector seed) {
  if (seed.size() != rep.dim) {
    throw std::invalid_argument("make_element: seed dimension does not match representation");
  }
  POVMElement e;
  e.weight = weight;
  e.guess = guess;
  const StateVector v = representation_matrix(rep, guess) * seed;
  e.matrix = weight * outer(v);
  e.seed_state = std::move(seed);
  return e;
}

double rank_one_defect(const RepDescriptor& rep, const POVMElement& e) {
  if (e.seed_state.size() != rep.dim || e.matrix.rows() != rep.dim || e.matrix.cols() != rep.dim) {
    throw std::invalid_argument("rank_one_defect: dimension mismatch");
  }
  const StateVector v = representation_matrix(rep, e.guess) * e.seed_state;
  return (e.matrix - e.weight * outer(v)).norm();
}

}  // namespace optpovm
