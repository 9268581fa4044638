// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RCENTER_SOLUTION_HPP_
#define RCENTER_SOLUTION_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "rcenter/metric.hpp"

namespace rcenter {

// Centers sorted by id, and their robust cost on the instance the solution
// was computed for.
struct RobustSolution {
  std::vector<PointId> centers;
  double cost = 0.0;
  std::uint64_t z = 0;
  double epsilon = 0.0;
};

// Lexicographic order on sorted center lists, used as the deterministic
// tie-break between equal-cost solutions.
inline bool LexLess(std::span<const PointId> a, std::span<const PointId> b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

// Sum of weights accumulated in ascending id order. Every feasibility check
// in the library goes through this function so all of them agree bit for
// bit.
double WeightOf(std::span<const PointId> sorted_ids, const Dataset& data);

}  // namespace rcenter

#endif  // RCENTER_SOLUTION_HPP_
