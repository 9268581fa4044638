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

#ifndef RCENTER_GENERATE_HPP_
#define RCENTER_GENERATE_HPP_

#include <cstdint>
#include <string>

#include "rcenter/metric.hpp"

namespace rcenter {

enum class Layout { kGrid, kBlobs, kCube };
enum class WeightModel { kNone, kUniform, kConstant };

struct GenSpec {
  std::size_t n = 100;  // total points, planted outliers included
  std::size_t dimension = 2;
  Layout layout = Layout::kBlobs;
  std::size_t blobs = 3;
  double spread = 1.0;
  // Side of the cube holding blob centers and uniform points.
  double extent = 100.0;
  std::size_t planted_outliers = 0;
  double displacement = 10.0;
  WeightModel weights = WeightModel::kNone;
  double weight_lo = 0.0;  // uniform lower end, or the constant
  double weight_hi = 1.0;
  // Rounds weights to multiples of this value (0 keeps them as drawn).
  double weight_quantum = 0.0;
  std::size_t categories = 0;  // 0: no categories
  bool integer_coordinates = false;
  // Emits an L1 distance matrix over the generated coordinates instead of
  // the coordinates themselves.
  bool l1_matrix = false;
  std::uint64_t seed = 0;

  // Throws std::invalid_argument naming the first bad field.
  void Validate() const;
};

// Deterministic for a fixed spec. Inliers come first. Grid points fill the
// integer lattice in lexicographic order with unit spacing. Each planted
// outlier sits at centroid + u * (R + displacement * spread * (1 + v)) for
// a random unit direction u and v in [0,1), where R is the largest distance
// from the inlier centroid to a blob center (or to an inlier for the other
// layouts). Every outlier is therefore at least displacement * spread from
// every blob center.
Dataset Generate(const GenSpec& spec);

Layout ParseLayout(const std::string& name);
WeightModel ParseWeightModel(const std::string& name);

// L1 distances between the coordinate rows of `data`, keeping weights and
// categories. Integer coordinates give exactly representable distances.
Dataset ToL1Matrix(const Dataset& data);

}  // namespace rcenter

#endif  // RCENTER_GENERATE_HPP_
