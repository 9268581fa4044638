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

// Data-parallel distance kernels. Every kernel has an OpenMP version and a
// serial reference in `kernels::serial`; both produce bit-identical results
// and charge the oracle the same number of evaluations.

#ifndef RCENTER_KERNELS_HPP_
#define RCENTER_KERNELS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rcenter/metric.hpp"

namespace rcenter::kernels {

// Below this many distance evaluations a kernel runs on one thread.
inline constexpr std::size_t kDefaultParallelCutoff = 1 << 14;

struct Nearest {
  std::size_t center_index;
  double distance;
};

// out[i] = min_c d(points[i], centers[c]). Charges |points|*|centers|.
void NearestDistances(const DistanceOracle& oracle,
                      std::span<const PointId> points,
                      std::span<const PointId> centers, std::span<double> out,
                      std::size_t cutoff = kDefaultParallelCutoff);

// Nearest center per point. Ties go to the lowest center index, except that
// a point which is itself a center always picks its own index.
std::vector<Nearest> AssignNearest(const DistanceOracle& oracle,
                                   std::span<const PointId> points,
                                   std::span<const PointId> centers,
                                   std::size_t cutoff = kDefaultParallelCutoff);

// Lowers min_dist[i] to d(points[i], center), then returns the position of
// the point farthest from the centers among those with excluded[i] == 0
// (ties to the lowest id). Charges |points|.
std::optional<std::size_t> RelaxAndFarthest(
    const DistanceOracle& oracle, std::span<const PointId> points,
    PointId center, std::span<double> min_dist,
    std::span<const unsigned char> excluded,
    std::size_t cutoff = kDefaultParallelCutoff);

// Row-major |points| x |points| matrix. Charges |points|^2.
std::vector<double> PairwiseDistances(
    const DistanceOracle& oracle, std::span<const PointId> points,
    std::size_t cutoff = kDefaultParallelCutoff);

namespace serial {

void NearestDistances(const DistanceOracle& oracle,
                      std::span<const PointId> points,
                      std::span<const PointId> centers, std::span<double> out);
std::vector<Nearest> AssignNearest(const DistanceOracle& oracle,
                                   std::span<const PointId> points,
                                   std::span<const PointId> centers);
std::optional<std::size_t> RelaxAndFarthest(
    const DistanceOracle& oracle, std::span<const PointId> points,
    PointId center, std::span<double> min_dist,
    std::span<const unsigned char> excluded);
std::vector<double> PairwiseDistances(const DistanceOracle& oracle,
                                      std::span<const PointId> points);

}  // namespace serial
}  // namespace rcenter::kernels

#endif  // RCENTER_KERNELS_HPP_
