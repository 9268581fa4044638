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

#ifndef RCENTER_KCENTER_HPP_
#define RCENTER_KCENTER_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "rcenter/metric.hpp"

namespace rcenter {

struct CenterSet {
  std::vector<PointId> centers;
  double radius = 0.0;  // coverage radius of `centers` over the input
};

// Nearest-center partition of `points`. cluster_of[i] and distance[i]
// describe points[i].
struct Clustering {
  std::vector<PointId> centers;
  std::vector<PointId> points;
  std::vector<std::size_t> cluster_of;
  std::vector<double> distance;

  // Members of each cluster, in the order they appear in `points`.
  std::vector<std::vector<PointId>> Members() const;
};

// Farthest-first traversal starting from the lowest id; ties go to the
// lowest id. Uses exactly min(k,|V|)*|V| distance evaluations. k >= |V|
// returns all of `points` with radius 0.
CenterSet Gonzalez(std::span<const PointId> points, std::size_t k,
                   const DistanceOracle& oracle);

// Single scan in list order adding every point farther than `threshold`
// from the centers picked so far. The result is pairwise > threshold apart
// and covers every point within `threshold`.
CenterSet ThresholdGreedy(std::span<const PointId> points, double threshold,
                          const DistanceOracle& oracle);

// Nearest center per point; ties to the lowest center index, and every
// center lands in its own cluster.
Clustering ClusterAssign(std::span<const PointId> points,
                         std::span<const PointId> centers,
                         const DistanceOracle& oracle);

inline constexpr std::uint64_t kDefaultKCenterBudget = 20'000'000;

// Exact k-center by subset enumeration. Throws BudgetExceeded("oracle
// budget exceeded") when C(|V|,k) exceeds `budget`.
CenterSet BruteForceKCenter(std::span<const PointId> points, std::size_t k,
                            const DistanceOracle& oracle,
                            std::uint64_t budget = kDefaultKCenterBudget);

// A k-center routine together with its approximation ratio.
struct KCenterAlgorithm {
  std::function<CenterSet(std::span<const PointId>, std::size_t,
                          const DistanceOracle&)>
      run;
  double beta = 2.0;
  std::string name;
};

KCenterAlgorithm GonzalezAlgorithm();

// Saturating binomial coefficient.
std::uint64_t Binomial(std::uint64_t n, std::uint64_t k);

}  // namespace rcenter

#endif  // RCENTER_KCENTER_HPP_
