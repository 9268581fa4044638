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

#include "rcenter/kcenter.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "rcenter/kernels.hpp"

namespace rcenter {

std::vector<std::vector<PointId>> Clustering::Members() const {
  std::vector<std::vector<PointId>> out(centers.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    out[cluster_of[i]].push_back(points[i]);
  }
  return out;
}

CenterSet Gonzalez(std::span<const PointId> points, std::size_t k,
                   const DistanceOracle& oracle) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  if (points.empty()) throw std::invalid_argument("empty point set");
  if (k >= points.size()) {
    std::vector<PointId> all(points.begin(), points.end());
    std::sort(all.begin(), all.end());
    return {std::move(all), 0.0};
  }
  const std::size_t first = static_cast<std::size_t>(
      std::min_element(points.begin(), points.end()) - points.begin());
  std::vector<double> min_dist(points.size(),
                               std::numeric_limits<double>::infinity());
  std::vector<unsigned char> chosen(points.size(), 0);
  CenterSet out;
  out.centers.push_back(points[first]);
  chosen[first] = 1;
  while (true) {
    const auto far = kernels::RelaxAndFarthest(oracle, points,
                                               out.centers.back(), min_dist,
                                               chosen);
    if (out.centers.size() == k || !far) break;
    out.centers.push_back(points[*far]);
    chosen[*far] = 1;
  }
  out.radius = *std::max_element(min_dist.begin(), min_dist.end());
  return out;
}

CenterSet ThresholdGreedy(std::span<const PointId> points, double threshold,
                          const DistanceOracle& oracle) {
  if (threshold < 0.0) throw std::invalid_argument("negative threshold");
  CenterSet out;
  std::uint64_t evals = 0;
  for (const PointId p : points) {
    bool covered = false;
    for (const PointId c : out.centers) {
      ++evals;
      if (oracle.raw(p, c) <= threshold) {
        covered = true;
        break;
      }
    }
    if (!covered) out.centers.push_back(p);
  }
  oracle.charge(evals);
  if (!out.centers.empty()) {
    out.radius = CoverageRadius(out.centers, points, oracle);
  }
  return out;
}

Clustering ClusterAssign(std::span<const PointId> points,
                         std::span<const PointId> centers,
                         const DistanceOracle& oracle) {
  if (centers.empty()) throw std::invalid_argument("empty center set");
  Clustering out;
  out.centers.assign(centers.begin(), centers.end());
  out.points.assign(points.begin(), points.end());
  const auto nearest = kernels::AssignNearest(oracle, points, centers);
  out.cluster_of.reserve(points.size());
  out.distance.reserve(points.size());
  for (const auto& n : nearest) {
    out.cluster_of.push_back(n.center_index);
    out.distance.push_back(n.distance);
  }
  return out;
}

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    const std::uint64_t num = n - k + i;
    if (r > kMax / num) return kMax;
    r = r * num / i;
  }
  return r;
}

CenterSet BruteForceKCenter(std::span<const PointId> points, std::size_t k,
                            const DistanceOracle& oracle,
                            std::uint64_t budget) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  if (points.empty()) throw std::invalid_argument("empty point set");
  std::vector<PointId> ids(points.begin(), points.end());
  std::sort(ids.begin(), ids.end());
  const std::size_t m = ids.size();
  if (k >= m) return {ids, 0.0};
  if (Binomial(m, k) > budget) throw BudgetExceeded("oracle budget exceeded");

  const auto dist = kernels::PairwiseDistances(oracle, ids);
  // reach[depth][p]: distance from p to the first `depth` chosen centers.
  std::vector<std::vector<double>> reach(
      k + 1, std::vector<double>(m, std::numeric_limits<double>::infinity()));
  std::vector<std::size_t> pick(k);
  CenterSet best{{}, std::numeric_limits<double>::infinity()};

  // Iterative enumeration of k-combinations in lexicographic order.
  std::size_t depth = 0;
  pick[0] = 0;
  while (true) {
    if (pick[depth] + (k - depth) > m) {
      if (depth == 0) break;
      --depth;
      ++pick[depth];
      continue;
    }
    const std::size_t c = pick[depth];
    for (std::size_t p = 0; p < m; ++p) {
      reach[depth + 1][p] = std::min(reach[depth][p], dist[c * m + p]);
    }
    if (depth + 1 == k) {
      const double r =
          *std::max_element(reach[k].begin(), reach[k].end());
      if (r < best.radius) {
        best.radius = r;
        best.centers.clear();
        for (const std::size_t i : pick) best.centers.push_back(ids[i]);
      }
      ++pick[depth];
    } else {
      pick[depth + 1] = c + 1;
      ++depth;
    }
  }
  return best;
}

KCenterAlgorithm GonzalezAlgorithm() {
  return {[](std::span<const PointId> v, std::size_t k,
             const DistanceOracle& o) { return Gonzalez(v, k, o); },
          2.0, "gonzalez"};
}

}  // namespace rcenter
