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

#include "rcenter/kernels.hpp"

#include <omp.h>

#include <limits>

namespace rcenter::kernels {
namespace {

// (distance desc, id asc) total order used for farthest-point selection.
bool FartherThan(double da, PointId ia, double db, PointId ib) {
  if (da != db) return da > db;
  return ia < ib;
}

inline Nearest NearestOf(const DistanceOracle& oracle, PointId p,
                         std::span<const PointId> centers) {
  Nearest best{0, std::numeric_limits<double>::infinity()};
  bool self = false;
  for (std::size_t c = 0; c < centers.size(); ++c) {
    const double d = oracle.raw(p, centers[c]);
    if (self) continue;
    if (centers[c] == p) {
      best = {c, d};
      self = true;
    } else if (d < best.distance) {
      best = {c, d};
    }
  }
  return best;
}

inline double MinDistance(const DistanceOracle& oracle, PointId p,
                          std::span<const PointId> centers) {
  double best = std::numeric_limits<double>::infinity();
  for (const PointId c : centers) {
    const double d = oracle.raw(p, c);
    if (d < best) best = d;
  }
  return best;
}

}  // namespace

void NearestDistances(const DistanceOracle& oracle,
                      std::span<const PointId> points,
                      std::span<const PointId> centers, std::span<double> out,
                      std::size_t cutoff) {
  const auto n = static_cast<std::ptrdiff_t>(points.size());
  const bool par = points.size() * centers.size() >= cutoff;
#pragma omp parallel for schedule(static) if (par)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i] = MinDistance(oracle, points[i], centers);
  }
  oracle.charge(points.size() * centers.size());
}

std::vector<Nearest> AssignNearest(const DistanceOracle& oracle,
                                   std::span<const PointId> points,
                                   std::span<const PointId> centers,
                                   std::size_t cutoff) {
  std::vector<Nearest> out(points.size());
  const auto n = static_cast<std::ptrdiff_t>(points.size());
  const bool par = points.size() * centers.size() >= cutoff;
#pragma omp parallel for schedule(static) if (par)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i] = NearestOf(oracle, points[i], centers);
  }
  oracle.charge(points.size() * centers.size());
  return out;
}

std::optional<std::size_t> RelaxAndFarthest(
    const DistanceOracle& oracle, std::span<const PointId> points,
    PointId center, std::span<double> min_dist,
    std::span<const unsigned char> excluded, std::size_t cutoff) {
  const std::size_t none = points.size();
  const bool par = points.size() >= cutoff;
  std::vector<std::size_t> local_best;
  const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel if (par)
  {
#pragma omp single
    local_best.assign(static_cast<std::size_t>(omp_get_num_threads()), none);
    std::size_t best = none;
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const double d = oracle.raw(points[i], center);
      if (d < min_dist[i]) min_dist[i] = d;
      if (excluded[i]) continue;
      if (best == none || FartherThan(min_dist[i], points[i], min_dist[best],
                                      points[best])) {
        best = static_cast<std::size_t>(i);
      }
    }
    local_best[static_cast<std::size_t>(omp_get_thread_num())] = best;
  }
  oracle.charge(points.size());
  std::size_t best = none;
  for (const std::size_t b : local_best) {
    if (b == none) continue;
    if (best == none ||
        FartherThan(min_dist[b], points[b], min_dist[best], points[best])) {
      best = b;
    }
  }
  if (best == none) return std::nullopt;
  return best;
}

std::vector<double> PairwiseDistances(const DistanceOracle& oracle,
                                      std::span<const PointId> points,
                                      std::size_t cutoff) {
  const std::size_t m = points.size();
  std::vector<double> out(m * m, 0.0);
  const auto n = static_cast<std::ptrdiff_t>(m);
  const bool par = m * m >= cutoff;
#pragma omp parallel for schedule(dynamic, 16) if (par)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      out[static_cast<std::size_t>(i) * m + j] = oracle.raw(points[i], points[j]);
    }
  }
  oracle.charge(m * m);
  return out;
}

namespace serial {

void NearestDistances(const DistanceOracle& oracle,
                      std::span<const PointId> points,
                      std::span<const PointId> centers, std::span<double> out) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    out[i] = MinDistance(oracle, points[i], centers);
  }
  oracle.charge(points.size() * centers.size());
}

std::vector<Nearest> AssignNearest(const DistanceOracle& oracle,
                                   std::span<const PointId> points,
                                   std::span<const PointId> centers) {
  std::vector<Nearest> out;
  out.reserve(points.size());
  for (const PointId p : points) out.push_back(NearestOf(oracle, p, centers));
  oracle.charge(points.size() * centers.size());
  return out;
}

std::optional<std::size_t> RelaxAndFarthest(
    const DistanceOracle& oracle, std::span<const PointId> points,
    PointId center, std::span<double> min_dist,
    std::span<const unsigned char> excluded) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double d = oracle.raw(points[i], center);
    if (d < min_dist[i]) min_dist[i] = d;
    if (excluded[i]) continue;
    if (!best || FartherThan(min_dist[i], points[i], min_dist[*best],
                             points[*best])) {
      best = i;
    }
  }
  oracle.charge(points.size());
  return best;
}

std::vector<double> PairwiseDistances(const DistanceOracle& oracle,
                                      std::span<const PointId> points) {
  const std::size_t m = points.size();
  std::vector<double> out(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      out[i * m + j] = oracle.raw(points[i], points[j]);
    }
  }
  oracle.charge(m * m);
  return out;
}

}  // namespace serial
}  // namespace rcenter::kernels
