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

#include "rcenter/generate.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace rcenter {

void GenSpec::Validate() const {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  if (dimension == 0) throw std::invalid_argument("dimension must be >= 1");
  if (planted_outliers >= n) {
    throw std::invalid_argument("planted outliers must leave an inlier");
  }
  if (layout == Layout::kBlobs && blobs == 0) {
    throw std::invalid_argument("blobs must be at least 1");
  }
  if (!(spread >= 0.0)) throw std::invalid_argument("spread must be >= 0");
  if (!(extent > 0.0)) throw std::invalid_argument("extent must be > 0");
  if (!(displacement >= 0.0)) {
    throw std::invalid_argument("displacement must be >= 0");
  }
  if (weights == WeightModel::kUniform &&
      !(0.0 <= weight_lo && weight_lo <= weight_hi && weight_hi <= 1.0)) {
    throw std::invalid_argument("uniform weights need 0 <= lo <= hi <= 1");
  }
  if (weights == WeightModel::kConstant &&
      !(0.0 <= weight_lo && weight_lo <= 1.0)) {
    throw std::invalid_argument("constant weight must lie in [0,1]");
  }
  if (weight_quantum < 0.0) {
    throw std::invalid_argument("weight quantum must be >= 0");
  }
}

namespace {

using Point = std::vector<double>;

double Norm(const Point& p) {
  double s = 0.0;
  for (const double x : p) s += x * x;
  return std::sqrt(s);
}

Point RandomDirection(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  while (true) {
    Point u(d);
    for (auto& x : u) x = normal(rng);
    const double len = Norm(u);
    if (len > 1e-9) {
      for (auto& x : u) x /= len;
      return u;
    }
  }
}

std::vector<Point> GridPoints(std::size_t count, std::size_t d) {
  std::size_t side = 1;
  while (static_cast<double>(side) <
         std::pow(static_cast<double>(count), 1.0 / static_cast<double>(d)) -
             1e-9) {
    ++side;
  }
  std::vector<Point> out;
  std::vector<std::size_t> digit(d, 0);
  for (std::size_t i = 0; i < count; ++i) {
    Point p(d);
    for (std::size_t a = 0; a < d; ++a) p[a] = static_cast<double>(digit[a]);
    out.push_back(std::move(p));
    // Last axis varies fastest.
    for (std::size_t a = d; a-- > 0;) {
      if (++digit[a] < side) break;
      digit[a] = 0;
    }
  }
  return out;
}

}  // namespace

Dataset Generate(const GenSpec& spec) {
  spec.Validate();
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t d = spec.dimension;
  const std::size_t inliers = spec.n - spec.planted_outliers;

  std::vector<Point> points;
  std::vector<Point> anchors;  // blob centers, or the inliers themselves
  switch (spec.layout) {
    case Layout::kGrid:
      points = GridPoints(inliers, d);
      anchors = points;
      break;
    case Layout::kCube:
      for (std::size_t i = 0; i < inliers; ++i) {
        Point p(d);
        for (auto& x : p) x = spec.extent * unit(rng);
        points.push_back(std::move(p));
      }
      anchors = points;
      break;
    case Layout::kBlobs: {
      for (std::size_t b = 0; b < spec.blobs; ++b) {
        Point c(d);
        for (auto& x : c) x = spec.extent * unit(rng);
        anchors.push_back(std::move(c));
      }
      std::normal_distribution<double> noise(0.0, spec.spread);
      for (std::size_t i = 0; i < inliers; ++i) {
        Point p = anchors[i % spec.blobs];
        for (auto& x : p) x += noise(rng);
        points.push_back(std::move(p));
      }
      break;
    }
  }

  if (spec.planted_outliers > 0) {
    Point centroid(d, 0.0);
    for (const auto& p : points) {
      for (std::size_t a = 0; a < d; ++a) centroid[a] += p[a];
    }
    for (auto& x : centroid) x /= static_cast<double>(points.size());
    double reach = 0.0;
    for (const auto& c : anchors) {
      Point diff(d);
      for (std::size_t a = 0; a < d; ++a) diff[a] = c[a] - centroid[a];
      reach = std::max(reach, Norm(diff));
    }
    for (std::size_t i = 0; i < spec.planted_outliers; ++i) {
      const Point u = RandomDirection(d, rng);
      const double len =
          reach + spec.displacement * spec.spread * (1.0 + unit(rng));
      Point p(d);
      for (std::size_t a = 0; a < d; ++a) p[a] = centroid[a] + u[a] * len;
      points.push_back(std::move(p));
    }
  }

  if (spec.integer_coordinates) {
    for (auto& p : points) {
      for (auto& x : p) x = std::round(x);
    }
  }

  std::vector<double> weights;
  if (spec.weights != WeightModel::kNone) {
    std::uniform_real_distribution<double> w(spec.weight_lo, spec.weight_hi);
    for (std::size_t i = 0; i < spec.n; ++i) {
      double v = spec.weights == WeightModel::kConstant ? spec.weight_lo
                                                        : w(rng);
      if (spec.weight_quantum > 0.0) {
        v = std::round(v / spec.weight_quantum) * spec.weight_quantum;
        v = std::min(1.0, std::max(0.0, v));
      }
      weights.push_back(v);
    }
  }
  std::vector<int> categories;
  if (spec.categories > 0) {
    std::uniform_int_distribution<int> cat(
        0, static_cast<int>(spec.categories) - 1);
    for (std::size_t i = 0; i < spec.n; ++i) categories.push_back(cat(rng));
  }

  Dataset data = Dataset::FromCoordinates(std::move(points));
  if (!weights.empty()) data.set_weights(std::move(weights));
  if (!categories.empty()) data.set_categories(std::move(categories));
  return spec.l1_matrix ? ToL1Matrix(data) : data;
}

Layout ParseLayout(const std::string& name) {
  if (name == "grid") return Layout::kGrid;
  if (name == "blobs") return Layout::kBlobs;
  if (name == "cube") return Layout::kCube;
  throw std::invalid_argument("unknown layout: " + name);
}

WeightModel ParseWeightModel(const std::string& name) {
  if (name == "none") return WeightModel::kNone;
  if (name == "uniform") return WeightModel::kUniform;
  if (name == "constant") return WeightModel::kConstant;
  throw std::invalid_argument("unknown weight model: " + name);
}

Dataset ToL1Matrix(const Dataset& data) {
  if (data.kind() != MetricKind::kEuclidean) {
    throw std::invalid_argument("need a coordinate dataset");
  }
  const std::size_t n = data.size();
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
  for (PointId a = 0; a < n; ++a) {
    const auto pa = data.coords(a);
    for (PointId b = 0; b < n; ++b) {
      const auto pb = data.coords(b);
      double s = 0.0;
      for (std::size_t i = 0; i < pa.size(); ++i) s += std::abs(pa[i] - pb[i]);
      rows[a][b] = s;
    }
  }
  Dataset out = Dataset::FromMatrix(std::move(rows));
  if (data.has_weights()) out.set_weights(data.weights());
  if (data.has_categories()) out.set_categories(data.categories());
  return out;
}

}  // namespace rcenter
