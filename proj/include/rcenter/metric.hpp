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

#ifndef RCENTER_METRIC_HPP_
#define RCENTER_METRIC_HPP_

#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcenter {

using PointId = std::uint32_t;

// Raised when an exhaustive oracle or exact solver would exceed its
// enumeration budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MetricKind { kEuclidean, kMatrix };

// Points with dense ids 0..n-1. Either every point has coordinates of a
// common dimension, or the dataset carries an n x n distance matrix.
class Dataset {
 public:
  static Dataset FromCoordinates(std::vector<std::vector<double>> coords);
  static Dataset FromMatrix(std::vector<std::vector<double>> matrix);

  std::size_t size() const { return n_; }
  std::size_t dimension() const { return dim_; }
  MetricKind kind() const { return kind_; }

  bool has_weights() const { return !weights_.empty(); }
  bool has_categories() const { return !categories_.empty(); }
  double weight(PointId id) const { return weights_.at(id); }
  int category(PointId id) const { return categories_.at(id); }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<int>& categories() const { return categories_; }

  // Weights must lie in [0,1].
  void set_weights(std::vector<double> weights);
  void set_categories(std::vector<int> categories);

  std::span<const double> coords(PointId id) const {
    return {coords_.data() + static_cast<std::size_t>(id) * dim_, dim_};
  }
  double matrix_entry(PointId a, PointId b) const {
    return matrix_[static_cast<std::size_t>(a) * n_ + b];
  }

  // All ids in ascending order.
  std::vector<PointId> ids() const;

 private:
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  MetricKind kind_ = MetricKind::kEuclidean;
  std::vector<double> coords_;
  std::vector<double> matrix_;
  std::vector<double> weights_;
  std::vector<int> categories_;
};

// Options for checking a distance matrix on load.
struct MatrixCheck {
  bool strict = false;  // full O(n^3) triangle check
  std::size_t sampled_triples = 1000;
  std::uint64_t seed = 0x5eed;
};

// Throws std::invalid_argument describing the first violated metric axiom.
void ValidateMatrix(const Dataset& data, const MatrixCheck& check = {});

// JSON-lines, one `{"id":..,"coords":[..],"weight":..,"category":..}` per line.
Dataset LoadJsonLines(const std::string& path);
// `{"n":..,"d":[[..],..]}` with optional "weight" / "category" arrays.
Dataset LoadMatrixJson(const std::string& path, const MatrixCheck& check = {});
// Dispatches on content: an object with a "d" member is a matrix file.
Dataset LoadDataset(const std::string& path, const MatrixCheck& check = {});
void SaveJsonLines(const Dataset& data, const std::string& path);
void SaveMatrixJson(const Dataset& data, const std::string& path);
// JSON-lines for coordinates, the matrix format otherwise.
void SaveDataset(const Dataset& data, const std::string& path);

// Read-only view over a dataset that answers distance queries and keeps an
// exact tally of how many it answered. Shareable across threads.
class DistanceOracle {
 public:
  explicit DistanceOracle(const Dataset& data) : data_(&data) {}
  DistanceOracle(const DistanceOracle&) = delete;
  DistanceOracle& operator=(const DistanceOracle&) = delete;

  const Dataset& dataset() const { return *data_; }
  std::size_t size() const { return data_->size(); }

  // Counted, bounds-checked query.
  double distance(PointId a, PointId b) const;

  // Uncounted, unchecked query for kernels that charge in bulk.
  double raw(PointId a, PointId b) const {
    if (data_->kind() == MetricKind::kMatrix) return data_->matrix_entry(a, b);
    const auto pa = data_->coords(a);
    const auto pb = data_->coords(b);
    double sum = 0.0;
    for (std::size_t i = 0; i < pa.size(); ++i) {
      const double diff = pa[i] - pb[i];
      sum += diff * diff;
    }
    return std::sqrt(sum);
  }
  void charge(std::uint64_t evaluations) const {
    evaluations_.fetch_add(evaluations, std::memory_order_relaxed);
  }

  std::uint64_t evaluations() const {
    return evaluations_.load(std::memory_order_relaxed);
  }
  void reset_evaluations() const { evaluations_.store(0); }

  void check_id(PointId id) const;

 private:
  const Dataset* data_;
  mutable std::atomic<std::uint64_t> evaluations_{0};
};

struct MultiplicityPoint {
  PointId point;
  std::uint64_t multiplicity;

  friend bool operator==(const MultiplicityPoint&,
                         const MultiplicityPoint&) = default;
};

// Wraps every id with multiplicity one.
std::vector<MultiplicityPoint> UnitMultiplicities(std::span<const PointId> ids);
std::uint64_t TotalMass(std::span<const MultiplicityPoint> points);

// max over v in `points` of d(v, centers).
double CoverageRadius(std::span<const PointId> centers,
                      std::span<const PointId> points,
                      const DistanceOracle& oracle);

// Smallest v such that the points within distance v of `centers` carry at
// least (total mass - z) multiplicity. Ties in distance are ordered by id.
double RobustCost(std::span<const PointId> centers,
                  std::span<const MultiplicityPoint> points, std::uint64_t z,
                  const DistanceOracle& oracle);

// Same quantity from precomputed distances (distances[i] belongs to
// points[i]); performs no distance evaluations.
double RobustCostFromDistances(std::span<const double> distances,
                               std::span<const MultiplicityPoint> points,
                               std::uint64_t z);

// Multiplicity-one convenience form.
double RobustCost(std::span<const PointId> centers,
                  std::span<const PointId> points, std::uint64_t z,
                  const DistanceOracle& oracle);

}  // namespace rcenter

#endif  // RCENTER_METRIC_HPP_
