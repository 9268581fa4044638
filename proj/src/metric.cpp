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

#include "rcenter/metric.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "json.hpp"
#include "rcenter/kernels.hpp"

namespace rcenter {

using nlohmann::json;

Dataset Dataset::FromCoordinates(std::vector<std::vector<double>> coords) {
  Dataset data;
  data.kind_ = MetricKind::kEuclidean;
  data.n_ = coords.size();
  data.dim_ = coords.empty() ? 0 : coords.front().size();
  data.coords_.reserve(data.n_ * data.dim_);
  for (const auto& row : coords) {
    if (row.size() != data.dim_) {
      throw std::invalid_argument("coordinate vectors differ in dimension");
    }
    for (const double v : row) {
      if (!std::isfinite(v)) throw std::invalid_argument("non-finite coordinate");
      data.coords_.push_back(v);
    }
  }
  return data;
}

Dataset Dataset::FromMatrix(std::vector<std::vector<double>> matrix) {
  Dataset data;
  data.kind_ = MetricKind::kMatrix;
  data.n_ = matrix.size();
  data.matrix_.reserve(data.n_ * data.n_);
  for (const auto& row : matrix) {
    if (row.size() != data.n_) {
      throw std::invalid_argument("distance matrix is not square");
    }
    data.matrix_.insert(data.matrix_.end(), row.begin(), row.end());
  }
  return data;
}

void Dataset::set_weights(std::vector<double> weights) {
  if (weights.size() != n_) {
    throw std::invalid_argument("weight count does not match point count");
  }
  for (const double w : weights) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw std::invalid_argument("weight outside [0,1]");
    }
  }
  weights_ = std::move(weights);
}

void Dataset::set_categories(std::vector<int> categories) {
  if (categories.size() != n_) {
    throw std::invalid_argument("category count does not match point count");
  }
  categories_ = std::move(categories);
}

std::vector<PointId> Dataset::ids() const {
  std::vector<PointId> out(n_);
  std::iota(out.begin(), out.end(), PointId{0});
  return out;
}

void ValidateMatrix(const Dataset& data, const MatrixCheck& check) {
  if (data.kind() != MetricKind::kMatrix) return;
  const std::size_t n = data.size();
  for (std::size_t a = 0; a < n; ++a) {
    const auto pa = static_cast<PointId>(a);
    if (data.matrix_entry(pa, pa) != 0.0) {
      throw std::invalid_argument("distance matrix has a nonzero diagonal");
    }
    for (std::size_t b = 0; b < n; ++b) {
      const double d = data.matrix_entry(pa, static_cast<PointId>(b));
      if (!std::isfinite(d) || d < 0.0) {
        throw std::invalid_argument("distance matrix has a negative entry");
      }
      if (d != data.matrix_entry(static_cast<PointId>(b), pa)) {
        throw std::invalid_argument("distance matrix is not symmetric");
      }
    }
  }
  if (n < 3) return;
  // Relative slack absorbs rounding in matrices exported from float metrics.
  auto violates = [&](PointId a, PointId b, PointId c) {
    const double lhs = data.matrix_entry(a, c);
    const double rhs = data.matrix_entry(a, b) + data.matrix_entry(b, c);
    return lhs > rhs * (1.0 + 1e-12);
  };
  auto fail = [](PointId a, PointId b, PointId c) {
    std::ostringstream msg;
    msg << "triangle inequality violated on (" << a << "," << b << "," << c
        << ")";
    throw std::invalid_argument(msg.str());
  };
  const std::size_t all = n * n * n;
  if (check.strict || all <= check.sampled_triples) {
    for (PointId a = 0; a < n; ++a)
      for (PointId b = 0; b < n; ++b)
        for (PointId c = 0; c < n; ++c)
          if (violates(a, b, c)) fail(a, b, c);
    return;
  }
  std::mt19937_64 rng(check.seed);
  std::uniform_int_distribution<PointId> pick(0, static_cast<PointId>(n - 1));
  for (std::size_t t = 0; t < check.sampled_triples; ++t) {
    const PointId a = pick(rng), b = pick(rng), c = pick(rng);
    if (violates(a, b, c)) fail(a, b, c);
  }
}

namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Dataset LoadJsonLines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  struct Row {
    std::int64_t id;
    std::vector<double> coords;
    std::optional<double> weight;
    std::optional<int> category;
  };
  std::vector<Row> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::parse_error& e) {
      throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": " +
                                  e.what());
    }
    Row row;
    row.id = rec.at("id").get<std::int64_t>();
    row.coords = rec.at("coords").get<std::vector<double>>();
    if (rec.contains("weight") && !rec["weight"].is_null())
      row.weight = rec["weight"].get<double>();
    if (rec.contains("category") && !rec["category"].is_null())
      row.category = rec["category"].get<int>();
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return a.id < b.id; });
  std::vector<std::vector<double>> coords;
  std::vector<double> weights;
  std::vector<int> categories;
  std::size_t with_weight = 0, with_category = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].id != static_cast<std::int64_t>(i)) {
      throw std::invalid_argument("ids must be dense 0..n-1 without duplicates");
    }
    coords.push_back(std::move(rows[i].coords));
    weights.push_back(rows[i].weight.value_or(0.0));
    categories.push_back(rows[i].category.value_or(0));
    with_weight += rows[i].weight.has_value();
    with_category += rows[i].category.has_value();
  }
  Dataset data = Dataset::FromCoordinates(std::move(coords));
  if (with_weight > 0) {
    if (with_weight != rows.size())
      throw std::invalid_argument("weights must be given for all points or none");
    data.set_weights(std::move(weights));
  }
  if (with_category > 0) {
    if (with_category != rows.size())
      throw std::invalid_argument(
          "categories must be given for all points or none");
    data.set_categories(std::move(categories));
  }
  return data;
}

namespace {

Dataset MatrixFromJson(const json& doc, const MatrixCheck& check) {
  const auto n = doc.at("n").get<std::size_t>();
  auto rows = doc.at("d").get<std::vector<std::vector<double>>>();
  if (rows.size() != n) throw std::invalid_argument("matrix row count != n");
  Dataset data = Dataset::FromMatrix(std::move(rows));
  ValidateMatrix(data, check);
  if (doc.contains("weight")) data.set_weights(doc["weight"].get<std::vector<double>>());
  if (doc.contains("category"))
    data.set_categories(doc["category"].get<std::vector<int>>());
  return data;
}

}  // namespace

Dataset LoadMatrixJson(const std::string& path, const MatrixCheck& check) {
  return MatrixFromJson(json::parse(ReadFile(path)), check);
}

Dataset LoadDataset(const std::string& path, const MatrixCheck& check) {
  // A matrix file is one JSON object with a "d" member; JSON-lines with more
  // than one record does not parse as a single document.
  json doc = json::parse(ReadFile(path), nullptr, false);
  if (!doc.is_discarded() && doc.is_object() && doc.contains("d")) {
    return MatrixFromJson(doc, check);
  }
  return LoadJsonLines(path);
}

void SaveJsonLines(const Dataset& data, const std::string& path) {
  if (data.kind() != MetricKind::kEuclidean) {
    throw std::invalid_argument("only coordinate datasets save as JSON-lines");
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (PointId id = 0; id < data.size(); ++id) {
    json rec;
    rec["id"] = id;
    const auto c = data.coords(id);
    rec["coords"] = std::vector<double>(c.begin(), c.end());
    if (data.has_weights()) rec["weight"] = data.weight(id);
    if (data.has_categories()) rec["category"] = data.category(id);
    out << rec.dump() << '\n';
  }
}

void SaveMatrixJson(const Dataset& data, const std::string& path) {
  if (data.kind() != MetricKind::kMatrix) {
    throw std::invalid_argument("not a matrix dataset");
  }
  json doc;
  doc["n"] = data.size();
  std::vector<std::vector<double>> rows(data.size());
  for (PointId a = 0; a < data.size(); ++a) {
    for (PointId b = 0; b < data.size(); ++b) {
      rows[a].push_back(data.matrix_entry(a, b));
    }
  }
  doc["d"] = rows;
  if (data.has_weights()) doc["weight"] = data.weights();
  if (data.has_categories()) doc["category"] = data.categories();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << doc.dump() << '\n';
}

void SaveDataset(const Dataset& data, const std::string& path) {
  if (data.kind() == MetricKind::kMatrix) {
    SaveMatrixJson(data, path);
  } else {
    SaveJsonLines(data, path);
  }
}

void DistanceOracle::check_id(PointId id) const {
  if (id >= data_->size()) throw std::out_of_range("invalid point id");
}

double DistanceOracle::distance(PointId a, PointId b) const {
  check_id(a);
  check_id(b);
  charge(1);
  return raw(a, b);
}

std::vector<MultiplicityPoint> UnitMultiplicities(std::span<const PointId> ids) {
  std::vector<MultiplicityPoint> out;
  out.reserve(ids.size());
  for (const PointId id : ids) out.push_back({id, 1});
  return out;
}

std::uint64_t TotalMass(std::span<const MultiplicityPoint> points) {
  std::uint64_t mass = 0;
  for (const auto& p : points) mass += p.multiplicity;
  return mass;
}

double CoverageRadius(std::span<const PointId> centers,
                      std::span<const PointId> points,
                      const DistanceOracle& oracle) {
  if (centers.empty()) throw std::invalid_argument("empty center set");
  for (const PointId c : centers) oracle.check_id(c);
  for (const PointId p : points) oracle.check_id(p);
  std::vector<double> dist(points.size());
  kernels::NearestDistances(oracle, points, centers, dist);
  double r = 0.0;
  for (const double d : dist) r = std::max(r, d);
  return r;
}

double RobustCostFromDistances(std::span<const double> distances,
                               std::span<const MultiplicityPoint> points,
                               std::uint64_t z) {
  const std::uint64_t mass = TotalMass(points);
  if (z >= mass) throw std::invalid_argument("z exhausts all mass");
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (distances[a] != distances[b]) return distances[a] < distances[b];
    return points[a].point < points[b].point;
  });
  const std::uint64_t need = mass - z;
  std::uint64_t covered = 0;
  for (const std::size_t i : order) {
    covered += points[i].multiplicity;
    if (covered >= need) return distances[i];
  }
  return distances[order.back()];  // unreachable: need <= mass
}

double RobustCost(std::span<const PointId> centers,
                  std::span<const MultiplicityPoint> points, std::uint64_t z,
                  const DistanceOracle& oracle) {
  if (centers.empty()) throw std::invalid_argument("empty center set");
  if (z >= TotalMass(points)) throw std::invalid_argument("z exhausts all mass");
  for (const PointId c : centers) oracle.check_id(c);
  std::vector<PointId> ids;
  ids.reserve(points.size());
  for (const auto& p : points) {
    oracle.check_id(p.point);
    ids.push_back(p.point);
  }
  std::vector<double> dist(points.size());
  kernels::NearestDistances(oracle, ids, centers, dist);
  return RobustCostFromDistances(dist, points, z);
}

double RobustCost(std::span<const PointId> centers,
                  std::span<const PointId> points, std::uint64_t z,
                  const DistanceOracle& oracle) {
  const auto unit = UnitMultiplicities(points);
  return RobustCost(centers, std::span<const MultiplicityPoint>(unit), z,
                    oracle);
}

}  // namespace rcenter
