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


#include <fstream>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "rcenter/metric.hpp"

namespace {

using rcenter::Dataset;
using rcenter::DistanceOracle;
using rcenter::MultiplicityPoint;
using rcenter::PointId;

TEST_CASE("distance on a line and from a matrix") {
  const Dataset line = fixtures::Line({0, 3});
  const DistanceOracle d(line);
  CHECK(d.distance(1, 1) == 0.0);
  CHECK(d.distance(0, 1) == 3.0);
  CHECK(d.evaluations() == 2);
  CHECK_THROWS_WITH(d.distance(0, 2), "invalid point id");

  std::vector<std::vector<double>> m(5, std::vector<double>(5, 1.0));
  for (int i = 0; i < 5; ++i) m[i][i] = 0.0;
  m[2][4] = m[4][2] = 7.0;
  const Dataset matrix = Dataset::FromMatrix(m);
  const DistanceOracle dm(matrix);
  CHECK(dm.distance(2, 4) == 7.0);
  CHECK(dm.distance(4, 2) == 7.0);
}

TEST_CASE("coverage radius") {
  const Dataset data = fixtures::Line({0, 1, 2, 10});
  const DistanceOracle d(data);
  const std::vector<PointId> all = {0, 1, 2, 3};
  CHECK(rcenter::CoverageRadius(all, all, d) == 0.0);
  CHECK(rcenter::CoverageRadius(std::vector<PointId>{0}, all, d) == 10.0);
  CHECK(rcenter::CoverageRadius(std::vector<PointId>{0, 3}, all, d) == 2.0);
  CHECK_THROWS_WITH(rcenter::CoverageRadius({}, all, d), "empty center set");
}

TEST_CASE("robust cost drops the farthest mass") {
  const Dataset data = fixtures::Line({0, 1, 2, 10});
  const DistanceOracle d(data);
  const std::vector<PointId> all = {0, 1, 2, 3};
  const std::vector<PointId> s = {0};
  CHECK(rcenter::RobustCost(s, all, 1, d) == 2.0);
  CHECK(rcenter::RobustCost(s, all, 0, d) == 10.0);
  CHECK_THROWS_WITH(rcenter::RobustCost(s, all, 4, d), "z exhausts all mass");
  CHECK_THROWS_WITH(rcenter::RobustCost({}, all, 0, d), "empty center set");

  const Dataset two = fixtures::Line({0, 9});
  const DistanceOracle d2(two);
  const std::vector<MultiplicityPoint> heavy = {{0, 5}, {1, 1}};
  CHECK(rcenter::RobustCost(s, heavy, 1, d2) == 0.0);
  CHECK(rcenter::TotalMass(heavy) == 6);
}

TEST_CASE("robust cost ties share one order statistic") {
  // Four points at distance 1 and one at 5: dropping one unit of mass
  // cannot remove the tied group.
  const Dataset data = fixtures::Line({0, 1, -1, 1, -1, 5});
  const DistanceOracle d(data);
  const std::vector<PointId> all = {1, 2, 3, 4, 5};
  CHECK(rcenter::RobustCost(std::vector<PointId>{0}, all, 1, d) == 1.0);
  CHECK(rcenter::RobustCost(std::vector<PointId>{0}, all, 2, d) == 1.0);
  CHECK(rcenter::RobustCost(std::vector<PointId>{0}, all, 0, d) == 5.0);
}

TEST_CASE("robust cost agrees with enumeration on random inputs") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    rcenter::GenSpec spec;
    spec.n = 3 + rng() % 20;
    spec.dimension = 2;
    spec.seed = rng();
    const Dataset data = rcenter::Generate(spec);
    const DistanceOracle d(data);
    const auto ids = oracle::Iota(spec.n);
    const std::vector<PointId> s = {static_cast<PointId>(rng() % spec.n)};
    const std::uint64_t z = rng() % spec.n;
    CHECK(rcenter::RobustCost(s, ids, z, d) ==
          oracle::RobustCost(s, ids, z, oracle::MetricOf(data)));
  }
}

TEST_CASE("dataset validation") {
  CHECK_THROWS_WITH(Dataset::FromCoordinates({{0.0}, {1.0, 2.0}}),
                    "coordinate vectors differ in dimension");
  Dataset data = fixtures::Line({0, 1});
  CHECK_THROWS_WITH(data.set_weights({0.5}),
                    "weight count does not match point count");
  CHECK_THROWS_WITH(data.set_weights({0.5, 1.5}), "weight outside [0,1]");
  data.set_weights({0.25, 1.0});
  CHECK(data.weight(1) == 1.0);

  const Dataset asym = Dataset::FromMatrix({{0, 1}, {2, 0}});
  CHECK_THROWS_WITH(rcenter::ValidateMatrix(asym),
                    "distance matrix is not symmetric");
  const Dataset triangle =
      Dataset::FromMatrix({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}});
  CHECK_THROWS(rcenter::ValidateMatrix(triangle, {.strict = true}));
}

TEST_CASE("datasets round-trip through files") {
  fixtures::TempDir dir("metric");
  Dataset points = Dataset::FromCoordinates({{0.5, 1}, {2, -3}, {4, 4}});
  points.set_weights({0.25, 0.5, 1.0});
  points.set_categories({0, 1, 0});
  rcenter::SaveDataset(points, dir.File("p.jsonl"));
  const Dataset back = rcenter::LoadDataset(dir.File("p.jsonl"));
  REQUIRE(back.size() == 3);
  CHECK(back.coords(1)[1] == -3.0);
  CHECK(back.weights() == points.weights());
  CHECK(back.categories() == points.categories());

  Dataset matrix = Dataset::FromMatrix({{0, 2, 3}, {2, 0, 1}, {3, 1, 0}});
  matrix.set_weights({0.1, 0.2, 0.3});
  rcenter::SaveDataset(matrix, dir.File("m.json"));
  const Dataset mback = rcenter::LoadDataset(dir.File("m.json"));
  CHECK(mback.kind() == rcenter::MetricKind::kMatrix);
  CHECK(mback.matrix_entry(0, 2) == 3.0);
  CHECK(mback.weights() == matrix.weights());

  std::ofstream(dir.File("gap.jsonl")) << R"({"id":0,"coords":[0]})" << "\n"
                                       << R"({"id":2,"coords":[1]})" << "\n";
  CHECK_THROWS_WITH(rcenter::LoadDataset(dir.File("gap.jsonl")),
                    "ids must be dense 0..n-1 without duplicates");
}

}  // namespace
