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


#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "rcenter/kcenter.hpp"

namespace {

using rcenter::DistanceOracle;
using rcenter::PointId;
using Ids = std::vector<PointId>;

Ids Sorted(Ids v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST_CASE("farthest-first traversal") {
  const auto data = fixtures::Line({0, 4, 5, 10});
  const DistanceOracle d(data);
  const Ids all = {0, 1, 2, 3};

  const auto two = rcenter::Gonzalez(all, 2, d);
  CHECK(Sorted(two.centers) == Ids{0, 3});
  CHECK(two.radius == 5.0);
  CHECK(d.evaluations() == 2 * all.size());

  const auto one = rcenter::Gonzalez(all, 1, d);
  CHECK(one.centers == Ids{0});
  CHECK(one.radius == 10.0);

  const auto every = rcenter::Gonzalez(all, 4, d);
  CHECK(every.radius == 0.0);
  CHECK(rcenter::Gonzalez(all, 9, d).centers == all);
  CHECK_THROWS(rcenter::Gonzalez(all, 0, d));
}

TEST_CASE("farthest-first starts from the lowest id and breaks ties low") {
  // Points 1 and 2 are both at distance 3 from point 0.
  const auto data = fixtures::Line({5, 2, 8, 5});
  const DistanceOracle d(data);
  const auto out = rcenter::Gonzalez(Ids{3, 2, 1, 0}, 2, d);
  CHECK(out.centers == Ids{0, 1});
}

TEST_CASE("threshold greedy") {
  const auto data = fixtures::Line({0, 1, 2, 10});
  const DistanceOracle d(data);
  const Ids all = {0, 1, 2, 3};
  CHECK(rcenter::ThresholdGreedy(all, 1.5, d).centers == Ids{0, 2, 3});
  CHECK(rcenter::ThresholdGreedy(all, 0.0, d).centers == all);
  CHECK(rcenter::ThresholdGreedy(all, 10.0, d).centers == Ids{0});
}

TEST_CASE("nearest-center assignment") {
  const auto data = fixtures::Line({0, 1, 2, 10});
  const DistanceOracle d(data);
  const Ids all = {0, 1, 2, 3};
  const auto c = rcenter::ClusterAssign(all, Ids{0, 3}, d);
  const auto members = c.Members();
  CHECK(members[0] == Ids{0, 1, 2});
  CHECK(members[1] == Ids{3});

  const auto single = rcenter::ClusterAssign(all, Ids{2}, d);
  CHECK(single.Members()[0] == all);

  // Point 2 sits halfway between points 0 and 1.
  const auto mid = fixtures::Line({0, 2, 1});
  const DistanceOracle dm(mid);
  CHECK(rcenter::ClusterAssign(Ids{0, 1, 2}, Ids{0, 1}, dm).cluster_of[2] == 0);
  CHECK(rcenter::ClusterAssign(Ids{0, 1, 2}, Ids{1, 0}, dm).cluster_of[2] == 0);
}

TEST_CASE("exact k-center") {
  const auto data = fixtures::Line({0, 4, 5, 10});
  const DistanceOracle d(data);
  const Ids all = {0, 1, 2, 3};
  CHECK(rcenter::BruteForceKCenter(all, 4, d).radius == 0.0);
  const auto two = rcenter::BruteForceKCenter(all, 2, d);
  CHECK(two.radius == 4.0);
  CHECK(two.radius == oracle::BruteKCenter(data, 2));

  const auto ends = fixtures::Line({0, 10});
  const DistanceOracle de(ends);
  CHECK(rcenter::BruteForceKCenter(Ids{0, 1}, 1, de).radius == 10.0);
  CHECK_THROWS_WITH(rcenter::BruteForceKCenter(all, 2, d, 5),
                    "oracle budget exceeded");
}

TEST_CASE("farthest-first is within twice the optimum") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    rcenter::GenSpec spec;
    spec.n = 5 + rng() % 16;
    spec.dimension = 1 + rng() % 3;
    spec.layout = rcenter::Layout::kBlobs;
    spec.seed = rng();
    const auto data = rcenter::Generate(spec);
    const DistanceOracle d(data);
    const std::size_t k = 1 + rng() % 4;
    const auto g = rcenter::Gonzalez(data.ids(), k, d);
    const double opt = oracle::BruteKCenter(data, k);
    CHECK(g.radius <= 2.0 * opt);
    CHECK(g.radius == rcenter::CoverageRadius(g.centers, data.ids(), d));
  }
}

TEST_CASE("binomial saturates") {
  CHECK(rcenter::Binomial(5, 2) == 10);
  CHECK(rcenter::Binomial(3, 5) == 0);
  CHECK(rcenter::Binomial(200, 100) == UINT64_MAX);
}

}  // namespace
