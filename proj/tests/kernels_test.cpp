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


#include <omp.h>

#include <cstring>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "rcenter/generate.hpp"
#include "rcenter/kernels.hpp"

namespace {

using rcenter::DistanceOracle;
using rcenter::PointId;
namespace kernels = rcenter::kernels;

// Forces the parallel path with several threads even on one core.
struct ParallelScope {
  int saved = omp_get_max_threads();
  ParallelScope() { omp_set_num_threads(4); }
  ~ParallelScope() { omp_set_num_threads(saved); }
};

bool SameBits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

rcenter::Dataset Blobs(std::uint64_t seed, bool matrix) {
  rcenter::GenSpec spec;
  spec.n = 300;
  spec.dimension = 3;
  spec.layout = rcenter::Layout::kBlobs;
  spec.blobs = 4;
  spec.integer_coordinates = matrix;
  spec.l1_matrix = matrix;
  spec.seed = seed;
  return rcenter::Generate(spec);
}

TEST_CASE("parallel kernels match the serial reference bit for bit") {
  ParallelScope scope;
  for (const bool matrix : {false, true}) {
    const auto data = Blobs(11, matrix);
    const auto ids = oracle::Iota(data.size());
    // Duplicate centers exercise the tie rule.
    const std::vector<PointId> centers = {7, 42, 42, 199, 3};

    const DistanceOracle dp(data), ds(data);
    std::vector<double> np(ids.size()), ns(ids.size());
    kernels::NearestDistances(dp, ids, centers, np, 0);
    kernels::serial::NearestDistances(ds, ids, centers, ns);
    for (std::size_t i = 0; i < ids.size(); ++i) CHECK(SameBits(np[i], ns[i]));

    const auto ap = kernels::AssignNearest(dp, ids, centers, 0);
    const auto as = kernels::serial::AssignNearest(ds, ids, centers);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      CHECK(ap[i].center_index == as[i].center_index);
      CHECK(SameBits(ap[i].distance, as[i].distance));
    }
    CHECK(ap[42].center_index == 1);

    const auto pp = kernels::PairwiseDistances(dp, ids, 0);
    const auto ps = kernels::serial::PairwiseDistances(ds, ids);
    CHECK(pp == ps);

    std::vector<double> mp(ids.size(), 1e300), ms(ids.size(), 1e300);
    std::vector<unsigned char> excluded(ids.size(), 0);
    excluded[5] = 1;
    for (const PointId c : {0u, 150u, 77u}) {
      const auto fp = kernels::RelaxAndFarthest(dp, ids, c, mp, excluded, 0);
      const auto fs = kernels::serial::RelaxAndFarthest(ds, ids, c, ms, excluded);
      CHECK(fp == fs);
    }
    CHECK(mp == ms);
    CHECK(dp.evaluations() == ds.evaluations());
  }
}

TEST_CASE("farthest point ties go to the lowest id") {
  const auto data = rcenter::Dataset::FromCoordinates({{0}, {2}, {-2}, {1}});
  const DistanceOracle d(data);
  const auto ids = oracle::Iota(4);
  std::vector<double> dist(4, 1e300);
  std::vector<unsigned char> excluded(4, 0);
  const auto far = kernels::RelaxAndFarthest(d, ids, 0, dist, excluded);
  REQUIRE(far.has_value());
  CHECK(*far == 1);
  CHECK(d.evaluations() == 4);
  excluded = {1, 1, 1, 1};
  CHECK_FALSE(kernels::RelaxAndFarthest(d, ids, 0, dist, excluded).has_value());
}

}  // namespace
