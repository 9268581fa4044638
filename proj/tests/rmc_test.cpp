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
#include "rcenter/rmc.hpp"

namespace {

using rcenter::DistanceOracle;
using rcenter::MultiplicityPoint;
using rcenter::PointId;
using Ids = std::vector<PointId>;

TEST_CASE("coreset on a short line keeps every point") {
  const auto data = fixtures::Line({0, 1, 2, 10});
  const DistanceOracle d(data);
  const rcenter::UniformMatroid m(4, 1);
  const auto c = rcenter::BuildRmcCoreset(data.ids(), m, 1, 1, 0.5,
                                          rcenter::GonzalezAlgorithm(), d);
  CHECK(c.r_guess == 2.0);
  CHECK(c.tau == 4);
  CHECK(c.proxy == data.ids());
  CHECK(c.members == rcenter::UnitMultiplicities(data.ids()));
  CHECK(rcenter::CertifyC1(c, 0.0, d));
}

TEST_CASE("coreset compresses tight clusters") {
  rcenter::GenSpec spec;
  spec.n = 200;
  spec.dimension = 2;
  spec.layout = rcenter::Layout::kBlobs;
  spec.blobs = 3;
  spec.spread = 0.5;
  spec.extent = 1000;
  spec.seed = 8;
  const auto data = rcenter::Generate(spec);
  const DistanceOracle d(data);
  const rcenter::UniformMatroid m(data.size(), 2);
  const auto c = rcenter::BuildRmcCoreset(data.ids(), m, 2, 0, 0.5,
                                          rcenter::GonzalezAlgorithm(), d);
  CHECK(c.members.size() < data.size());
  CHECK(c.members.size() <= 2 * c.tau);
  CHECK(rcenter::TotalMass(c.members) == data.size());

  const auto inst = rcenter::RmcInstance::Make(d, m, 0);
  const double rstar = rcenter::BruteForceRmc(inst).cost;
  CHECK(rcenter::CertifyC1(c, rstar, d));
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const Ids x = {static_cast<PointId>(rng() % 200),
                   static_cast<PointId>(100 + rng() % 100)};
    if (x[0] == x[1]) continue;
    CHECK(rcenter::CertifyC2(c, x, rstar, m, d));
  }
  // Members of the coreset map to themselves.
  const auto ids = c.member_ids();
  const Ids inside = {ids.front(), ids.back()};
  CHECK(rcenter::TransportIndependentSet(c, inside, m) == inside);
}

TEST_CASE("transport keeps partition quotas") {
  std::mt19937_64 rng(23);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto c = oracle::RandomRmcCase(3 * seed + 1, 20);  // partition matroids
    const DistanceOracle d(c.data);
    const auto m = rcenter::MatroidFromJson(c.matroid.Spec(), c.data);
    const auto inst = rcenter::RmcInstance::Make(d, *m, c.z);
    const double rstar = oracle::BruteRmc(c.data, c.matroid, c.z);
    const auto core = rcenter::BuildRmcCoreset(
        c.data.ids(), *m, inst.k, c.z, 0.5, rcenter::GonzalezAlgorithm(), d);
    auto order = c.data.ids();
    std::shuffle(order.begin(), order.end(), rng);
    const auto x = rcenter::MaximalIndependentSubset(order, *m).members;
    CHECK(rcenter::CertifyC2(core, x, rstar, *m, d));
  }
}

TEST_CASE("exact solver on a two-member coreset") {
  const auto data = fixtures::Line({0, 10});
  const DistanceOracle d(data);
  const rcenter::UniformMatroid m(2, 1);
  const std::vector<MultiplicityPoint> t = {{0, 3}, {1, 1}};
  const auto s = rcenter::ExactRmcmSolver().Solve(t, m, 1, d);
  CHECK(s.centers == Ids{0});
  CHECK(s.cost == 0.0);
  const std::vector<MultiplicityPoint> single = {{1, 4}};
  CHECK(rcenter::ExactRmcmSolver().Solve(single, m, 2, d).centers == Ids{1});
  CHECK_THROWS_WITH(rcenter::ExactRmcmSolver().Solve(t, m, 4, d),
                    "z exhausts all mass");
  CHECK_THROWS_AS(rcenter::ExactRmcmSolver(1).Solve(t, m, 0, d),
                  rcenter::BudgetExceeded);
}

TEST_CASE("exact solver matches enumeration on random coresets") {
  std::mt19937_64 rng(31);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto c = oracle::RandomRmcCase(seed, 24);
    const DistanceOracle d(c.data);
    const auto m = rcenter::MatroidFromJson(c.matroid.Spec(), c.data);
    Ids members;
    std::vector<std::uint64_t> mult;
    std::vector<MultiplicityPoint> t;
    for (PointId p = 0; p < c.data.size() && members.size() < 12; ++p) {
      if (rng() % 2) continue;
      members.push_back(p);
      mult.push_back(1 + rng() % 4);
      t.push_back({p, mult.back()});
    }
    if (t.empty()) continue;
    const std::uint64_t z = rng() % rcenter::TotalMass(t);
    const double expected = oracle::BruteRmcm(c.data, c.matroid, members, mult, z);
    for (const bool parallel : {false, true}) {
      const auto s = rcenter::ExactRmcmSolver(10'000'000, parallel)
                         .Solve(t, *m, z, d);
      CHECK(s.cost == expected);
      CHECK(c.matroid.Independent(s.centers));
    }
    const auto h = rcenter::LocalSearchRmcmSolver().Solve(t, *m, z, d);
    CHECK(c.matroid.Independent(h.centers));
    CHECK(h.cost >= expected);
  }
}

TEST_CASE("solve_rmc end to end") {
  CHECK(rcenter::RmcEpsPrime(0.7, 3.0) == doctest::Approx(0.1));

  const auto data = fixtures::Line({0, 1, 2, 10});
  const DistanceOracle d(data);
  const rcenter::UniformMatroid all(4, 4);
  const auto zero =
      rcenter::SolveRmc(rcenter::RmcInstance::Make(d, all, 0), 0.5,
                        rcenter::ExactRmcmSolver());
  CHECK(zero.solution.cost == 0.0);

  const rcenter::UniformMatroid one(4, 1);
  const auto inst = rcenter::RmcInstance::Make(d, one, 1);
  const auto opt = rcenter::BruteForceRmc(inst);
  // Center 1 leaves only the point at 10 beyond distance 1.
  CHECK(opt.centers == Ids{1});
  CHECK(opt.cost == 1.0);
  CHECK(rcenter::RobustCost(Ids{0}, data.ids(), 1, d) == 2.0);
  const auto out = rcenter::SolveRmc(inst, 0.5, rcenter::ExactRmcmSolver());
  CHECK(out.solution.cost <= 1.5 * opt.cost);
  CHECK(out.eps_prime == doctest::Approx(0.5 / 3));

  const auto last = rcenter::BruteForceRmc(rcenter::RmcInstance::Make(d, one, 3));
  CHECK(last.cost == 0.0);
  CHECK_THROWS_WITH(rcenter::RmcInstance::Make(d, one, 4),
                    "z must be smaller than |V|");
  CHECK_THROWS(rcenter::SolveRmc(inst, 1.5, rcenter::ExactRmcmSolver()));
}

TEST_CASE("matroid-constrained k-center when z is zero") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto c = oracle::RandomRmcCase(seed, 16);
    const DistanceOracle d(c.data);
    const auto m = rcenter::MatroidFromJson(c.matroid.Spec(), c.data);
    const auto inst = rcenter::RmcInstance::Make(d, *m, 0);
    const auto opt = rcenter::BruteForceRmc(inst);
    const auto ids = c.data.ids();
    CHECK(opt.cost == rcenter::CoverageRadius(opt.centers, ids, d));
    CHECK(opt.cost == oracle::BruteRmc(c.data, c.matroid, 0));
  }
}

}  // namespace
