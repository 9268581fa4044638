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

// Property checks over seeded random instances. Prints one PASS/FAIL line
// per criterion and exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rcenter/bigdata.hpp"
#include "rcenter/kcenter.hpp"
#include "rcenter/matroid.hpp"
#include "rcenter/metric.hpp"
#include "rcenter/rkc.hpp"
#include "rcenter/rmc.hpp"
#include "rcenter/runner.hpp"

namespace {

using rcenter::PointId;

constexpr double kEps = 0.5;
constexpr int kRmcCases = 200;
constexpr int kRkcCases = 200;

struct Tally {
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::string first;

  void Check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (violations++ == 0) first = what;
  }
};

bool Report(int id, const std::string& name, const Tally& t,
            const std::string& extra = "") {
  const bool pass = t.violations == 0 && t.checks > 0;
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << name
            << " (" << t.checks << " checks, " << t.violations
            << " violations";
  if (!extra.empty()) std::cout << "; " << extra;
  if (!pass && !t.first.empty()) std::cout << "; first: " << t.first;
  std::cout << ")" << std::endl;
  return pass;
}

std::string Where(const char* suite, std::uint64_t seed) {
  return std::string(suite) + " seed " + std::to_string(seed);
}

std::vector<std::uint64_t> Multiplicities(const rcenter::RmcCoreset& c) {
  std::vector<std::uint64_t> m;
  for (const auto& mp : c.members) m.push_back(mp.multiplicity);
  return m;
}

// Instances of the robust matroid center suite, built once.
struct RmcSuiteEntry {
  std::uint64_t seed;
  oracle::RmcCase c;
  std::unique_ptr<rcenter::DistanceOracle> dist;
  std::unique_ptr<rcenter::Matroid> matroid;
  double rstar;
};

std::vector<RmcSuiteEntry> BuildRmcSuite() {
  std::vector<RmcSuiteEntry> suite;
  suite.reserve(kRmcCases);
  for (int i = 0; i < kRmcCases; ++i) {
    const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(i);
    // The oracle points into e.c.data, so build the entry in place.
    auto& e = suite.emplace_back(
        RmcSuiteEntry{seed, oracle::RandomRmcCase(seed), nullptr, nullptr, 0.0});
    e.dist = std::make_unique<rcenter::DistanceOracle>(e.c.data);
    e.matroid = rcenter::MatroidFromJson(e.c.matroid.Spec(), e.c.data);
    e.rstar = oracle::BruteRmc(e.c.data, e.c.matroid, e.c.z);
  }
  return suite;
}

double FullCost(const rcenter::Dataset& data,
                const std::vector<PointId>& centers, std::uint64_t z) {
  return oracle::RobustCost(centers, oracle::Iota(data.size()), z,
                            oracle::MetricOf(data));
}

// Criteria 1-3 share one run of the sequential pipeline per instance.
bool CheckRmcSequential(const std::vector<RmcSuiteEntry>& suite) {
  Tally c1, c2, c3;
  const rcenter::ExactRmcmSolver solver;
  for (const auto& e : suite) {
    const auto inst = rcenter::RmcInstance::Make(*e.dist, *e.matroid, e.c.z);
    const auto out = rcenter::SolveRmc(inst, kEps, solver);
    const double eps_prime = kEps / 3.0;
    const auto d = oracle::MetricOf(e.c.data);
    const std::string at = Where("rmc", e.seed);

    const double cost = FullCost(e.c.data, out.solution.centers, e.c.z);
    c1.Check(e.c.matroid.Independent(out.solution.centers),
             at + ": solution not independent");
    c1.Check(cost <= (1.0 + kEps) * e.rstar,
             at + ": cost " + std::to_string(cost) + " r* " +
                 std::to_string(e.rstar));

    double move = 0.0;
    for (std::size_t i = 0; i < out.coreset.points.size(); ++i) {
      move = std::max(move, d(out.coreset.points[i], out.coreset.proxy[i]));
    }
    c2.Check(out.coreset.points.size() == e.c.data.size(),
             at + ": proxy map incomplete");
    c2.Check(move <= eps_prime * e.rstar, at + ": proxy move " +
                                              std::to_string(move) + " r* " +
                                              std::to_string(e.rstar));

    const auto members = out.coreset.member_ids();
    const auto mult = Multiplicities(out.coreset);
    const double core_opt =
        oracle::BruteRmcm(e.c.data, e.c.matroid, members, mult, e.c.z);
    c3.Check(core_opt <= (1.0 + 2.0 * eps_prime) * e.rstar,
             at + ": coreset optimum " + std::to_string(core_opt));
    const double core_cost =
        oracle::RobustCost(out.solution.centers, members, e.c.z, d, mult);
    c3.Check(core_cost == out.coreset_cost, at + ": coreset cost mismatch");
    c3.Check(cost <= core_cost + eps_prime * e.rstar,
             at + ": lifted cost " + std::to_string(cost) + " coreset " +
                 std::to_string(core_cost));
  }
  bool ok = Report(1, "end-to-end RMC ratio", c1);
  ok &= Report(2, "proxy distance bound", c2);
  ok &= Report(3, "coreset optimum and lifting bounds", c3);
  return ok;
}

bool CheckAugmentation() {
  Tally t;
  std::mt19937_64 rng(42);
  int trials = 0;
  while (trials < 500) {
    const std::size_t n = 4 + rng() % 7;
    std::vector<int> categories;
    const auto m = oracle::RandomMatroid(static_cast<int>(rng() % 3), n, rng,
                                         &categories);
    auto data = rcenter::Dataset::FromCoordinates(
        std::vector<std::vector<double>>(n, std::vector<double>{0.0}));
    if (!categories.empty()) data.set_categories(categories);
    const auto lib = rcenter::MatroidFromJson(m.Spec(), data);

    std::vector<PointId> order = oracle::Iota(n);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<PointId> a;
    const std::size_t a_target = rng() % (m.RankBound() + 1);
    for (const PointId p : order) {
      if (a.size() == a_target) break;
      auto grown = a;
      grown.push_back(p);
      if (m.Independent(grown)) a = grown;
    }
    std::vector<PointId> subset;
    for (PointId p = 0; p < n; ++p) {
      if (rng() % 2 == 0) subset.push_back(p);
    }
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<PointId> b;
    for (const PointId p : order) {
      if (std::find(subset.begin(), subset.end(), p) == subset.end()) continue;
      auto grown = b;
      grown.push_back(p);
      if (m.Independent(grown)) b = grown;
    }
    std::vector<PointId> ys;
    for (const PointId y : subset) {
      if (std::find(a.begin(), a.end(), y) != a.end()) continue;
      auto grown = a;
      grown.push_back(y);
      if (m.Independent(grown)) ys.push_back(y);
    }
    if (ys.empty()) continue;
    ++trials;
    const PointId y = ys[rng() % ys.size()];
    const std::string at = "trial " + std::to_string(trials) + " " + m.kind;
    try {
      const auto x = rcenter::AugmentWitness({a, true}, subset, {b, true}, y,
                                             *lib);
      t.Check(x.has_value(), at + ": no witness");
      if (!x) continue;
      t.Check(std::find(b.begin(), b.end(), *x) != b.end() &&
                  std::find(a.begin(), a.end(), *x) == a.end(),
              at + ": witness outside B \\ A");
      auto grown = a;
      grown.push_back(*x);
      t.Check(lib->IsIndependent(grown), at + ": A+x rejected by library");
      t.Check(m.Independent(grown), at + ": A+x dependent");
    } catch (const std::exception& ex) {
      t.Check(false, at + ": " + ex.what());
    }
  }
  return Report(4, "extended augmentation witness", t);
}

bool CheckRkcLoop() {
  Tally t;
  const rcenter::ExactRkcmSolver solver;
  rcenter::RkcLoopOptions options;
  options.evaluate_each_iteration = true;
  std::size_t max_iterations = 0;
  for (int i = 0; i < kRkcCases; ++i) {
    const std::uint64_t seed = 5000 + static_cast<std::uint64_t>(i);
    const auto c = oracle::RandomRkcCase(seed);
    const rcenter::DistanceOracle dist(c.data);
    const auto inst = rcenter::RkcInstance::Make(dist, c.z);
    const double rstar = oracle::BruteRkc(c.data, c.z);
    const auto out = rcenter::RKnapCenter(inst, kEps, solver, options);
    const std::string at = Where("rkc", seed);
    const auto& its = out.trace.iterations;
    max_iterations = std::max(max_iterations, its.size());
    t.Check(!its.empty() && (its.back().stop || its.back().tau == c.data.size()),
            at + ": loop did not terminate properly");
    for (const auto& it : its) {
      const double full = FullCost(c.data, it.centers, c.z);
      t.Check(full <= 2.0 * it.r1 + it.r2,
              at + " tau " + std::to_string(it.tau) + ": full " +
                  std::to_string(full) + " > 2 r1 + r2");
      t.Check(it.r2 <= rstar + 4.0 * it.r1,
              at + " tau " + std::to_string(it.tau) + ": r2 above r* + 4 r1");
    }
    const double cost = FullCost(c.data, out.solution.centers, c.z);
    t.Check(oracle::WeightSum(out.solution.centers, c.data) <= 1.0,
            at + ": over budget");
    t.Check(cost <= (1.0 + kEps) * rstar,
            at + ": cost " + std::to_string(cost) + " r* " +
                std::to_string(rstar));
  }
  return Report(5, "RKC guessing loop", t,
                "max iterations " + std::to_string(max_iterations));
}

bool CheckMapReduce(const std::vector<RmcSuiteEntry>& suite) {
  Tally t;
  const rcenter::ExactRmcmSolver solver;
  for (const auto& e : suite) {
    const auto inst = rcenter::RmcInstance::Make(*e.dist, *e.matroid, e.c.z);
    const auto seq = rcenter::SolveRmc(inst, kEps, solver);
    const double n = static_cast<double>(e.c.data.size());
    for (const std::size_t ell : {1, 2, 4}) {
      const auto mr = rcenter::MrSolveRmc(inst, kEps, solver, ell);
      const std::string at =
          Where("rmc", e.seed) + " ell " + std::to_string(ell);
      const double cost =
          FullCost(e.c.data, mr.outcome.solution.centers, e.c.z);
      t.Check(cost <= (1.0 + kEps) * e.rstar, at + ": ratio");
      t.Check(mr.stats.rounds == 2, at + ": rounds");
      const double cap =
          std::max(n / static_cast<double>(ell),
                   static_cast<double>(mr.outcome.coreset.members.size()));
      t.Check(static_cast<double>(mr.stats.max_local_memory_items) <= cap,
              at + ": reducer holds " +
                  std::to_string(mr.stats.max_local_memory_items) +
                  " items, cap " + std::to_string(cap));
      if (ell == 1) {
        t.Check(mr.outcome.solution.centers == seq.solution.centers &&
                    mr.outcome.solution.cost == seq.solution.cost &&
                    mr.outcome.coreset.members == seq.coreset.members,
                at + ": differs from sequential");
      }
    }
  }
  return Report(6, "MapReduce composability", t);
}

bool CheckScaling() {
  Tally t;
  std::mt19937_64 rng(7);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    rcenter::GenSpec spec;
    spec.seed = rng();
    spec.n = 5 + rng() % 21;
    spec.dimension = 1 + rng() % 3;
    spec.layout = rng() % 2 ? rcenter::Layout::kBlobs : rcenter::Layout::kCube;
    spec.blobs = 2 + rng() % 3;
    spec.planted_outliers = rng() % 3;
    const bool exact = rng() % 2 == 0;
    spec.integer_coordinates = exact;
    spec.l1_matrix = exact;
    const auto data = rcenter::Generate(spec);
    const std::size_t target = 1 + rng() % 4;
    const rcenter::DistanceOracle dist(data);
    auto stream = rcenter::StreamSource::Of(data, rng());
    const auto out = rcenter::StreamScalingKCenter(stream, dist, target, 0.5);
    const double r = out.result.radius_bound;
    const std::string at = "scaling case " + std::to_string(i);

    const auto d = oracle::MetricOf(data);
    double cover = 0.0;
    for (const PointId p : stream.order()) {
      cover = std::max(cover, oracle::NearestDistance(p, out.result.centers, d));
    }
    t.Check(out.result.centers.size() <= target, at + ": too many centers");
    t.Check(cover <= r, at + ": replay coverage " + std::to_string(cover) +
                            " > r' " + std::to_string(r));
    const double rho = oracle::BruteKCenter(data, target);
    t.Check(r <= 2.5 * rho, at + ": r' " + std::to_string(r) + " rho* " +
                                std::to_string(rho));
    if (rho > 0) worst = std::max(worst, r / rho);
  }
  std::ostringstream extra;
  extra << "worst r'/rho* " << worst;
  return Report(7, "streaming scaling bound", t, extra.str());
}

bool CheckOnePass(const std::vector<RmcSuiteEntry>& suite) {
  Tally t;
  const rcenter::ExactRmcmSolver solver;
  for (const auto& e : suite) {
    const auto inst = rcenter::RmcInstance::Make(*e.dist, *e.matroid, e.c.z);
    const std::size_t n = e.c.data.size();
    std::vector<PointId> id_order = oracle::Iota(n);
    std::vector<PointId> reversed(id_order.rbegin(), id_order.rend());
    const std::vector<rcenter::StreamSource> orders = {
        rcenter::StreamSource(id_order), rcenter::StreamSource(reversed),
        rcenter::StreamSource::Of(e.c.data, e.seed)};
    const char* names[] = {"id", "reversed", "shuffled"};
    for (std::size_t o = 0; o < orders.size(); ++o) {
      auto stream = orders[o];
      const auto out = rcenter::StreamSolveRmc(stream, inst, kEps, solver);
      const std::string at = Where("rmc", e.seed) + " " + names[o];
      t.Check(out.stats.stream_reads == n && out.stats.passes == 1,
              at + ": " + std::to_string(out.stats.stream_reads) +
                  " reads in " + std::to_string(out.stats.passes) + " passes");
      const double cost =
          FullCost(e.c.data, out.outcome.solution.centers, e.c.z);
      t.Check(cost <= (1.0 + kEps) * e.rstar,
              at + ": cost " + std::to_string(cost) + " r* " +
                  std::to_string(e.rstar));
    }
  }
  const rcenter::ExactRkcmSolver rkc_solver;
  for (int i = 0; i < kRkcCases; ++i) {
    const std::uint64_t seed = 5000 + static_cast<std::uint64_t>(i);
    const auto c = oracle::RandomRkcCase(seed);
    const rcenter::DistanceOracle dist(c.data);
    const auto inst = rcenter::RkcInstance::Make(dist, c.z);
    auto stream = rcenter::StreamSource::Of(c.data, seed);
    const auto out = rcenter::StreamSolveRkc(stream, inst, kEps, rkc_solver);
    const std::size_t n = c.data.size();
    const auto limit = static_cast<std::size_t>(
        std::ceil(std::log2(static_cast<double>(n)))) + 1;
    const std::size_t iterations = out.outcome.trace.iterations.size();
    const std::string at = Where("rkc stream", seed);
    t.Check(out.stats.passes == iterations && stream.passes() == iterations,
            at + ": passes " + std::to_string(out.stats.passes) +
                " iterations " + std::to_string(iterations));
    t.Check(iterations <= limit, at + ": " + std::to_string(iterations) +
                                     " passes > " + std::to_string(limit));
  }
  return Report(8, "one-pass streaming discipline", t);
}

bool CheckCoresetTrend() {
  Tally t;
  const std::vector<double> eps_primes = {0.8, 0.4, 0.2, 0.1};
  const std::size_t k = 3;
  const std::uint64_t z = 2;
  std::cout << "coreset trend (n=1024, k=3, z=2)\n"
            << "dimension,eps_prime,tau,coreset_size,r_guess\n";
  for (const std::size_t dim : {1, 2}) {
    const auto curve =
        rcenter::CoresetSizeTrend(1024, dim, k, z, eps_primes);
    const double growth = std::pow(2.0, static_cast<double>(dim)) * 1.5;
    for (std::size_t i = 0; i < curve.size(); ++i) {
      const auto& p = curve[i];
      std::cout << p.dimension << ',' << p.eps_prime << ',' << p.tau << ','
                << p.coreset_size << ',' << p.r_guess << '\n';
      const std::string at = "dim " + std::to_string(dim) + " eps' " +
                             std::to_string(p.eps_prime);
      t.Check(p.coreset_size <= k * p.tau, at + ": |T| > k tau");
      if (i > 0) {
        t.Check(static_cast<double>(p.tau) <=
                    growth * static_cast<double>(curve[i - 1].tau),
                at + ": tau grew from " + std::to_string(curve[i - 1].tau) +
                    " to " + std::to_string(p.tau));
      }
    }
  }
  return Report(9, "coreset size trend", t);
}

bool CheckRobustCost() {
  Tally t;
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    rcenter::GenSpec spec;
    spec.seed = rng();
    spec.n = 2 + rng() % 49;
    spec.dimension = 1 + rng() % 4;
    spec.layout = rng() % 2 ? rcenter::Layout::kBlobs : rcenter::Layout::kCube;
    const bool exact = rng() % 3 == 0;
    spec.integer_coordinates = exact;
    spec.l1_matrix = exact;
    const auto data = rcenter::Generate(spec);
    const rcenter::DistanceOracle dist(data);
    const auto d = oracle::MetricOf(data);

    std::vector<PointId> centers, points;
    for (PointId p = 0; p < spec.n; ++p) {
      if (rng() % 4 == 0) centers.push_back(p);
      if (rng() % 3 != 0) points.push_back(p);
    }
    if (centers.empty()) centers.push_back(static_cast<PointId>(rng() % spec.n));
    if (points.empty()) points.push_back(static_cast<PointId>(rng() % spec.n));
    const bool weighted = i % 2 == 1;
    std::vector<std::uint64_t> mult;
    std::vector<rcenter::MultiplicityPoint> mpoints;
    std::uint64_t mass = 0;
    for (const PointId p : points) {
      const std::uint64_t m = weighted ? 1 + rng() % 5 : 1;
      mult.push_back(m);
      mpoints.push_back({p, m});
      mass += m;
    }
    const std::uint64_t z = rng() % mass;
    const double expected = oracle::RobustCost(centers, points, z, d, mult);
    const double got = weighted
                           ? rcenter::RobustCost(centers, mpoints, z, dist)
                           : rcenter::RobustCost(centers, points, z, dist);
    t.Check(got == expected, "triple " + std::to_string(i) + ": got " +
                                 std::to_string(got) + " expected " +
                                 std::to_string(expected));
  }
  return Report(10, "robust cost oracle equivalence", t);
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const auto suite = BuildRmcSuite();
  bool ok = CheckRmcSequential(suite);
  ok &= CheckAugmentation();
  ok &= CheckRkcLoop();
  ok &= CheckMapReduce(suite);
  ok &= CheckScaling();
  ok &= CheckOnePass(suite);
  ok &= CheckCoresetTrend();
  ok &= CheckRobustCost();
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  std::cout << (ok ? "all criteria passed" : "some criteria failed") << " in "
            << secs << " s" << std::endl;
  return ok ? 0 : 1;
}
