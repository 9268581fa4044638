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

// Robust knapsack center: the coreset guessing loop, solvers for the
// weighted multiplicity problem, and an exact oracle.

#ifndef RCENTER_RKC_HPP_
#define RCENTER_RKC_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "rcenter/kcenter.hpp"
#include "rcenter/metric.hpp"
#include "rcenter/solution.hpp"

namespace rcenter {

struct RkcInstance {
  const DistanceOracle* oracle = nullptr;
  std::uint64_t z = 0;

  // Requires per-point weights and 0 <= z < |V|.
  static RkcInstance Make(const DistanceOracle& oracle, std::uint64_t z);
  std::vector<PointId> points() const { return oracle->dataset().ids(); }
};

struct RkcMember {
  PointId point;
  double weight;
  std::uint64_t multiplicity;
};

// One minimum-weight representative per cluster of a tau-clustering.
struct RkcCoreset {
  std::vector<RkcMember> members;  // sorted by id
  std::size_t tau = 0;
  double r1 = 0.0;

  std::vector<MultiplicityPoint> multiplicities() const;
};

// Builds the coreset from a clustering: the representative of each cluster
// is its lightest point (ties to the lowest id) and carries the cluster
// size as multiplicity. Empty clusters are skipped.
RkcCoreset RkcCoresetFromClusters(
    const std::vector<std::vector<PointId>>& clusters, const Dataset& data,
    std::size_t tau, double r1);

class RkcmSolver {
 public:
  virtual ~RkcmSolver() = default;
  virtual double alpha() const = 0;
  virtual std::string name() const = 0;
  // Minimizes the robust cost on `members` over nonempty sets whose weight
  // (as computed by WeightOf) is at most 1.
  virtual RobustSolution Solve(std::span<const RkcMember> members,
                               std::uint64_t z,
                               const DistanceOracle& oracle) const = 0;
};

// DFS over weight-feasible subsets in lexicographic order with weight
// pruning. Throws BudgetExceeded once more than `budget` sets are visited.
class ExactRkcmSolver final : public RkcmSolver {
 public:
  explicit ExactRkcmSolver(std::uint64_t budget = 10'000'000,
                           bool parallel = true)
      : budget_(budget), parallel_(parallel) {}
  double alpha() const override { return 1.0; }
  std::string name() const override { return "exact"; }
  RobustSolution Solve(std::span<const RkcMember> members, std::uint64_t z,
                       const DistanceOracle& oracle) const override;

 private:
  std::uint64_t budget_;
  bool parallel_;
};

// Greedy by multiplicity, then add and swap moves that keep the weight
// within budget. No ratio is guaranteed.
class LocalSearchRkcmSolver final : public RkcmSolver {
 public:
  explicit LocalSearchRkcmSolver(double assumed_alpha = 3.0,
                                 std::size_t max_rounds = 200)
      : alpha_(assumed_alpha), max_rounds_(max_rounds) {}
  double alpha() const override { return alpha_; }
  std::string name() const override { return "heuristic"; }
  RobustSolution Solve(std::span<const RkcMember> members, std::uint64_t z,
                       const DistanceOracle& oracle) const override;

 private:
  double alpha_;
  std::size_t max_rounds_;
};

// Result of one test step: S solves the coreset, r2 is its cost there.
struct RkcStep {
  RobustSolution solution;
  double r1 = 0.0;
  double r2 = 0.0;
  RkcCoreset coreset;
};

RkcStep CoresetComputeAndTest(const RkcInstance& inst, std::size_t tau,
                              const RkcmSolver& solver,
                              const KCenterAlgorithm& kcenter =
                                  GonzalezAlgorithm());

// Stop when r1 == 0, or when r2 - 4 alpha r1 > 0 and
// alpha (4 alpha + 2) r1 <= epsilon (r2 - 4 alpha r1).
bool RkcShouldStop(double alpha, double epsilon, double r1, double r2);

// alpha (4 alpha + 2) r1 / (r2 - 4 alpha r1); +inf for a non-positive
// denominator and 0 when r1 == 0. Reported only.
double RkcStopValue(double alpha, double r1, double r2);

struct Progression {
  enum class Kind { kDouble, kPow };
  Kind kind = Kind::kDouble;
  double eta = 0.5;

  static Progression Double() { return {}; }
  static Progression Pow(double eta) { return {Kind::kPow, eta}; }
  // Next tau, strictly larger than `tau` and at most n.
  std::size_t Next(std::size_t tau, std::size_t n) const;
  std::string name() const { return kind == Kind::kDouble ? "double" : "pow"; }
};

struct IterationRecord {
  std::size_t tau = 0;
  double r1 = 0.0;
  double r2 = 0.0;
  double stop_value = 0.0;
  bool stop = false;
  std::vector<PointId> centers;
  std::size_t coreset_size = 0;
  // Robust cost of `centers` on the full ground set; NaN unless requested.
  double full_cost = std::numeric_limits<double>::quiet_NaN();
};

struct LoopTrace {
  std::vector<IterationRecord> iterations;
  std::size_t tau_final = 0;
};

struct RkcOutcome {
  RobustSolution solution;  // cost measured on the full ground set
  LoopTrace trace;
};

struct RkcLoopOptions {
  Progression progression;
  // Also measures each iteration's solution on the full ground set.
  bool evaluate_each_iteration = false;
};

// The guessing loop, parameterized by the step that produces (S, r1, r2)
// for a given tau and by the full-cost evaluator. Shared by the
// sequential, MapReduce and streaming drivers.
RkcOutcome RunRknapLoop(
    std::size_t n, double epsilon, double alpha, const RkcLoopOptions& options,
    const std::function<RkcStep(std::size_t)>& step,
    const std::function<double(std::span<const PointId>)>& full_cost);

RkcOutcome RKnapCenter(const RkcInstance& inst, double epsilon,
                       const RkcmSolver& solver,
                       const RkcLoopOptions& options = {},
                       const KCenterAlgorithm& kcenter = GonzalezAlgorithm());

struct RkcOracleResult {
  RobustSolution solution;
  // Smallest cardinality among optimal solutions.
  std::size_t min_cardinality = 0;
};

inline constexpr std::uint64_t kDefaultRkcOracleBudget = 5'000'000;

// Exact optimum over all weight-feasible subsets of the ground set.
RkcOracleResult BruteForceRkc(const RkcInstance& inst,
                              std::uint64_t budget = kDefaultRkcOracleBudget);

}  // namespace rcenter

#endif  // RCENTER_RKC_HPP_
