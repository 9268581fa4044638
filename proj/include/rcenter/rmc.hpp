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

// Robust matroid center: coreset construction, solvers for the
// multiplicity-weighted problem on the coreset, and exact oracles.

#ifndef RCENTER_RMC_HPP_
#define RCENTER_RMC_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rcenter/kcenter.hpp"
#include "rcenter/matroid.hpp"
#include "rcenter/metric.hpp"
#include "rcenter/solution.hpp"

namespace rcenter {

struct RmcInstance {
  const DistanceOracle* oracle = nullptr;
  const Matroid* matroid = nullptr;
  std::uint64_t z = 0;
  std::size_t k = 0;  // rank of the matroid

  // Validates 0 <= z < |V| and computes the rank.
  static RmcInstance Make(const DistanceOracle& oracle, const Matroid& matroid,
                          std::uint64_t z);
  std::vector<PointId> points() const { return oracle->dataset().ids(); }
};

// Coreset T with its proxy map. `points` is the ground set it was built
// from, and proxy / cluster_of are parallel to it.
struct RmcCoreset {
  std::vector<MultiplicityPoint> members;  // sorted by id
  std::vector<PointId> points;
  std::vector<PointId> proxy;
  std::vector<std::size_t> cluster_of;
  std::vector<PointId> anchors;                        // one per cluster
  std::vector<std::vector<PointId>> independent_sets;  // one per cluster
  std::size_t tau = 0;
  double eps_prime = 0.0;
  double beta = 0.0;
  double r_guess = 0.0;

  std::vector<PointId> member_ids() const;
  std::vector<std::vector<PointId>> clusters() const;
  // Concatenates coresets built on disjoint ground sets.
  static RmcCoreset Union(std::span<const RmcCoreset> parts);
};

// Builds a coreset of `points` for rank k and z outliers:
//   1. (k+z)-center with `kcenter`, giving radius r_guess;
//   2. threshold greedy at (eps_prime / (2 beta)) * r_guess;
//   3. nearest-anchor clusters;
//   4. a maximal independent subset of each cluster (ascending ids);
//   5. proxy(j) = nearest member of its cluster's independent subset.
RmcCoreset BuildRmcCoreset(std::span<const PointId> points,
                           const Matroid& matroid, std::size_t k,
                           std::uint64_t z, double eps_prime,
                           const KCenterAlgorithm& kcenter,
                           const DistanceOracle& oracle);

// max_j d(j, proxy(j)) <= eps_prime * rstar.
bool CertifyC1(const RmcCoreset& coreset, double rstar,
               const DistanceOracle& oracle);

// Maps the independent set `x` (a subset of coreset.points) into the
// coreset one element at a time, keeping each image in the same cluster
// as its preimage and the running set independent. image[i] is the image
// of x[i]. Throws std::logic_error if an augmentation step has no witness.
std::vector<PointId> TransportIndependentSet(const RmcCoreset& coreset,
                                             std::span<const PointId> x,
                                             const Matroid& matroid);

// The transported image is independent, injective, and moves every element
// by at most eps_prime * rstar.
bool CertifyC2(const RmcCoreset& coreset, std::span<const PointId> x,
               double rstar, const Matroid& matroid,
               const DistanceOracle& oracle);

// Solver for the multiplicity-weighted problem on a coreset.
class RmcmSolver {
 public:
  virtual ~RmcmSolver() = default;
  // Approximation ratio assumed when deriving eps_prime.
  virtual double alpha() const = 0;
  virtual std::string name() const = 0;
  // cost of the result is its robust cost on `members`.
  virtual RobustSolution Solve(std::span<const MultiplicityPoint> members,
                               const Matroid& matroid, std::uint64_t z,
                               const DistanceOracle& oracle) const = 0;
};

inline constexpr std::uint64_t kDefaultExactBudget = 10'000'000;

// Exhaustive search over independent subsets (DFS by ascending id with
// hereditary pruning). Ties go to the lexicographically smallest set.
class ExactRmcmSolver final : public RmcmSolver {
 public:
  explicit ExactRmcmSolver(std::uint64_t budget = kDefaultExactBudget,
                           bool parallel = true)
      : budget_(budget), parallel_(parallel) {}
  double alpha() const override { return 1.0; }
  std::string name() const override { return "exact"; }
  RobustSolution Solve(std::span<const MultiplicityPoint> members,
                       const Matroid& matroid, std::uint64_t z,
                       const DistanceOracle& oracle) const override;

 private:
  std::uint64_t budget_;
  bool parallel_;
};

// Swap-based local search from a greedy independent set. No ratio is
// guaranteed; alpha() reports the value used to derive eps_prime.
class LocalSearchRmcmSolver final : public RmcmSolver {
 public:
  explicit LocalSearchRmcmSolver(double assumed_alpha = 3.0,
                                 std::size_t max_rounds = 200)
      : alpha_(assumed_alpha), max_rounds_(max_rounds) {}
  double alpha() const override { return alpha_; }
  std::string name() const override { return "heuristic"; }
  RobustSolution Solve(std::span<const MultiplicityPoint> members,
                       const Matroid& matroid, std::uint64_t z,
                       const DistanceOracle& oracle) const override;

 private:
  double alpha_;
  std::size_t max_rounds_;
};

struct RmcOutcome {
  RobustSolution solution;  // cost measured on the full ground set
  RmcCoreset coreset;
  double coreset_cost = 0.0;  // cost on the coreset with multiplicities
  double eps_prime = 0.0;
};

// eps_prime = epsilon / (2 alpha + 1).
double RmcEpsPrime(double epsilon, double alpha);

RmcOutcome SolveRmc(const RmcInstance& inst, double epsilon,
                    const RmcmSolver& solver,
                    const KCenterAlgorithm& kcenter = GonzalezAlgorithm());

inline constexpr std::uint64_t kDefaultOracleBudget = 5'000'000;

// Exact optimum over all independent subsets of the ground set.
RobustSolution BruteForceRmc(const RmcInstance& inst,
                             std::uint64_t budget = kDefaultOracleBudget);

}  // namespace rcenter

#endif  // RCENTER_RMC_HPP_
