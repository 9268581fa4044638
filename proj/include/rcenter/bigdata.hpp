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

// Simulated MapReduce and streaming drivers for both problems, with round,
// pass and memory accounting in stored point ids.

#ifndef RCENTER_BIGDATA_HPP_
#define RCENTER_BIGDATA_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rcenter/kcenter.hpp"
#include "rcenter/matroid.hpp"
#include "rcenter/metric.hpp"
#include "rcenter/rkc.hpp"
#include "rcenter/rmc.hpp"

namespace rcenter {

struct PartitionPlan {
  std::vector<std::vector<PointId>> parts;

  std::size_t ell() const { return parts.size(); }
  // points[i] goes to part i mod ell. Sizes differ by at most one.
  static PartitionPlan RoundRobin(std::span<const PointId> points,
                                  std::size_t ell);
};

// round(sqrt(n / (k (k + z)))) clamped to [1, n].
std::size_t DefaultRmcPartitions(std::size_t n, std::size_t k, std::uint64_t z);
// round(sqrt(n / tau)) clamped to [1, n]; used per iteration when the
// caller does not fix the partition count.
std::size_t DefaultRkcPartitions(std::size_t n, std::size_t tau);

struct ResourceStats {
  std::string mode = "seq";
  std::size_t partitions = 0;
  std::size_t rounds = 0;  // MapReduce rounds
  std::size_t passes = 0;  // streaming passes used by the algorithm
  // Largest number of items held by one reducer, or the streaming
  // working-memory high-water mark.
  std::uint64_t max_local_memory_items = 0;
  // Input items plus every item shuffled between rounds.
  std::uint64_t aggregate_memory_items = 0;
  std::uint64_t stream_reads = 0;
  // Extra passes that only measure the cost of a finished solution.
  std::size_t evaluation_passes = 0;
  std::uint64_t evaluation_reads = 0;
  std::uint64_t distance_evals = 0;
};

struct MrRmcOutcome {
  RmcOutcome outcome;
  ResourceStats stats;
  std::vector<RmcCoreset> partition_coresets;
};

// Round 1 builds a coreset per part concurrently; round 2 solves on their
// union. With ell = 1 the result equals SolveRmc.
MrRmcOutcome MrSolveRmc(const RmcInstance& inst, double epsilon,
                        const RmcmSolver& solver,
                        std::optional<std::size_t> ell = std::nullopt,
                        const KCenterAlgorithm& kcenter = GonzalezAlgorithm());

struct MrRkcOutcome {
  RkcOutcome outcome;
  ResourceStats stats;
};

// Each loop iteration takes two rounds: per-part tau-center summaries,
// then one reducer that merges them, solves and tests. r1 is the largest
// per-part coverage radius.
MrRkcOutcome MrSolveRkc(const RkcInstance& inst, double epsilon,
                        const RkcmSolver& solver,
                        const RkcLoopOptions& options = {},
                        std::optional<std::size_t> ell = std::nullopt);

// Replayable stream over a fixed order of point ids with a read ledger.
// Reading a point twice in one pass throws std::logic_error.
class StreamSource {
 public:
  explicit StreamSource(std::vector<PointId> order);
  // Id order, or a seeded shuffle of it.
  static StreamSource Of(const Dataset& data,
                         std::optional<std::uint64_t> shuffle_seed = {});

  void BeginPass(bool evaluation = false);
  std::optional<PointId> Next();

  std::size_t size() const { return order_.size(); }
  const std::vector<PointId>& order() const { return order_; }
  std::size_t passes() const { return passes_; }
  std::uint64_t reads() const { return reads_; }
  std::size_t evaluation_passes() const { return evaluation_passes_; }
  std::uint64_t evaluation_reads() const { return evaluation_reads_; }

 private:
  std::vector<PointId> order_;
  std::size_t cursor_ = 0;
  bool in_pass_ = false;
  bool evaluation_ = false;
  std::vector<unsigned char> seen_;
  std::size_t passes_ = 0;
  std::uint64_t reads_ = 0;
  std::size_t evaluation_passes_ = 0;
  std::uint64_t evaluation_reads_ = 0;
};

struct ScalingOptions {
  std::size_t target = 1;
  double delta = 0.5;
  // Per-center multiplicity and lightest assigned point.
  bool track_witnesses = false;
  // When set, every guess also maintains coreset cells for this matroid.
  const Matroid* matroid = nullptr;
  double eps_prime = 0.0;
  // Records which stream points each coreset member stands for. Test
  // instrumentation; excluded from the working-memory count.
  bool track_proxies = false;
};

struct ScalingResult {
  std::vector<PointId> centers;
  // Upper bound on max_j d(j, centers) over the points seen so far.
  double radius_bound = 0.0;
  // Guess the result came from; 0 when fewer than target + 1 distinct
  // points have arrived.
  double guess = 0.0;
  // Every live guess is above this value only if the optimum is too.
  double lower_bound = 0.0;
  std::vector<std::uint64_t> counts;  // with track_witnesses
  std::vector<PointId> witnesses;     // with track_witnesses
};

// Streaming k-center by a ladder of radius guesses g0 (1+gamma)^i, with
// gamma = delta/8. Each guess keeps centers pairwise more than 2g apart; a
// guess holding more than `target` centers certifies g < rho*. The live
// guesses form a window of W = ceil(ln(8/delta) / ln(1+gamma)) consecutive
// indices. When index i fails, every live index j <= i is replaced by
// j + W, seeded greedily from the centers of j; the seed's coverage bound
// is the source bound plus the largest reseed move. Because consecutive
// generations differ by a factor of at least 8/delta, the bound of the
// smallest live guess stays within (2 + delta) rho*. g0 is half the
// smallest distance among the first target + 1 distinct points; until they
// arrive, every distinct point is its own center.
class ScalingSketch {
 public:
  ScalingSketch(const DistanceOracle& oracle, const ScalingOptions& options);
  ~ScalingSketch();
  ScalingSketch(ScalingSketch&&) noexcept;

  void Add(PointId p);

  ScalingResult Result() const;
  // Coreset from the cells of the guess Result() uses. Requires a matroid.
  RmcCoreset Coreset() const;

  std::size_t window() const;
  std::size_t live_guesses() const;
  std::uint64_t points_seen() const;
  std::uint64_t memory_items() const;
  std::uint64_t memory_high_water() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct ScalingOutcome {
  ScalingResult result;
  ResourceStats stats;
  std::size_t window = 0;
};

ScalingOutcome StreamScalingKCenter(StreamSource& stream,
                                    const DistanceOracle& oracle,
                                    std::size_t target, double delta);

struct StreamRmcOptions {
  double delta = 0.5;
  bool track_proxies = false;
  // Run an extra pass to measure the final cost on the full stream.
  bool evaluate = true;
};

struct StreamRmcOutcome {
  RmcOutcome outcome;
  ResourceStats stats;
  double radius_bound = 0.0;
};

// One pass: the scaling ladder for k + z centers and, per live guess,
// coreset cells at threshold eps_prime * g / (2 + delta). The cells of the
// smallest live guess form the coreset, which is then solved in memory.
StreamRmcOutcome StreamSolveRmc(StreamSource& stream, const RmcInstance& inst,
                                double epsilon, const RmcmSolver& solver,
                                const StreamRmcOptions& options = {});

struct StreamRkcOutcome {
  RkcOutcome outcome;
  ResourceStats stats;
};

// One pass per loop iteration, each running a ScalingSketch with target
// tau that tracks multiplicities and lightest witnesses. r1 is the
// sketch's coverage bound.
StreamRkcOutcome StreamSolveRkc(StreamSource& stream, const RkcInstance& inst,
                                double epsilon, const RkcmSolver& solver,
                                const RkcLoopOptions& options = {},
                                double delta = 0.5);

}  // namespace rcenter

#endif  // RCENTER_BIGDATA_HPP_
