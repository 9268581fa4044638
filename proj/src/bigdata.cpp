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

#include "rcenter/bigdata.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <stdexcept>

namespace rcenter {

PartitionPlan PartitionPlan::RoundRobin(std::span<const PointId> points,
                                        std::size_t ell) {
  if (ell == 0) throw std::invalid_argument("need at least one partition");
  PartitionPlan plan;
  plan.parts.resize(ell);
  for (std::size_t i = 0; i < points.size(); ++i) {
    plan.parts[i % ell].push_back(points[i]);
  }
  return plan;
}

namespace {

std::size_t ClampedRound(double x, std::size_t n) {
  const double r = std::round(x);
  if (!(r >= 1.0)) return 1;
  if (r >= static_cast<double>(n)) return std::max<std::size_t>(n, 1);
  return static_cast<std::size_t>(r);
}

template <class Fn>
void RunTasks(std::size_t count, Fn&& fn) {
  std::vector<std::exception_ptr> errors(count);
  const auto tasks = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic) if (count > 1)
  for (std::ptrdiff_t q = 0; q < tasks; ++q) {
    try {
      fn(static_cast<std::size_t>(q));
    } catch (...) {
      errors[q] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::size_t LargestPart(const PartitionPlan& plan) {
  std::size_t m = 0;
  for (const auto& p : plan.parts) m = std::max(m, p.size());
  return m;
}

}  // namespace

std::size_t DefaultRmcPartitions(std::size_t n, std::size_t k,
                                 std::uint64_t z) {
  const double denom = static_cast<double>(k) * static_cast<double>(k + z);
  return ClampedRound(std::sqrt(static_cast<double>(n) / denom), n);
}

std::size_t DefaultRkcPartitions(std::size_t n, std::size_t tau) {
  return ClampedRound(
      std::sqrt(static_cast<double>(n) / static_cast<double>(tau)), n);
}

MrRmcOutcome MrSolveRmc(const RmcInstance& inst, double epsilon,
                        const RmcmSolver& solver,
                        std::optional<std::size_t> ell,
                        const KCenterAlgorithm& kcenter) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0,1)");
  }
  const auto points = inst.points();
  const std::size_t n = points.size();
  const std::size_t parts =
      std::clamp<std::size_t>(ell.value_or(DefaultRmcPartitions(n, inst.k,
                                                                inst.z)),
                              1, n);
  const std::uint64_t evals_before = inst.oracle->evaluations();

  MrRmcOutcome out;
  out.outcome.eps_prime = RmcEpsPrime(epsilon, solver.alpha());
  const PartitionPlan plan = PartitionPlan::RoundRobin(points, parts);

  // Round 1.
  out.partition_coresets.resize(parts);
  RunTasks(parts, [&](std::size_t q) {
    out.partition_coresets[q] =
        BuildRmcCoreset(plan.parts[q], *inst.matroid, inst.k, inst.z,
                        out.outcome.eps_prime, kcenter, *inst.oracle);
  });

  // Round 2.
  out.outcome.coreset = RmcCoreset::Union(out.partition_coresets);
  out.outcome.solution = solver.Solve(out.outcome.coreset.members,
                                      *inst.matroid, inst.z, *inst.oracle);
  out.outcome.coreset_cost = out.outcome.solution.cost;
  out.outcome.solution.epsilon = epsilon;

  const std::uint64_t t = out.outcome.coreset.members.size();
  out.stats.mode = "mr";
  out.stats.partitions = parts;
  out.stats.rounds = 2;
  out.stats.max_local_memory_items =
      std::max<std::uint64_t>(LargestPart(plan), t);
  out.stats.aggregate_memory_items = n + t;
  out.stats.distance_evals = inst.oracle->evaluations() - evals_before;

  out.outcome.solution.cost = RobustCost(out.outcome.solution.centers, points,
                                         inst.z, *inst.oracle);
  return out;
}

MrRkcOutcome MrSolveRkc(const RkcInstance& inst, double epsilon,
                        const RkcmSolver& solver,
                        const RkcLoopOptions& options,
                        std::optional<std::size_t> ell) {
  const auto points = inst.points();
  const std::size_t n = points.size();
  const Dataset& data = inst.oracle->dataset();
  const std::uint64_t evals_before = inst.oracle->evaluations();
  const KCenterAlgorithm kcenter = GonzalezAlgorithm();

  MrRkcOutcome out;
  out.stats.mode = "mr";
  auto step = [&](std::size_t tau) {
    const std::size_t parts = std::clamp<std::size_t>(
        ell.value_or(DefaultRkcPartitions(n, tau)), 1, n);
    const PartitionPlan plan = PartitionPlan::RoundRobin(points, parts);

    // Round 1: per-part tau-center summaries.
    std::vector<RkcCoreset> summaries(parts);
    RunTasks(parts, [&](std::size_t q) {
      const auto& vq = plan.parts[q];
      const std::size_t tq = std::min(tau, vq.size());
      const CenterSet cs = kcenter.run(vq, tq, *inst.oracle);
      const auto clusters =
          ClusterAssign(vq, cs.centers, *inst.oracle).Members();
      summaries[q] = RkcCoresetFromClusters(clusters, data, tq, cs.radius);
    });

    // Round 2: merge, solve, test.
    RkcStep s;
    s.coreset.tau = tau;
    for (const auto& part : summaries) {
      s.r1 = std::max(s.r1, part.r1);
      s.coreset.members.insert(s.coreset.members.end(), part.members.begin(),
                               part.members.end());
    }
    std::sort(s.coreset.members.begin(), s.coreset.members.end(),
              [](const auto& a, const auto& b) { return a.point < b.point; });
    s.coreset.r1 = s.r1;
    s.solution = solver.Solve(s.coreset.members, inst.z, *inst.oracle);
    s.r2 = s.solution.cost;

    const std::uint64_t t = s.coreset.members.size();
    out.stats.partitions = std::max(out.stats.partitions, parts);
    out.stats.rounds += 2;
    out.stats.max_local_memory_items = std::max<std::uint64_t>(
        out.stats.max_local_memory_items,
        std::max<std::uint64_t>(LargestPart(plan), t));
    out.stats.aggregate_memory_items =
        std::max<std::uint64_t>(out.stats.aggregate_memory_items, n + t);
    return s;
  };
  out.outcome = RunRknapLoop(
      n, epsilon, solver.alpha(), options, step,
      [&](std::span<const PointId> centers) {
        return RobustCost(centers, points, inst.z, *inst.oracle);
      });
  out.stats.distance_evals = inst.oracle->evaluations() - evals_before;
  return out;
}

StreamSource::StreamSource(std::vector<PointId> order)
    : order_(std::move(order)) {
  PointId max_id = 0;
  for (const PointId p : order_) max_id = std::max(max_id, p);
  seen_.assign(order_.empty() ? 0 : static_cast<std::size_t>(max_id) + 1, 0);
}

StreamSource StreamSource::Of(const Dataset& data,
                              std::optional<std::uint64_t> shuffle_seed) {
  std::vector<PointId> order = data.ids();
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return StreamSource(std::move(order));
}

void StreamSource::BeginPass(bool evaluation) {
  cursor_ = 0;
  in_pass_ = true;
  evaluation_ = evaluation;
  std::fill(seen_.begin(), seen_.end(), 0);
  if (evaluation) {
    ++evaluation_passes_;
  } else {
    ++passes_;
  }
}

std::optional<PointId> StreamSource::Next() {
  if (!in_pass_) throw std::logic_error("stream read outside a pass");
  if (cursor_ == order_.size()) {
    in_pass_ = false;
    return std::nullopt;
  }
  const PointId p = order_[cursor_++];
  if (seen_[p]) throw std::logic_error("point read twice in one pass");
  seen_[p] = 1;
  if (evaluation_) {
    ++evaluation_reads_;
  } else {
    ++reads_;
  }
  return p;
}

}  // namespace rcenter
