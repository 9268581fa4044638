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

#include "rcenter/rkc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "rcenter/kernels.hpp"
#include "subset_search.hpp"

namespace rcenter {

RkcInstance RkcInstance::Make(const DistanceOracle& oracle, std::uint64_t z) {
  const Dataset& data = oracle.dataset();
  if (!data.has_weights()) {
    throw std::invalid_argument("knapsack instance needs point weights");
  }
  if (z >= data.size()) throw std::invalid_argument("z exhausts all mass");
  // Weights lie in [0,1], so every singleton is feasible.
  return {&oracle, z};
}

std::vector<MultiplicityPoint> RkcCoreset::multiplicities() const {
  std::vector<MultiplicityPoint> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back({m.point, m.multiplicity});
  return out;
}

RkcCoreset RkcCoresetFromClusters(
    const std::vector<std::vector<PointId>>& clusters, const Dataset& data,
    std::size_t tau, double r1) {
  RkcCoreset out;
  out.tau = tau;
  out.r1 = r1;
  for (const auto& cluster : clusters) {
    if (cluster.empty()) continue;
    PointId rep = cluster.front();
    for (const PointId p : cluster) {
      const double w = data.weight(p);
      const double wr = data.weight(rep);
      if (w < wr || (w == wr && p < rep)) rep = p;
    }
    out.members.push_back({rep, data.weight(rep), cluster.size()});
  }
  std::sort(out.members.begin(), out.members.end(),
            [](const auto& a, const auto& b) { return a.point < b.point; });
  return out;
}

namespace {

void CheckMembers(std::span<const RkcMember> members, std::uint64_t z) {
  if (members.empty()) throw std::invalid_argument("empty coreset");
  std::uint64_t mass = 0;
  for (const auto& m : members) mass += m.multiplicity;
  if (z >= mass) throw std::invalid_argument("z exhausts all mass");
}

std::vector<MultiplicityPoint> ToMultiplicities(
    std::span<const RkcMember> members) {
  std::vector<MultiplicityPoint> out;
  for (const auto& m : members) out.push_back({m.point, m.multiplicity});
  return detail::SortedById(out);
}

}  // namespace

RobustSolution ExactRkcmSolver::Solve(std::span<const RkcMember> members_in,
                                      std::uint64_t z,
                                      const DistanceOracle& oracle) const {
  CheckMembers(members_in, z);
  const auto members = ToMultiplicities(members_in);
  const Dataset& data = oracle.dataset();
  detail::SubsetSearch search(
      members, z, members.size(),
      [&data](std::span<const PointId> set) {
        return WeightOf(set, data) <= 1.0;
      },
      budget_, oracle);
  detail::Candidate best;
  if (!search.Run(parallel_, best)) {
    throw BudgetExceeded(
        "exact solver budget exceeded; use the heuristic solver");
  }
  return {best.centers, best.cost, z, 0.0};
}

RobustSolution LocalSearchRkcmSolver::Solve(
    std::span<const RkcMember> members_in, std::uint64_t z,
    const DistanceOracle& oracle) const {
  CheckMembers(members_in, z);
  const auto members = ToMultiplicities(members_in);
  const Dataset& data = oracle.dataset();
  const std::size_t m = members.size();
  std::vector<PointId> ids;
  for (const auto& p : members) ids.push_back(p.point);
  const auto dist = kernels::PairwiseDistances(oracle, ids);
  std::unordered_map<PointId, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) index.emplace(ids[i], i);

  auto cost_of = [&](const std::vector<PointId>& set) {
    std::vector<double> reach(m, std::numeric_limits<double>::infinity());
    for (const PointId c : set) {
      const std::size_t row = index.at(c);
      for (std::size_t p = 0; p < m; ++p) {
        reach[p] = std::min(reach[p], dist[row * m + p]);
      }
    }
    return RobustCostFromDistances(reach, members, z);
  };
  auto feasible = [&](const std::vector<PointId>& sorted) {
    return WeightOf(sorted, data) <= 1.0;
  };

  std::vector<PointId> order = ids;
  std::stable_sort(order.begin(), order.end(), [&](PointId a, PointId b) {
    return members[index.at(a)].multiplicity >
           members[index.at(b)].multiplicity;
  });
  std::vector<PointId> current;
  for (const PointId p : order) {
    std::vector<PointId> trial = current;
    trial.insert(std::upper_bound(trial.begin(), trial.end(), p), p);
    if (feasible(trial)) current = std::move(trial);
  }
  double current_cost = cost_of(current);

  for (std::size_t round = 0; round < max_rounds_; ++round) {
    bool improved = false;
    for (const PointId t : ids) {
      if (improved) break;
      if (std::binary_search(current.begin(), current.end(), t)) continue;
      // Try adding t, then swapping it for each current center.
      std::vector<std::vector<PointId>> trials;
      std::vector<PointId> add = current;
      add.insert(std::upper_bound(add.begin(), add.end(), t), t);
      trials.push_back(std::move(add));
      for (std::size_t pos = 0; pos < current.size(); ++pos) {
        std::vector<PointId> swap = current;
        swap[pos] = t;
        std::sort(swap.begin(), swap.end());
        trials.push_back(std::move(swap));
      }
      for (auto& trial : trials) {
        if (!feasible(trial)) continue;
        const double c = cost_of(trial);
        if (c < current_cost) {
          current = std::move(trial);
          current_cost = c;
          improved = true;
          break;
        }
      }
    }
    if (!improved) break;
  }
  return {current, current_cost, z, 0.0};
}

RkcStep CoresetComputeAndTest(const RkcInstance& inst, std::size_t tau,
                              const RkcmSolver& solver,
                              const KCenterAlgorithm& kcenter) {
  if (tau == 0) throw std::invalid_argument("tau must be at least 1");
  const auto points = inst.points();
  tau = std::min(tau, points.size());
  const CenterSet centers = kcenter.run(points, tau, *inst.oracle);
  const auto clusters =
      ClusterAssign(points, centers.centers, *inst.oracle).Members();
  RkcStep step;
  step.r1 = centers.radius;
  step.coreset = RkcCoresetFromClusters(clusters, inst.oracle->dataset(), tau,
                                        step.r1);
  step.solution = solver.Solve(step.coreset.members, inst.z, *inst.oracle);
  step.r2 = step.solution.cost;
  return step;
}

bool RkcShouldStop(double alpha, double epsilon, double r1, double r2) {
  if (r1 == 0.0) return true;
  const double slack = r2 - 4.0 * alpha * r1;
  return slack > 0.0 && alpha * (4.0 * alpha + 2.0) * r1 <= epsilon * slack;
}

double RkcStopValue(double alpha, double r1, double r2) {
  if (r1 == 0.0) return 0.0;
  const double slack = r2 - 4.0 * alpha * r1;
  if (slack <= 0.0) return std::numeric_limits<double>::infinity();
  return alpha * (4.0 * alpha + 2.0) * r1 / slack;
}

std::size_t Progression::Next(std::size_t tau, std::size_t n) const {
  std::size_t next = 0;
  if (kind == Kind::kDouble) {
    next = 2 * tau;
  } else {
    const double grown =
        std::ceil(std::pow(static_cast<double>(n), eta) * static_cast<double>(tau));
    next = grown >= static_cast<double>(n) ? n
                                           : static_cast<std::size_t>(grown);
    next = std::max(next, tau + 1);
  }
  return std::min(next, n);
}

RkcOutcome RunRknapLoop(
    std::size_t n, double epsilon, double alpha, const RkcLoopOptions& options,
    const std::function<RkcStep(std::size_t)>& step,
    const std::function<double(std::span<const PointId>)>& full_cost) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0,1)");
  }
  if (alpha < 1.0) throw std::invalid_argument("alpha must be at least 1");
  if (n == 0) throw std::invalid_argument("empty point set");
  RkcOutcome out;
  std::size_t tau = 1;
  while (true) {
    RkcStep s = step(tau);
    IterationRecord rec;
    rec.tau = tau;
    rec.r1 = s.r1;
    rec.r2 = s.r2;
    rec.stop_value = RkcStopValue(alpha, s.r1, s.r2);
    // At tau = |V| the radius is 0, so the second clause never decides.
    rec.stop = RkcShouldStop(alpha, epsilon, s.r1, s.r2) || tau >= n;
    rec.centers = s.solution.centers;
    rec.coreset_size = s.coreset.members.size();
    if (options.evaluate_each_iteration) rec.full_cost = full_cost(rec.centers);
    out.trace.iterations.push_back(rec);
    if (rec.stop) {
      out.solution = s.solution;
      out.solution.cost = options.evaluate_each_iteration
                              ? rec.full_cost
                              : full_cost(rec.centers);
      out.solution.epsilon = epsilon;
      break;
    }
    tau = options.progression.Next(tau, n);
  }
  out.trace.tau_final = tau;
  return out;
}

RkcOutcome RKnapCenter(const RkcInstance& inst, double epsilon,
                       const RkcmSolver& solver, const RkcLoopOptions& options,
                       const KCenterAlgorithm& kcenter) {
  const auto points = inst.points();
  return RunRknapLoop(
      points.size(), epsilon, solver.alpha(), options,
      [&](std::size_t tau) {
        return CoresetComputeAndTest(inst, tau, solver, kcenter);
      },
      [&](std::span<const PointId> centers) {
        return RobustCost(centers, points, inst.z, *inst.oracle);
      });
}

RkcOracleResult BruteForceRkc(const RkcInstance& inst, std::uint64_t budget) {
  const auto ids = inst.points();
  const Dataset& data = inst.oracle->dataset();
  const std::size_t n = ids.size();
  // Largest feasible cardinality: lightest weights first.
  std::vector<double> sorted_w = data.weights();
  std::sort(sorted_w.begin(), sorted_w.end());
  std::size_t smax = 0;
  for (double total = 0.0; smax < n && total + sorted_w[smax] <= 1.0; ++smax) {
    total += sorted_w[smax];
  }
  // One extra size absorbs rounding differences between this sum and the
  // id-ordered sum used for the actual feasibility test.
  smax = std::min(n, smax + 1);
  std::uint64_t subsets = 0;
  for (std::size_t s = 1; s <= smax; ++s) {
    subsets += Binomial(n, s);
    if (subsets > budget) throw BudgetExceeded("oracle budget exceeded");
  }

  const auto dist = kernels::PairwiseDistances(*inst.oracle, ids);
  RkcOracleResult out;
  out.solution.cost = std::numeric_limits<double>::infinity();
  out.solution.z = inst.z;
  std::vector<double> best_by_size(smax + 1,
                                   std::numeric_limits<double>::infinity());
  std::vector<double> reach(n);
  std::vector<PointId> set;
  for (std::size_t s = 1; s <= smax; ++s) {
    std::vector<std::size_t> pick(s);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      set.clear();
      for (const std::size_t i : pick) set.push_back(ids[i]);
      if (WeightOf(set, data) <= 1.0) {
        for (std::size_t p = 0; p < n; ++p) {
          double r = std::numeric_limits<double>::infinity();
          for (const std::size_t i : pick) r = std::min(r, dist[i * n + p]);
          reach[p] = r;
        }
        std::vector<double> sorted = reach;
        std::sort(sorted.begin(), sorted.end());
        const double cost = sorted[n - inst.z - 1];
        best_by_size[s] = std::min(best_by_size[s], cost);
        if (cost < out.solution.cost) {
          out.solution.cost = cost;
          out.solution.centers = set;
        }
      }
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == n - s + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  for (std::size_t s = 1; s <= smax; ++s) {
    if (best_by_size[s] == out.solution.cost) {
      out.min_cardinality = s;
      break;
    }
  }
  return out;
}

}  // namespace rcenter
