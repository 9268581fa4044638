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

#include "rcenter/rmc.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "rcenter/kernels.hpp"
#include "subset_search.hpp"

namespace rcenter {

double WeightOf(std::span<const PointId> sorted_ids, const Dataset& data) {
  double total = 0.0;
  for (const PointId id : sorted_ids) total += data.weight(id);
  return total;
}

RmcInstance RmcInstance::Make(const DistanceOracle& oracle,
                              const Matroid& matroid, std::uint64_t z) {
  const std::size_t n = oracle.size();
  if (matroid.ground_size() != n) {
    throw std::invalid_argument("matroid ground set does not match dataset");
  }
  if (z >= n) throw std::invalid_argument("z must be smaller than |V|");
  RmcInstance inst;
  inst.oracle = &oracle;
  inst.matroid = &matroid;
  inst.z = z;
  const auto ids = oracle.dataset().ids();
  inst.k = Rank(ids, matroid);
  if (inst.k == 0) throw std::invalid_argument("matroid has rank 0");
  return inst;
}

std::vector<PointId> RmcCoreset::member_ids() const {
  std::vector<PointId> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.point);
  return out;
}

std::vector<std::vector<PointId>> RmcCoreset::clusters() const {
  std::vector<std::vector<PointId>> out(anchors.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    out[cluster_of[i]].push_back(points[i]);
  }
  return out;
}

RmcCoreset RmcCoreset::Union(std::span<const RmcCoreset> parts) {
  RmcCoreset out;
  for (const auto& part : parts) {
    const std::size_t offset = out.anchors.size();
    out.members.insert(out.members.end(), part.members.begin(),
                       part.members.end());
    out.points.insert(out.points.end(), part.points.begin(), part.points.end());
    out.proxy.insert(out.proxy.end(), part.proxy.begin(), part.proxy.end());
    for (const std::size_t c : part.cluster_of) out.cluster_of.push_back(c + offset);
    out.anchors.insert(out.anchors.end(), part.anchors.begin(),
                       part.anchors.end());
    out.independent_sets.insert(out.independent_sets.end(),
                                part.independent_sets.begin(),
                                part.independent_sets.end());
    out.tau += part.tau;
    out.eps_prime = part.eps_prime;
    out.beta = part.beta;
    out.r_guess = std::max(out.r_guess, part.r_guess);
  }
  std::sort(out.members.begin(), out.members.end(),
            [](const auto& a, const auto& b) { return a.point < b.point; });
  return out;
}

RmcCoreset BuildRmcCoreset(std::span<const PointId> points,
                           const Matroid& matroid, std::size_t k,
                           std::uint64_t z, double eps_prime,
                           const KCenterAlgorithm& kcenter,
                           const DistanceOracle& oracle) {
  if (!(eps_prime > 0.0 && eps_prime < 1.0)) {
    throw std::invalid_argument("eps_prime must lie in (0,1)");
  }
  if (points.empty()) throw std::invalid_argument("empty point set");
  RmcCoreset out;
  out.eps_prime = eps_prime;
  out.beta = kcenter.beta;
  out.points.assign(points.begin(), points.end());

  const CenterSet first = kcenter.run(points, k + z, oracle);
  out.r_guess = first.radius;
  const double threshold = (eps_prime / (2.0 * kcenter.beta)) * out.r_guess;
  out.anchors = ThresholdGreedy(points, threshold, oracle).centers;
  out.tau = out.anchors.size();

  const Clustering clustering = ClusterAssign(points, out.anchors, oracle);
  out.cluster_of = clustering.cluster_of;
  auto clusters = clustering.Members();

  out.independent_sets.resize(clusters.size());
  const auto nclusters = static_cast<std::ptrdiff_t>(clusters.size());
#pragma omp parallel for schedule(dynamic) if (clusters.size() > 64)
  for (std::ptrdiff_t c = 0; c < nclusters; ++c) {
    auto& members = clusters[c];
    std::sort(members.begin(), members.end());
    out.independent_sets[c] =
        MaximalIndependentSubset(members, matroid).members;
  }

  out.proxy.resize(points.size());
  std::uint64_t evals = 0;
  const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static) reduction(+ : evals) \
    if (points.size() > 4096)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto& ys = out.independent_sets[out.cluster_of[i]];
    PointId best = ys.front();
    double best_d = std::numeric_limits<double>::infinity();
    for (const PointId y : ys) {
      const double d = oracle.raw(points[i], y);
      if (y == points[i]) {
        // Members proxy to themselves even when a duplicate ties at 0.
        best_d = -1.0;
        best = y;
      } else if (d < best_d) {
        best_d = d;
        best = y;
      }
    }
    evals += ys.size();
    out.proxy[i] = best;
  }
  oracle.charge(evals);

  std::unordered_map<PointId, std::uint64_t> mass;
  for (const PointId p : out.proxy) ++mass[p];
  for (const auto& ys : out.independent_sets) {
    for (const PointId y : ys) out.members.push_back({y, mass.at(y)});
  }
  std::sort(out.members.begin(), out.members.end(),
            [](const auto& a, const auto& b) { return a.point < b.point; });
  return out;
}

bool CertifyC1(const RmcCoreset& coreset, double rstar,
               const DistanceOracle& oracle) {
  const double bound = coreset.eps_prime * rstar;
  for (std::size_t i = 0; i < coreset.points.size(); ++i) {
    if (oracle.distance(coreset.points[i], coreset.proxy[i]) > bound) {
      return false;
    }
  }
  return true;
}

std::vector<PointId> TransportIndependentSet(const RmcCoreset& coreset,
                                             std::span<const PointId> x,
                                             const Matroid& matroid) {
  if (!matroid.IsIndependent(x)) {
    throw std::invalid_argument("set to transport is not independent");
  }
  std::unordered_map<PointId, std::size_t> position;
  for (std::size_t i = 0; i < coreset.points.size(); ++i) {
    position.emplace(coreset.points[i], i);
  }
  const auto clusters = coreset.clusters();
  std::vector<PointId> running(x.begin(), x.end());
  for (std::size_t h = 0; h < running.size(); ++h) {
    const PointId y = running[h];
    const auto pos = position.find(y);
    if (pos == position.end()) {
      throw std::invalid_argument("element outside the coreset ground set");
    }
    const std::size_t cluster = coreset.cluster_of[pos->second];
    const auto& ys = coreset.independent_sets[cluster];
    if (std::find(ys.begin(), ys.end(), y) != ys.end()) continue;
    IndependentSet a;
    for (std::size_t i = 0; i < running.size(); ++i) {
      if (i != h) a.members.push_back(running[i]);
    }
    const auto witness =
        AugmentWitness(a, clusters[cluster], {ys, true}, y, matroid);
    if (!witness) {
      throw std::logic_error("extended augmentation found no witness");
    }
    running[h] = *witness;
  }
  return running;
}

bool CertifyC2(const RmcCoreset& coreset, std::span<const PointId> x,
               double rstar, const Matroid& matroid,
               const DistanceOracle& oracle) {
  const auto image = TransportIndependentSet(coreset, x, matroid);
  std::unordered_set<PointId> distinct(image.begin(), image.end());
  if (distinct.size() != image.size()) return false;
  if (!matroid.IsIndependent(image)) return false;
  const auto ids = coreset.member_ids();
  const double bound = coreset.eps_prime * rstar;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (!std::binary_search(ids.begin(), ids.end(), image[i])) return false;
    if (oracle.distance(x[i], image[i]) > bound) return false;
  }
  return true;
}


RobustSolution ExactRmcmSolver::Solve(
    std::span<const MultiplicityPoint> members_in, const Matroid& matroid,
    std::uint64_t z, const DistanceOracle& oracle) const {
  if (members_in.empty()) throw std::invalid_argument("empty coreset");
  if (z >= TotalMass(members_in)) {
    throw std::invalid_argument("z exhausts all mass");
  }
  const auto members = detail::SortedById(members_in);
  std::vector<PointId> ids;
  for (const auto& m : members) ids.push_back(m.point);
  const std::size_t rank = Rank(ids, matroid);
  std::uint64_t subsets = 0;
  for (std::size_t s = 1; s <= rank; ++s) {
    subsets += Binomial(ids.size(), s);
    if (subsets > budget_) {
      throw BudgetExceeded(
          "exact solver budget exceeded; use the heuristic solver");
    }
  }
  detail::SubsetSearch search(
      members, z, rank,
      [&matroid](std::span<const PointId> set) {
        return matroid.IsIndependent(set);
      },
      std::numeric_limits<std::uint64_t>::max(), oracle);
  detail::Candidate best;
  search.Run(parallel_, best);
  return {best.centers, best.cost, z, 0.0};
}

RobustSolution LocalSearchRmcmSolver::Solve(
    std::span<const MultiplicityPoint> members_in, const Matroid& matroid,
    std::uint64_t z, const DistanceOracle& oracle) const {
  if (members_in.empty()) throw std::invalid_argument("empty coreset");
  if (z >= TotalMass(members_in)) {
    throw std::invalid_argument("z exhausts all mass");
  }
  const auto members = detail::SortedById(members_in);
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

  // Heaviest points first.
  std::vector<PointId> order = ids;
  std::stable_sort(order.begin(), order.end(), [&](PointId a, PointId b) {
    return members[index.at(a)].multiplicity > members[index.at(b)].multiplicity;
  });
  std::vector<PointId> current = MaximalIndependentSubset(order, matroid).members;
  std::sort(current.begin(), current.end());
  double current_cost = cost_of(current);

  for (std::size_t round = 0; round < max_rounds_; ++round) {
    bool improved = false;
    for (std::size_t pos = 0; pos < current.size() && !improved; ++pos) {
      for (const PointId t : ids) {
        if (std::binary_search(current.begin(), current.end(), t)) continue;
        std::vector<PointId> trial = current;
        trial[pos] = t;
        std::sort(trial.begin(), trial.end());
        if (!matroid.IsIndependent(trial)) continue;
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

double RmcEpsPrime(double epsilon, double alpha) {
  return epsilon / (2.0 * alpha + 1.0);
}

RmcOutcome SolveRmc(const RmcInstance& inst, double epsilon,
                    const RmcmSolver& solver, const KCenterAlgorithm& kcenter) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0,1)");
  }
  RmcOutcome out;
  out.eps_prime = RmcEpsPrime(epsilon, solver.alpha());
  const auto points = inst.points();
  out.coreset = BuildRmcCoreset(points, *inst.matroid, inst.k, inst.z,
                                out.eps_prime, kcenter, *inst.oracle);
  out.solution =
      solver.Solve(out.coreset.members, *inst.matroid, inst.z, *inst.oracle);
  out.coreset_cost = out.solution.cost;
  out.solution.cost =
      RobustCost(out.solution.centers, points, inst.z, *inst.oracle);
  out.solution.epsilon = epsilon;
  return out;
}

RobustSolution BruteForceRmc(const RmcInstance& inst, std::uint64_t budget) {
  const auto ids = inst.points();
  const std::size_t n = ids.size();
  std::uint64_t subsets = 0;
  for (std::size_t s = 1; s <= inst.k; ++s) {
    subsets += Binomial(n, s);
    if (subsets > budget) throw BudgetExceeded("oracle budget exceeded");
  }
  const auto dist = kernels::PairwiseDistances(*inst.oracle, ids);
  RobustSolution best;
  best.cost = std::numeric_limits<double>::infinity();
  best.z = inst.z;
  std::vector<double> reach(n);
  std::vector<PointId> set;
  for (std::size_t s = 1; s <= inst.k; ++s) {
    std::vector<std::size_t> pick(s);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      set.clear();
      for (const std::size_t i : pick) set.push_back(ids[i]);
      if (inst.matroid->IsIndependent(set)) {
        for (std::size_t p = 0; p < n; ++p) {
          double r = std::numeric_limits<double>::infinity();
          for (const std::size_t i : pick) r = std::min(r, dist[i * n + p]);
          reach[p] = r;
        }
        // The (n - z)-th smallest distance.
        std::vector<double> sorted = reach;
        std::sort(sorted.begin(), sorted.end());
        const double cost = sorted[n - inst.z - 1];
        if (cost < best.cost) {
          best.cost = cost;
          best.centers = set;
        }
      }
      // Next combination.
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == n - s + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return best;
}

}  // namespace rcenter
