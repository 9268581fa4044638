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

#ifndef RCENTER_SRC_SUBSET_SEARCH_HPP_
#define RCENTER_SRC_SUBSET_SEARCH_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "rcenter/kernels.hpp"
#include "rcenter/metric.hpp"
#include "rcenter/solution.hpp"

namespace rcenter::detail {

struct Candidate {
  double cost = std::numeric_limits<double>::infinity();
  std::vector<PointId> centers;

  void Offer(double c, const std::vector<PointId>& set) {
    if (c < cost || (c == cost && LexLess(set, centers))) {
      cost = c;
      centers = set;
    }
  }
};

// Exhaustive search for the minimum robust cost over the feasible nonempty
// subsets of `members` (sorted by id). `feasible` must be hereditary; the
// DFS extends sets in ascending id order and only descends into feasible
// ones, so every feasible set is visited exactly once, in lexicographic
// order. Roots run as independent tasks and are reduced in root order,
// which keeps the tie-break identical to the serial scan.
class SubsetSearch {
 public:
  using Feasible = std::function<bool(std::span<const PointId>)>;

  SubsetSearch(std::span<const MultiplicityPoint> members, std::uint64_t z,
               std::size_t max_size, Feasible feasible, std::uint64_t budget,
               const DistanceOracle& oracle)
      : members_(members), z_(z), max_size_(max_size),
        feasible_(std::move(feasible)), budget_(budget) {
    for (const auto& m : members_) ids_.push_back(m.point);
    dist_ = kernels::PairwiseDistances(oracle, ids_);
  }

  // Returns false if the node budget ran out.
  bool Run(bool parallel, Candidate& best) {
    const std::size_t m = ids_.size();
    std::vector<Candidate> per_root(m);
    const auto roots = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t r = 0; r < roots; ++r) {
      Worker worker(*this);
      per_root[r] = worker.RunRoot(static_cast<std::size_t>(r));
    }
    if (exhausted_.load()) return false;
    best = Candidate{};
    for (const auto& c : per_root) {
      if (c.cost < best.cost) best = c;
    }
    return true;
  }

 private:
  class Worker {
   public:
    explicit Worker(SubsetSearch& s) : s_(s) {}

    Candidate RunRoot(std::size_t root) {
      const std::size_t m = s_.ids_.size();
      set_.assign(1, s_.ids_[root]);
      if (!s_.feasible_(set_)) return best_;
      std::vector<double> reach(s_.dist_.begin() + root * m,
                                s_.dist_.begin() + (root + 1) * m);
      Visit(root, reach);
      return best_;
    }

   private:
    void Visit(std::size_t last, const std::vector<double>& reach) {
      if (s_.exhausted_.load(std::memory_order_relaxed)) return;
      if (s_.nodes_.fetch_add(1, std::memory_order_relaxed) >= s_.budget_) {
        s_.exhausted_.store(true);
        return;
      }
      best_.Offer(RobustCostFromDistances(reach, s_.members_, s_.z_), set_);
      if (set_.size() >= s_.max_size_) return;
      const std::size_t m = s_.ids_.size();
      std::vector<double> next(m);
      for (std::size_t j = last + 1; j < m; ++j) {
        set_.push_back(s_.ids_[j]);
        if (s_.feasible_(set_)) {
          for (std::size_t p = 0; p < m; ++p) {
            next[p] = std::min(reach[p], s_.dist_[j * m + p]);
          }
          Visit(j, next);
        }
        set_.pop_back();
      }
    }

    SubsetSearch& s_;
    std::vector<PointId> set_;
    Candidate best_;
  };

  std::span<const MultiplicityPoint> members_;
  std::uint64_t z_;
  std::size_t max_size_;
  Feasible feasible_;
  std::uint64_t budget_;
  std::vector<PointId> ids_;
  std::vector<double> dist_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> exhausted_{false};
};

inline std::vector<MultiplicityPoint> SortedById(
    std::span<const MultiplicityPoint> members) {
  std::vector<MultiplicityPoint> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.point < b.point; });
  return sorted;
}

}  // namespace rcenter::detail

#endif  // RCENTER_SRC_SUBSET_SEARCH_HPP_
