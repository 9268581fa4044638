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

#ifndef RCENTER_MATROID_HPP_
#define RCENTER_MATROID_HPP_

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "rcenter/metric.hpp"

namespace rcenter {

// An independent set that grows one element at a time. TryAdd keeps the
// set independent: it adds `id` and returns true only if the result is
// still independent. Implementations may keep auxiliary state (e.g. a
// partial matching) so repeated additions avoid recomputation.
class IncrementalIndependentSet {
 public:
  virtual ~IncrementalIndependentSet() = default;
  virtual bool TryAdd(PointId id) = 0;
  const std::vector<PointId>& members() const { return members_; }

 protected:
  std::vector<PointId> members_;
};

// Independence oracle over the ground set {0, .., n-1}. Every singleton is
// required to be independent; constructors reject loops.
class Matroid {
 public:
  explicit Matroid(std::size_t ground_size) : ground_size_(ground_size) {}
  virtual ~Matroid() = default;
  Matroid(const Matroid&) = delete;
  Matroid& operator=(const Matroid&) = delete;

  std::size_t ground_size() const { return ground_size_; }

  // Throws std::out_of_range on foreign ids and std::invalid_argument on
  // repeated ids.
  bool IsIndependent(std::span<const PointId> set) const;

  std::unique_ptr<IncrementalIndependentSet> NewIncrementalSet() const;

  virtual std::string kind() const = 0;
  virtual nlohmann::json ToJson() const = 0;

  // Number of independence queries answered so far, including each
  // incremental TryAdd.
  std::uint64_t queries() const { return queries_.load(); }
  void CountQuery() const { queries_.fetch_add(1, std::memory_order_relaxed); }

 protected:
  // `set` holds distinct, valid ids.
  virtual bool Independent(std::span<const PointId> set) const = 0;
  virtual std::unique_ptr<IncrementalIndependentSet> MakeIncrementalSet()
      const;
  void CheckSingletons() const;

 private:
  std::size_t ground_size_;
  mutable std::atomic<std::uint64_t> queries_{0};
};

class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(std::size_t ground_size, std::size_t k);
  std::size_t k() const { return k_; }
  std::string kind() const override { return "uniform"; }
  nlohmann::json ToJson() const override;

 protected:
  bool Independent(std::span<const PointId> set) const override;

 private:
  std::size_t k_;
};

// At most quotas[c] members from category c.
class PartitionMatroid final : public Matroid {
 public:
  PartitionMatroid(std::vector<int> categories, std::map<int, int> quotas);
  int category(PointId id) const { return categories_[id]; }
  int quota(int category) const;
  std::string kind() const override { return "partition"; }
  nlohmann::json ToJson() const override;

 protected:
  bool Independent(std::span<const PointId> set) const override;
  std::unique_ptr<IncrementalIndependentSet> MakeIncrementalSet()
      const override;

 private:
  std::vector<int> categories_;
  std::map<int, int> quotas_;
};

// A set is independent iff its members can be matched to distinct slots
// they are adjacent to.
class TransversalMatroid final : public Matroid {
 public:
  TransversalMatroid(std::size_t slots,
                     std::vector<std::vector<int>> adjacency);
  std::size_t slots() const { return slots_; }
  const std::vector<int>& adjacent(PointId id) const { return adjacency_[id]; }
  std::string kind() const override { return "transversal"; }
  nlohmann::json ToJson() const override;

 protected:
  bool Independent(std::span<const PointId> set) const override;
  std::unique_ptr<IncrementalIndependentSet> MakeIncrementalSet()
      const override;

 private:
  std::size_t slots_;
  std::vector<std::vector<int>> adjacency_;
};

// Builds a matroid from its JSON description. Partition matroids read the
// point categories from `data`.
std::unique_ptr<Matroid> MatroidFromJson(const nlohmann::json& spec,
                                         const Dataset& data);
std::unique_ptr<Matroid> LoadMatroid(const std::string& path,
                                     const Dataset& data);

struct IndependentSet {
  std::vector<PointId> members;
  bool certified = false;
};

// Greedy scan in the given order; the result is a maximum-cardinality
// independent subset of `candidates`.
IndependentSet MaximalIndependentSubset(std::span<const PointId> candidates,
                                        const Matroid& matroid);

std::size_t Rank(std::span<const PointId> subset, const Matroid& matroid);

// Extended augmentation: given independent A, a maximal independent set B of
// `subset`, and y in subset \ A with A + y independent, returns some
// x in B \ A with A + x independent (lowest id first). Throws
// std::invalid_argument("lemma preconditions unmet") when the inputs do
// not satisfy the hypotheses. Returns nullopt only if no witness exists,
// which the matroid axioms rule out.
std::optional<PointId> AugmentWitness(const IndependentSet& a,
                                      std::span<const PointId> subset,
                                      const IndependentSet& b, PointId y,
                                      const Matroid& matroid);

}  // namespace rcenter

#endif  // RCENTER_MATROID_HPP_
