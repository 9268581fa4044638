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

#include "rcenter/matroid.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace rcenter {

using nlohmann::json;

namespace {

// Falls back to a full independence query per addition.
class QueryingIncrementalSet final : public IncrementalIndependentSet {
 public:
  explicit QueryingIncrementalSet(const Matroid& m) : matroid_(m) {}
  bool TryAdd(PointId id) override {
    if (std::find(members_.begin(), members_.end(), id) != members_.end()) {
      return false;
    }
    members_.push_back(id);
    if (matroid_.IsIndependent(members_)) return true;
    members_.pop_back();
    return false;
  }

 private:
  const Matroid& matroid_;
};

class PartitionIncrementalSet final : public IncrementalIndependentSet {
 public:
  explicit PartitionIncrementalSet(const PartitionMatroid& m) : matroid_(m) {}
  bool TryAdd(PointId id) override {
    matroid_.CountQuery();
    if (id >= matroid_.ground_size()) throw std::out_of_range("invalid point id");
    if (std::find(members_.begin(), members_.end(), id) != members_.end()) {
      return false;
    }
    const int cat = matroid_.category(id);
    int& used = used_[cat];
    if (used >= matroid_.quota(cat)) return false;
    ++used;
    members_.push_back(id);
    return true;
  }

 private:
  const PartitionMatroid& matroid_;
  std::map<int, int> used_;
};

// Keeps a matching of the members into slots and extends it with one
// augmenting-path search per addition. A failed search leaves the matching
// untouched, so rejected points cost nothing later.
class TransversalIncrementalSet final : public IncrementalIndependentSet {
 public:
  TransversalIncrementalSet(const TransversalMatroid& m, bool counted)
      : matroid_(m), counted_(counted), slot_owner_(m.slots(), kFree) {}

  bool TryAdd(PointId id) override {
    if (counted_) matroid_.CountQuery();
    if (id >= matroid_.ground_size()) throw std::out_of_range("invalid point id");
    if (std::find(members_.begin(), members_.end(), id) != members_.end()) {
      return false;
    }
    if (members_.size() >= matroid_.slots()) return false;
    visited_.assign(matroid_.slots(), 0);
    if (!Augment(id)) return false;
    members_.push_back(id);
    return true;
  }

 private:
  static constexpr std::int64_t kFree = -1;

  bool Augment(PointId id) {
    for (const int slot : matroid_.adjacent(id)) {
      if (visited_[slot]) continue;
      visited_[slot] = 1;
      const std::int64_t owner = slot_owner_[slot];
      if (owner == kFree || Augment(static_cast<PointId>(owner))) {
        slot_owner_[slot] = id;
        return true;
      }
    }
    return false;
  }

  const TransversalMatroid& matroid_;
  bool counted_;
  std::vector<std::int64_t> slot_owner_;
  std::vector<unsigned char> visited_;
};

}  // namespace

bool Matroid::IsIndependent(std::span<const PointId> set) const {
  CountQuery();
  std::unordered_set<PointId> seen;
  for (const PointId id : set) {
    if (id >= ground_size_) throw std::out_of_range("invalid point id");
    if (!seen.insert(id).second) {
      throw std::invalid_argument("repeated id in independence query");
    }
  }
  return Independent(set);
}

std::unique_ptr<IncrementalIndependentSet> Matroid::NewIncrementalSet() const {
  return MakeIncrementalSet();
}

std::unique_ptr<IncrementalIndependentSet> Matroid::MakeIncrementalSet() const {
  return std::make_unique<QueryingIncrementalSet>(*this);
}

void Matroid::CheckSingletons() const {
  for (PointId id = 0; id < ground_size_; ++id) {
    const PointId single[] = {id};
    if (!Independent(single)) {
      throw std::invalid_argument("point " + std::to_string(id) +
                                  " is a loop: {id} is not independent");
    }
  }
}

UniformMatroid::UniformMatroid(std::size_t ground_size, std::size_t k)
    : Matroid(ground_size), k_(k) {
  if (k == 0 && ground_size > 0) {
    throw std::invalid_argument("uniform matroid needs k >= 1");
  }
}

bool UniformMatroid::Independent(std::span<const PointId> set) const {
  return set.size() <= k_;
}

json UniformMatroid::ToJson() const { return {{"kind", "uniform"}, {"k", k_}}; }

PartitionMatroid::PartitionMatroid(std::vector<int> categories,
                                   std::map<int, int> quotas)
    : Matroid(categories.size()),
      categories_(std::move(categories)),
      quotas_(std::move(quotas)) {
  CheckSingletons();
}

int PartitionMatroid::quota(int category) const {
  const auto it = quotas_.find(category);
  return it == quotas_.end() ? 0 : it->second;
}

bool PartitionMatroid::Independent(std::span<const PointId> set) const {
  std::map<int, int> used;
  for (const PointId id : set) {
    const int cat = categories_[id];
    if (++used[cat] > quota(cat)) return false;
  }
  return true;
}

std::unique_ptr<IncrementalIndependentSet>
PartitionMatroid::MakeIncrementalSet() const {
  return std::make_unique<PartitionIncrementalSet>(*this);
}

json PartitionMatroid::ToJson() const {
  json quotas = json::object();
  for (const auto& [cat, q] : quotas_) quotas[std::to_string(cat)] = q;
  return {{"kind", "partition"}, {"quotas", quotas}};
}

TransversalMatroid::TransversalMatroid(std::size_t slots,
                                       std::vector<std::vector<int>> adjacency)
    : Matroid(adjacency.size()), slots_(slots), adjacency_(std::move(adjacency)) {
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    for (const int s : adj) {
      if (s < 0 || static_cast<std::size_t>(s) >= slots_) {
        throw std::invalid_argument("adjacency names a slot out of range");
      }
    }
  }
  CheckSingletons();
}

bool TransversalMatroid::Independent(std::span<const PointId> set) const {
  TransversalIncrementalSet matching(*this, /*counted=*/false);
  for (const PointId id : set) {
    if (!matching.TryAdd(id)) return false;
  }
  return true;
}

std::unique_ptr<IncrementalIndependentSet>
TransversalMatroid::MakeIncrementalSet() const {
  return std::make_unique<TransversalIncrementalSet>(*this, /*counted=*/true);
}

json TransversalMatroid::ToJson() const {
  json adjacency = json::object();
  for (std::size_t id = 0; id < adjacency_.size(); ++id) {
    adjacency[std::to_string(id)] = adjacency_[id];
  }
  return {{"kind", "transversal"}, {"slots", slots_}, {"adjacency", adjacency}};
}

std::unique_ptr<Matroid> MatroidFromJson(const json& spec, const Dataset& data) {
  const auto kind = spec.at("kind").get<std::string>();
  if (kind == "uniform") {
    return std::make_unique<UniformMatroid>(data.size(),
                                            spec.at("k").get<std::size_t>());
  }
  if (kind == "partition") {
    if (!data.has_categories()) {
      throw std::invalid_argument("partition matroid needs point categories");
    }
    std::map<int, int> quotas;
    for (const auto& [key, value] : spec.at("quotas").items()) {
      quotas[std::stoi(key)] = value.get<int>();
    }
    return std::make_unique<PartitionMatroid>(data.categories(),
                                              std::move(quotas));
  }
  if (kind == "transversal") {
    std::vector<std::vector<int>> adjacency(data.size());
    for (const auto& [key, value] : spec.at("adjacency").items()) {
      const auto id = std::stoul(key);
      if (id >= data.size()) throw std::out_of_range("invalid point id");
      adjacency[id] = value.get<std::vector<int>>();
    }
    return std::make_unique<TransversalMatroid>(spec.at("slots").get<std::size_t>(),
                                                std::move(adjacency));
  }
  throw std::invalid_argument("unknown matroid kind '" + kind + "'");
}

std::unique_ptr<Matroid> LoadMatroid(const std::string& path,
                                     const Dataset& data) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return MatroidFromJson(json::parse(in), data);
}

IndependentSet MaximalIndependentSubset(std::span<const PointId> candidates,
                                        const Matroid& matroid) {
  auto greedy = matroid.NewIncrementalSet();
  for (const PointId id : candidates) greedy->TryAdd(id);
  return {greedy->members(), true};
}

std::size_t Rank(std::span<const PointId> subset, const Matroid& matroid) {
  return MaximalIndependentSubset(subset, matroid).members.size();
}

std::optional<PointId> AugmentWitness(const IndependentSet& a,
                                      std::span<const PointId> subset,
                                      const IndependentSet& b, PointId y,
                                      const Matroid& matroid) {
  const auto unmet = [] {
    return std::invalid_argument("lemma preconditions unmet");
  };
  const std::set<PointId> in_subset(subset.begin(), subset.end());
  const std::set<PointId> in_a(a.members.begin(), a.members.end());
  const std::set<PointId> in_b(b.members.begin(), b.members.end());
  if (!matroid.IsIndependent(a.members)) throw unmet();
  if (!matroid.IsIndependent(b.members)) throw unmet();
  for (const PointId x : b.members) {
    if (!in_subset.count(x)) throw unmet();
  }
  // B must be maximal inside the subset.
  std::vector<PointId> probe = b.members;
  for (const PointId v : in_subset) {
    if (in_b.count(v)) continue;
    probe.push_back(v);
    const bool grows = matroid.IsIndependent(probe);
    probe.pop_back();
    if (grows) throw unmet();
  }
  if (!in_subset.count(y) || in_a.count(y)) throw unmet();
  probe = a.members;
  probe.push_back(y);
  if (!matroid.IsIndependent(probe)) throw unmet();

  for (const PointId x : in_b) {
    if (in_a.count(x)) continue;
    probe.back() = x;
    if (matroid.IsIndependent(probe)) return x;
  }
  return std::nullopt;
}

}  // namespace rcenter
