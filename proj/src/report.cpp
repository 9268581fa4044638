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

#include "rcenter/report.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace rcenter {

using nlohmann::json;

namespace {

// JSON has no infinity or NaN; both travel as null.
json Num(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

double NumOr(const json& j, const char* key, double fallback) {
  if (!j.contains(key) || j[key].is_null()) return fallback;
  return j[key].get<double>();
}

}  // namespace

json ToJson(const ResourceStats& s) {
  return {{"mode", s.mode},
          {"partitions", s.partitions},
          {"rounds", s.rounds},
          {"passes", s.passes},
          {"max_local_memory_items", s.max_local_memory_items},
          {"aggregate_memory_items", s.aggregate_memory_items},
          {"stream_reads", s.stream_reads},
          {"evaluation_passes", s.evaluation_passes},
          {"evaluation_reads", s.evaluation_reads},
          {"distance_evals", s.distance_evals}};
}

ResourceStats StatsFromJson(const json& j) {
  ResourceStats s;
  s.mode = j.at("mode").get<std::string>();
  s.partitions = j.at("partitions").get<std::size_t>();
  s.rounds = j.at("rounds").get<std::size_t>();
  s.passes = j.at("passes").get<std::size_t>();
  s.max_local_memory_items = j.at("max_local_memory_items").get<std::uint64_t>();
  s.aggregate_memory_items = j.at("aggregate_memory_items").get<std::uint64_t>();
  s.stream_reads = j.at("stream_reads").get<std::uint64_t>();
  s.evaluation_passes = j.at("evaluation_passes").get<std::size_t>();
  s.evaluation_reads = j.at("evaluation_reads").get<std::uint64_t>();
  s.distance_evals = j.at("distance_evals").get<std::uint64_t>();
  return s;
}

json ToJson(const LoopTrace& trace) {
  json iterations = json::array();
  for (const auto& it : trace.iterations) {
    iterations.push_back({{"tau", it.tau},
                          {"r1", Num(it.r1)},
                          {"r2", Num(it.r2)},
                          {"stop_value", Num(it.stop_value)},
                          {"stop", it.stop},
                          {"centers", it.centers},
                          {"coreset_size", it.coreset_size},
                          {"full_cost", Num(it.full_cost)}});
  }
  return {{"iterations", iterations}, {"tau_final", trace.tau_final}};
}

LoopTrace TraceFromJson(const json& j) {
  LoopTrace trace;
  trace.tau_final = j.at("tau_final").get<std::size_t>();
  for (const auto& it : j.at("iterations")) {
    IterationRecord rec;
    rec.tau = it.at("tau").get<std::size_t>();
    rec.r1 = NumOr(it, "r1", 0.0);
    rec.r2 = NumOr(it, "r2", 0.0);
    rec.stop_value =
        NumOr(it, "stop_value", std::numeric_limits<double>::infinity());
    rec.stop = it.at("stop").get<bool>();
    rec.centers = it.at("centers").get<std::vector<PointId>>();
    rec.coreset_size = it.at("coreset_size").get<std::size_t>();
    rec.full_cost =
        NumOr(it, "full_cost", std::numeric_limits<double>::quiet_NaN());
    trace.iterations.push_back(std::move(rec));
  }
  return trace;
}

json ToJson(const RunConfig& c) {
  json j = {{"problem", c.problem},
            {"mode", c.mode},
            {"solver", c.solver},
            {"epsilon", c.epsilon},
            {"z", c.z},
            {"delta", c.delta},
            {"progression", c.progression},
            {"eta", c.eta},
            {"exact_budget", c.exact_budget},
            {"dataset", c.dataset_path},
            {"matroid_file", c.matroid_path},
            {"matroid", c.matroid}};
  j["partitions"] = c.partitions ? json(*c.partitions) : json(nullptr);
  j["seed"] = c.seed ? json(*c.seed) : json(nullptr);
  return j;
}

RunConfig ConfigFromJson(const json& j) {
  RunConfig c;
  c.problem = j.at("problem").get<std::string>();
  c.mode = j.at("mode").get<std::string>();
  c.solver = j.at("solver").get<std::string>();
  c.epsilon = j.at("epsilon").get<double>();
  c.z = j.at("z").get<std::uint64_t>();
  c.delta = j.at("delta").get<double>();
  c.progression = j.at("progression").get<std::string>();
  c.eta = j.at("eta").get<double>();
  c.exact_budget = j.at("exact_budget").get<std::uint64_t>();
  c.dataset_path = j.at("dataset").get<std::string>();
  c.matroid_path = j.at("matroid_file").get<std::string>();
  c.matroid = j.at("matroid");
  if (!j.at("partitions").is_null()) {
    c.partitions = j["partitions"].get<std::size_t>();
  }
  if (!j.at("seed").is_null()) c.seed = j["seed"].get<std::uint64_t>();
  return c;
}

json ToJson(const RunReport& r) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["config"] = ToJson(r.config);
  j["instance"] = {{"n", r.n},
                   {"dimension", r.dimension},
                   {"metric", r.metric},
                   {"rank", r.rank}};
  j["solution"] = {{"centers", r.solution.centers},
                   {"cost", Num(r.solution.cost)},
                   {"coreset_cost", Num(r.coreset_cost)},
                   {"coreset_size", r.coreset_size},
                   {"alpha", r.alpha},
                   {"eps_prime", r.eps_prime},
                   {"radius_bound", Num(r.radius_bound)}};
  j["stats"] = ToJson(r.stats);
  j["trace"] = r.trace ? ToJson(*r.trace) : json(nullptr);
  json verdicts = json::array();
  for (const auto& v : r.verdicts) {
    verdicts.push_back(
        {{"criterion", v.criterion}, {"status", v.status}, {"detail", v.detail}});
  }
  j["verdicts"] = verdicts;
  return j;
}

RunReport ReportFromJson(const json& j) {
  if (j.value("schema_version", -1) != kReportSchemaVersion) {
    throw std::invalid_argument("unsupported report schema version");
  }
  RunReport r;
  r.config = ConfigFromJson(j.at("config"));
  const auto& inst = j.at("instance");
  r.n = inst.at("n").get<std::size_t>();
  r.dimension = inst.at("dimension").get<std::size_t>();
  r.metric = inst.at("metric").get<std::string>();
  r.rank = inst.at("rank").get<std::size_t>();
  const auto& sol = j.at("solution");
  r.solution.centers = sol.at("centers").get<std::vector<PointId>>();
  r.solution.cost =
      NumOr(sol, "cost", std::numeric_limits<double>::quiet_NaN());
  r.solution.z = r.config.z;
  r.solution.epsilon = r.config.epsilon;
  r.coreset_cost =
      NumOr(sol, "coreset_cost", std::numeric_limits<double>::quiet_NaN());
  r.coreset_size = sol.at("coreset_size").get<std::size_t>();
  r.alpha = sol.at("alpha").get<double>();
  r.eps_prime = sol.at("eps_prime").get<double>();
  r.radius_bound = NumOr(sol, "radius_bound", 0.0);
  r.stats = StatsFromJson(j.at("stats"));
  if (!j.at("trace").is_null()) r.trace = TraceFromJson(j["trace"]);
  for (const auto& v : j.at("verdicts")) {
    r.verdicts.push_back({v.at("criterion").get<std::string>(),
                          v.at("status").get<std::string>(),
                          v.at("detail").get<std::string>()});
  }
  return r;
}

std::string CsvHeader() {
  return "dataset,problem,mode,solver,n,z,epsilon,partitions,delta,"
         "progression,cost,coreset_cost,coreset_size,num_centers,rounds,"
         "passes,iterations,max_local_memory_items,stream_reads,"
         "distance_evals";
}

std::string CsvRow(const RunReport& r) {
  std::ostringstream out;
  out.precision(17);
  out << r.config.dataset_path << ',' << r.config.problem << ','
      << r.config.mode << ',' << r.config.solver << ',' << r.n << ','
      << r.config.z << ',' << r.config.epsilon << ',' << r.stats.partitions
      << ',' << r.config.delta << ',' << r.config.progression << ','
      << r.solution.cost << ',' << r.coreset_cost << ',' << r.coreset_size
      << ',' << r.solution.centers.size() << ',' << r.stats.rounds << ','
      << r.stats.passes << ','
      << (r.trace ? r.trace->iterations.size() : 0) << ','
      << r.stats.max_local_memory_items << ',' << r.stats.stream_reads << ','
      << r.stats.distance_evals;
  return out.str();
}

}  // namespace rcenter
