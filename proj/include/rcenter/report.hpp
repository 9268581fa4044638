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

// Run configuration and the versioned JSON / CSV report.

#ifndef RCENTER_REPORT_HPP_
#define RCENTER_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rcenter/bigdata.hpp"
#include "rcenter/rkc.hpp"
#include "rcenter/solution.hpp"

namespace rcenter {

inline constexpr int kReportSchemaVersion = 1;

struct RunConfig {
  std::string problem = "rmc";  // rmc | rkc
  std::string mode = "seq";     // seq | mr | stream
  std::string solver = "exact";  // exact | heuristic
  double epsilon = 0.5;
  std::uint64_t z = 0;
  std::optional<std::size_t> partitions;
  double delta = 0.5;
  std::string progression = "double";  // double | pow
  double eta = 0.5;
  // Shuffles the stream order; id order when absent.
  std::optional<std::uint64_t> seed;
  std::uint64_t exact_budget = 10'000'000;
  std::string dataset_path;
  std::string matroid_path;
  nlohmann::json matroid;  // the parsed matroid spec, for rmc
};

struct Verdict {
  std::string criterion;
  std::string status;  // pass | fail | skipped
  std::string detail;
};

struct RunReport {
  RunConfig config;
  std::size_t n = 0;
  std::size_t dimension = 0;
  std::string metric;
  std::size_t rank = 0;  // rmc only
  double alpha = 1.0;
  double eps_prime = 0.0;  // rmc only
  RobustSolution solution;
  double coreset_cost = 0.0;
  std::size_t coreset_size = 0;
  double radius_bound = 0.0;  // streaming rmc only
  ResourceStats stats;
  std::optional<LoopTrace> trace;  // rkc only
  std::vector<Verdict> verdicts;
};

nlohmann::json ToJson(const ResourceStats& stats);
nlohmann::json ToJson(const LoopTrace& trace);
nlohmann::json ToJson(const RunConfig& config);
nlohmann::json ToJson(const RunReport& report);

ResourceStats StatsFromJson(const nlohmann::json& j);
LoopTrace TraceFromJson(const nlohmann::json& j);
RunConfig ConfigFromJson(const nlohmann::json& j);
// Rejects reports with a different schema version.
RunReport ReportFromJson(const nlohmann::json& j);

// One CSV row per report; the header names every column.
std::string CsvHeader();
std::string CsvRow(const RunReport& report);

}  // namespace rcenter

#endif  // RCENTER_REPORT_HPP_
