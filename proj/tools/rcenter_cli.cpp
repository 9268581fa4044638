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

// Command line front end: generate, run, verify, bench.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rcenter/generate.hpp"
#include "rcenter/metric.hpp"
#include "rcenter/report.hpp"
#include "rcenter/runner.hpp"

namespace {

using nlohmann::json;
using rcenter::RunConfig;

constexpr int kUsageError = 2;
constexpr int kVerifyFailed = 1;

struct GenerateArgs {
  rcenter::GenSpec spec;
  std::string layout = "blobs";
  std::string weights = "none";
  std::string out;
};

struct RunArgs {
  RunConfig config;
  std::optional<std::size_t> uniform_rank;
  std::string report_path;
  std::string csv_path;
};

struct VerifyArgs {
  std::string data;
  std::string report;
  std::string out;
  rcenter::VerifyOptions options;
};

struct BenchArgs {
  std::size_t n = 1024;
  std::size_t k = 2;
  std::uint64_t z = 2;
  std::vector<double> eps_primes{0.8, 0.4, 0.2, 0.1};
  std::vector<std::size_t> dimensions{1, 2};
  RunArgs run;
};

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return json::parse(in);
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void AddRunOptions(CLI::App* cmd, RunArgs& a) {
  RunConfig& c = a.config;
  cmd->add_option("--data", c.dataset_path, "dataset file")->required();
  cmd->add_option("--problem", c.problem, "rmc or rkc")
      ->check(CLI::IsMember({"rmc", "rkc"}));
  cmd->add_option("--mode", c.mode, "seq, mr or stream")
      ->check(CLI::IsMember({"seq", "mr", "stream"}));
  cmd->add_option("--epsilon", c.epsilon, "accuracy in (0,1)");
  cmd->add_option("--z", c.z, "number of outliers");
  cmd->add_option("--matroid", c.matroid_path, "matroid JSON file");
  cmd->add_option("--uniform", a.uniform_rank,
                  "uniform matroid of this rank instead of --matroid");
  cmd->add_option("--solver", c.solver, "exact or heuristic")
      ->check(CLI::IsMember({"exact", "heuristic"}));
  cmd->add_option("--partitions", c.partitions, "MapReduce partition count");
  cmd->add_option("--delta", c.delta, "streaming accuracy in (0,1)");
  cmd->add_option("--progression", c.progression, "double or pow")
      ->check(CLI::IsMember({"double", "pow"}));
  cmd->add_option("--eta", c.eta, "exponent for the pow progression");
  cmd->add_option("--seed", c.seed, "shuffle the stream order");
  cmd->add_option("--exact-budget", c.exact_budget,
                  "node budget of the exact coreset solver");
}

void ResolveMatroid(RunArgs& a) {
  RunConfig& c = a.config;
  if (c.problem != "rmc") return;
  if (a.uniform_rank) {
    c.matroid = {{"kind", "uniform"}, {"k", *a.uniform_rank}};
  } else if (!c.matroid_path.empty()) {
    c.matroid = ReadJsonFile(c.matroid_path);
  } else {
    throw std::invalid_argument("rmc needs --matroid or --uniform");
  }
}

void PrintSummary(const rcenter::RunReport& r) {
  std::cout << r.config.problem << " " << r.config.mode << " n=" << r.n
            << " z=" << r.config.z << " cost=" << r.solution.cost
            << " centers=" << json(r.solution.centers).dump()
            << " coreset=" << r.coreset_size;
  if (r.stats.rounds > 0) std::cout << " rounds=" << r.stats.rounds;
  if (r.stats.passes > 0) std::cout << " passes=" << r.stats.passes;
  if (r.trace) std::cout << " iterations=" << r.trace->iterations.size();
  std::cout << "\n";
}

int DoGenerate(GenerateArgs& a) {
  a.spec.layout = rcenter::ParseLayout(a.layout);
  a.spec.weights = rcenter::ParseWeightModel(a.weights);
  const rcenter::Dataset data = rcenter::Generate(a.spec);
  rcenter::SaveDataset(data, a.out);
  std::cout << "wrote " << data.size() << " points to " << a.out << "\n";
  return 0;
}

int DoRun(RunArgs& a) {
  ResolveMatroid(a);
  const rcenter::Dataset data = rcenter::LoadDataset(a.config.dataset_path);
  const rcenter::RunReport report = rcenter::Execute(data, a.config);
  PrintSummary(report);
  if (!a.report_path.empty()) {
    WriteText(a.report_path, rcenter::ToJson(report).dump(2) + "\n");
  }
  if (!a.csv_path.empty()) {
    WriteText(a.csv_path,
              rcenter::CsvHeader() + "\n" + rcenter::CsvRow(report) + "\n");
  }
  return 0;
}

int DoVerify(VerifyArgs& a) {
  const rcenter::Dataset data = rcenter::LoadDataset(a.data);
  rcenter::RunReport report = rcenter::ReportFromJson(ReadJsonFile(a.report));
  report.verdicts = rcenter::Verify(data, report, a.options);
  for (const auto& v : report.verdicts) {
    std::string status = v.status;
    for (auto& ch : status) ch = static_cast<char>(std::toupper(ch));
    std::cout << status << " " << v.criterion << ": " << v.detail << "\n";
  }
  if (!a.out.empty()) WriteText(a.out, rcenter::ToJson(report).dump(2) + "\n");
  return rcenter::AnyFailed(report.verdicts) ? kVerifyFailed : 0;
}

int DoBench(BenchArgs& a) {
  if (!a.run.config.dataset_path.empty()) {
    // Time the three execution modes on one dataset.
    ResolveMatroid(a.run);
    const rcenter::Dataset data =
        rcenter::LoadDataset(a.run.config.dataset_path);
    std::cout << rcenter::CsvHeader() << ",seconds\n";
    for (const char* mode : {"seq", "mr", "stream"}) {
      RunConfig c = a.run.config;
      c.mode = mode;
      const auto start = std::chrono::steady_clock::now();
      const rcenter::RunReport r = rcenter::Execute(data, c);
      const std::chrono::duration<double> took =
          std::chrono::steady_clock::now() - start;
      std::cout << rcenter::CsvRow(r) << "," << took.count() << "\n";
    }
    return 0;
  }
  std::cout << "dimension,eps_prime,tau,coreset_size,tau_growth\n";
  for (const std::size_t d : a.dimensions) {
    const auto trend =
        rcenter::CoresetSizeTrend(a.n, d, a.k, a.z, a.eps_primes);
    for (std::size_t i = 0; i < trend.size(); ++i) {
      std::cout << d << "," << trend[i].eps_prime << "," << trend[i].tau << ","
                << trend[i].coreset_size << ",";
      if (i > 0) {
        std::cout << static_cast<double>(trend[i].tau) /
                         static_cast<double>(trend[i - 1].tau);
      }
      std::cout << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust matroid and knapsack center solvers"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "write a synthetic dataset");
  generate->add_option("--n", gen.spec.n, "total number of points");
  generate->add_option("--dim", gen.spec.dimension, "ambient dimension");
  generate->add_option("--layout", gen.layout, "grid, blobs or cube")
      ->check(CLI::IsMember({"grid", "blobs", "cube"}));
  generate->add_option("--blobs", gen.spec.blobs, "number of blobs");
  generate->add_option("--spread", gen.spec.spread, "blob standard deviation");
  generate->add_option("--extent", gen.spec.extent, "side of the bounding cube");
  generate->add_option("--outliers", gen.spec.planted_outliers,
                       "planted outliers");
  generate->add_option("--displacement", gen.spec.displacement,
                       "outlier distance in units of spread");
  generate->add_option("--weights", gen.weights, "none, uniform or constant")
      ->check(CLI::IsMember({"none", "uniform", "constant"}));
  generate->add_option("--weight-lo", gen.spec.weight_lo,
                       "lower weight, or the constant weight");
  generate->add_option("--weight-hi", gen.spec.weight_hi, "upper weight");
  generate->add_option("--weight-quantum", gen.spec.weight_quantum,
                       "round weights to multiples of this value");
  generate->add_option("--categories", gen.spec.categories,
                       "number of point categories");
  generate->add_flag("--integer", gen.spec.integer_coordinates,
                     "round coordinates to integers");
  generate->add_flag("--l1-matrix", gen.spec.l1_matrix,
                     "write an L1 distance matrix");
  generate->add_option("--seed", gen.spec.seed, "random seed");
  generate->add_option("--out", gen.out, "output path")->required();

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "solve an instance");
  AddRunOptions(run_cmd, run);
  run_cmd->add_option("--report", run.report_path, "JSON report path");
  run_cmd->add_option("--csv", run.csv_path, "CSV summary path");

  VerifyArgs verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "check a report against exact oracles");
  verify_cmd->add_option("--data", verify.data, "dataset file")->required();
  verify_cmd->add_option("--report", verify.report, "report to check")
      ->required();
  verify_cmd->add_option("--out", verify.out, "write the report with verdicts");
  verify_cmd->add_option("--ell-suite", verify.options.ell_suite,
                         "partition counts for extra MapReduce runs")
      ->delimiter(',');
  verify_cmd->add_option("--oracle-max-n-rmc", verify.options.rmc_oracle_max_n,
                         "largest instance for the matroid oracle");
  verify_cmd->add_option("--oracle-max-n-rkc", verify.options.rkc_oracle_max_n,
                         "largest instance for the knapsack oracle");
  verify_cmd->add_option("--oracle-budget", verify.options.oracle_budget,
                         "subset budget of the oracles");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand(
      "bench", "coreset size trend, or mode timings with --data");
  bench_cmd->add_option("--n", bench.n, "grid size for the trend");
  bench_cmd->add_option("--k", bench.k, "uniform rank for the trend");
  bench_cmd->add_option("--trend-z", bench.z, "outliers for the trend");
  bench_cmd->add_option("--eps-primes", bench.eps_primes, "eps_prime values")
      ->delimiter(',');
  bench_cmd->add_option("--dims", bench.dimensions, "grid dimensions")
      ->delimiter(',');
  bench_cmd->add_option("--data", bench.run.config.dataset_path,
                        "dataset to time");
  bench_cmd->add_option("--problem", bench.run.config.problem, "rmc or rkc");
  bench_cmd->add_option("--z", bench.run.config.z, "number of outliers");
  bench_cmd->add_option("--epsilon", bench.run.config.epsilon, "accuracy");
  bench_cmd->add_option("--uniform", bench.run.uniform_rank, "uniform rank");
  bench_cmd->add_option("--matroid", bench.run.config.matroid_path,
                        "matroid JSON file");
  bench_cmd->add_option("--solver", bench.run.config.solver,
                        "exact or heuristic");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*generate) return DoGenerate(gen);
    if (*run_cmd) return DoRun(run);
    if (*verify_cmd) return DoVerify(verify);
    if (*bench_cmd) return DoBench(bench);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
