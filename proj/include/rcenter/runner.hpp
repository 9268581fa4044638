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

// Experiment driver behind the command line tool.

#ifndef RCENTER_RUNNER_HPP_
#define RCENTER_RUNNER_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "rcenter/metric.hpp"
#include "rcenter/report.hpp"

namespace rcenter {

// Runs the configured pipeline. Throws std::invalid_argument on bad
// parameters or an infeasible instance.
RunReport Execute(const Dataset& data, const RunConfig& config);

struct VerifyOptions {
  std::size_t rmc_oracle_max_n = 30;
  std::size_t rkc_oracle_max_n = 20;
  std::uint64_t oracle_budget = 5'000'000;
  // Extra MapReduce runs, one ratio verdict per partition count.
  std::vector<std::size_t> ell_suite;
};

// Checks `report` against brute-force optima and coreset certificates.
// Checks that need an optimum are "skipped" when the instance is over
// budget.
std::vector<Verdict> Verify(const Dataset& data, const RunReport& report,
                            const VerifyOptions& options = {});

bool AnyFailed(const std::vector<Verdict>& verdicts);

struct TrendPoint {
  std::size_t dimension = 0;
  double eps_prime = 0.0;
  std::size_t tau = 0;           // clusters in the coreset
  std::size_t coreset_size = 0;  // |T|
  double r_guess = 0.0;
};

// Coreset size on an n-point unit grid in `dimension` axes with a uniform
// matroid of rank k, one point per entry of `eps_primes`.
std::vector<TrendPoint> CoresetSizeTrend(std::size_t n, std::size_t dimension,
                                         std::size_t k, std::uint64_t z,
                                         std::span<const double> eps_primes);

}  // namespace rcenter

#endif  // RCENTER_RUNNER_HPP_
