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

#include "rcenter/runner.hpp"

#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "rcenter/bigdata.hpp"
#include "rcenter/generate.hpp"
#include "rcenter/matroid.hpp"
#include "rcenter/rkc.hpp"
#include "rcenter/rmc.hpp"

namespace rcenter {

namespace {

std::unique_ptr<RmcmSolver> MakeRmcSolver(const RunConfig& c) {
  if (c.solver == "exact") return std::make_unique<ExactRmcmSolver>(c.exact_budget);
  if (c.solver == "heuristic") return std::make_unique<LocalSearchRmcmSolver>();
  throw std::invalid_argument("unknown solver: " + c.solver);
}

std::unique_ptr<RkcmSolver> MakeRkcSolver(const RunConfig& c) {
  if (c.solver == "exact") return std::make_unique<ExactRkcmSolver>(c.exact_budget);
  if (c.solver == "heuristic") return std::make_unique<LocalSearchRkcmSolver>();
  throw std::invalid_argument("unknown solver: " + c.solver);
}

RkcLoopOptions LoopOptions(const RunConfig& c) {
  RkcLoopOptions options;
  if (c.progression == "double") {
    options.progression = Progression::Double();
  } else if (c.progression == "pow") {
    if (!(c.eta > 0.0 && c.eta < 1.0)) {
      throw std::invalid_argument("eta must lie in (0,1)");
    }
    options.progression = Progression::Pow(c.eta);
  } else {
    throw std::invalid_argument("unknown progression: " + c.progression);
  }
  return options;
}

void CheckMode(const std::string& mode) {
  if (mode != "seq" && mode != "mr" && mode != "stream") {
    throw std::invalid_argument("unknown mode: " + mode);
  }
}

void FillInstance(const Dataset& data, RunReport& r) {
  r.n = data.size();
  r.dimension = data.dimension();
  r.metric = data.kind() == MetricKind::kMatrix ? "matrix" : "euclidean";
}

RunReport ExecuteRmc(const Dataset& data, const RunConfig& c) {
  const DistanceOracle oracle(data);
  const auto matroid = MatroidFromJson(c.matroid, data);
  const RmcInstance inst = RmcInstance::Make(oracle, *matroid, c.z);
  const auto solver = MakeRmcSolver(c);
  RunReport r;
  r.config = c;
  FillInstance(data, r);
  r.rank = inst.k;
  r.alpha = solver->alpha();
  RmcOutcome outcome;
  if (c.mode == "seq") {
    outcome = SolveRmc(inst, c.epsilon, *solver);
    r.stats.mode = "seq";
  } else if (c.mode == "mr") {
    auto mr = MrSolveRmc(inst, c.epsilon, *solver, c.partitions);
    outcome = std::move(mr.outcome);
    r.stats = mr.stats;
  } else {
    StreamSource stream = StreamSource::Of(data, c.seed);
    StreamRmcOptions options;
    options.delta = c.delta;
    auto st = StreamSolveRmc(stream, inst, c.epsilon, *solver, options);
    outcome = std::move(st.outcome);
    r.stats = st.stats;
    r.radius_bound = st.radius_bound;
  }
  r.solution = outcome.solution;
  r.coreset_cost = outcome.coreset_cost;
  r.coreset_size = outcome.coreset.members.size();
  r.eps_prime = outcome.eps_prime;
  r.stats.distance_evals = oracle.evaluations();
  return r;
}

RunReport ExecuteRkc(const Dataset& data, const RunConfig& c) {
  const DistanceOracle oracle(data);
  const RkcInstance inst = RkcInstance::Make(oracle, c.z);
  const auto solver = MakeRkcSolver(c);
  const RkcLoopOptions options = LoopOptions(c);
  RunReport r;
  r.config = c;
  FillInstance(data, r);
  r.alpha = solver->alpha();
  RkcOutcome outcome;
  if (c.mode == "seq") {
    outcome = RKnapCenter(inst, c.epsilon, *solver, options);
    r.stats.mode = "seq";
  } else if (c.mode == "mr") {
    auto mr = MrSolveRkc(inst, c.epsilon, *solver, options, c.partitions);
    outcome = std::move(mr.outcome);
    r.stats = mr.stats;
  } else {
    StreamSource stream = StreamSource::Of(data, c.seed);
    auto st = StreamSolveRkc(stream, inst, c.epsilon, *solver, options, c.delta);
    outcome = std::move(st.outcome);
    r.stats = st.stats;
  }
  r.solution = outcome.solution;
  const auto& last = outcome.trace.iterations.back();
  r.coreset_cost = last.r2;
  r.coreset_size = last.coreset_size;
  r.trace = outcome.trace;
  r.stats.distance_evals = oracle.evaluations();
  return r;
}

std::string Fmt(double x) {
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

Verdict Check(const std::string& name, bool ok, const std::string& detail) {
  return {name, ok ? "pass" : "fail", detail};
}

Verdict Skip(const std::string& name, const std::string& why) {
  return {name, "skipped", why};
}

// Ratio verdicts hold only for solvers with a proven ratio.
Verdict RatioVerdict(const std::string& name, const RunConfig& c, double alpha,
                     double cost, const std::optional<double>& rstar) {
  if (!rstar) return Skip(name, "optimum over budget");
  if (c.solver != "exact") return Skip(name, "no ratio for the heuristic solver");
  const double bound = (alpha + c.epsilon) * *rstar;
  return Check(name, cost <= bound,
               "cost " + Fmt(cost) + " bound " + Fmt(bound));
}

void CommonVerdicts(const Dataset& data, const RunReport& report,
                    double recomputed,
                    const std::optional<double>& rstar,
                    std::vector<Verdict>& out) {
  const RunReport again = Execute(data, report.config);
  out.push_back(Check("reproducible",
                      again.solution.centers == report.solution.centers &&
                          again.solution.cost == report.solution.cost,
                      "rerun with the same configuration"));
  out.push_back(Check("cost", recomputed == report.solution.cost,
                      "reported " + Fmt(report.solution.cost) +
                          " recomputed " + Fmt(recomputed)));
  if (rstar) {
    out.push_back(Check("optimality", recomputed >= *rstar,
                        "cost " + Fmt(recomputed) + " optimum " + Fmt(*rstar)));
  } else {
    out.push_back(Skip("optimality", "optimum over budget"));
  }
  out.push_back(RatioVerdict("ratio", report.config, report.alpha, recomputed,
                             rstar));
}

std::vector<Verdict> VerifyRmc(const Dataset& data, const RunReport& report,
                               const VerifyOptions& options) {
  const RunConfig& c = report.config;
  const DistanceOracle oracle(data);
  const auto matroid = MatroidFromJson(c.matroid, data);
  const RmcInstance inst = RmcInstance::Make(oracle, *matroid, c.z);
  const auto points = inst.points();
  std::vector<Verdict> out;

  const auto& centers = report.solution.centers;
  out.push_back(Check("feasibility",
                      !centers.empty() && matroid->IsIndependent(centers),
                      "centers independent in the matroid"));
  const double recomputed = RobustCost(centers, points, c.z, oracle);

  std::optional<double> rstar;
  if (data.size() <= options.rmc_oracle_max_n) {
    try {
      rstar = BruteForceRmc(inst, options.oracle_budget).cost;
    } catch (const BudgetExceeded&) {
    }
  }
  CommonVerdicts(data, report, recomputed, rstar, out);

  if (!rstar) {
    for (const char* name : {"proxy-distance", "coreset-optimum", "lift"}) {
      out.push_back(Skip(name, "optimum over budget"));
    }
  } else {
    // Rebuild the coreset the run used, with proxies.
    const auto solver = MakeRmcSolver(c);
    RmcCoreset coreset;
    if (c.mode == "seq") {
      coreset = BuildRmcCoreset(points, *matroid, inst.k, c.z, report.eps_prime,
                                GonzalezAlgorithm(), oracle);
    } else if (c.mode == "mr") {
      coreset = MrSolveRmc(inst, c.epsilon, *solver, c.partitions)
                    .outcome.coreset;
    } else {
      StreamSource stream = StreamSource::Of(data, c.seed);
      StreamRmcOptions so;
      so.delta = c.delta;
      so.track_proxies = true;
      so.evaluate = false;
      coreset = StreamSolveRmc(stream, inst, c.epsilon, *solver, so)
                    .outcome.coreset;
    }
    out.push_back(Check("proxy-distance", CertifyC1(coreset, *rstar, oracle),
                        "proxy distance within eps_prime * r*"));
    if (c.solver == "exact") {
      const double bound = (1.0 + 2.0 * report.eps_prime) * *rstar;
      out.push_back(Check("coreset-optimum", report.coreset_cost <= bound,
                          "coreset optimum " + Fmt(report.coreset_cost) +
                              " bound " + Fmt(bound)));
    } else {
      out.push_back(Skip("coreset-optimum", "needs the exact coreset optimum"));
    }
    const double lift = report.coreset_cost + report.eps_prime * *rstar;
    out.push_back(Check("lift", recomputed <= lift,
                        "cost " + Fmt(recomputed) + " bound " + Fmt(lift)));
  }

  for (const std::size_t ell : options.ell_suite) {
    const auto solver = MakeRmcSolver(c);
    const auto mr = MrSolveRmc(inst, c.epsilon, *solver, ell);
    out.push_back(RatioVerdict("ratio[ell=" + std::to_string(ell) + "]", c,
                               solver->alpha(), mr.outcome.solution.cost,
                               rstar));
  }
  return out;
}

std::vector<Verdict> VerifyRkc(const Dataset& data, const RunReport& report,
                               const VerifyOptions& options) {
  const RunConfig& c = report.config;
  const DistanceOracle oracle(data);
  const RkcInstance inst = RkcInstance::Make(oracle, c.z);
  const auto points = inst.points();
  std::vector<Verdict> out;

  const auto& centers = report.solution.centers;
  const double weight = WeightOf(centers, data);
  out.push_back(Check("feasibility", !centers.empty() && weight <= 1.0,
                      "total weight " + Fmt(weight)));
  const double recomputed = RobustCost(centers, points, c.z, oracle);

  std::optional<double> rstar;
  if (data.size() <= options.rkc_oracle_max_n) {
    try {
      rstar = BruteForceRkc(inst, options.oracle_budget).solution.cost;
    } catch (const BudgetExceeded&) {
    }
  }
  CommonVerdicts(data, report, recomputed, rstar, out);

  if (!report.trace) {
    out.push_back(Check("trace", false, "report has no loop trace"));
    return out;
  }
  bool cost_ok = true;
  bool r2_ok = true;
  std::string cost_detail = "every iteration";
  std::string r2_detail = "every iteration";
  for (const auto& it : report.trace->iterations) {
    const double full = RobustCost(it.centers, points, c.z, oracle);
    if (!(full <= 2.0 * it.r1 + it.r2)) {
      cost_ok = false;
      cost_detail = "tau " + std::to_string(it.tau) + ": " + Fmt(full) +
                    " > 2 r1 + r2 = " + Fmt(2.0 * it.r1 + it.r2);
    }
    if (rstar && !(it.r2 <= report.alpha * (*rstar + 4.0 * it.r1))) {
      r2_ok = false;
      r2_detail = "tau " + std::to_string(it.tau) + ": r2 " + Fmt(it.r2);
    }
  }
  out.push_back(Check("loop-cost", cost_ok, cost_detail));
  if (!rstar) {
    out.push_back(Skip("loop-r2", "optimum over budget"));
  } else if (c.solver != "exact") {
    out.push_back(Skip("loop-r2", "needs a solver with a proven ratio"));
  } else {
    out.push_back(Check("loop-r2", r2_ok, r2_detail));
  }

  for (const std::size_t ell : options.ell_suite) {
    const auto solver = MakeRkcSolver(c);
    const auto mr = MrSolveRkc(inst, c.epsilon, *solver, LoopOptions(c), ell);
    out.push_back(RatioVerdict("ratio[ell=" + std::to_string(ell) + "]", c,
                               solver->alpha(), mr.outcome.solution.cost,
                               rstar));
  }
  return out;
}

}  // namespace

RunReport Execute(const Dataset& data, const RunConfig& config) {
  CheckMode(config.mode);
  if (!(config.epsilon > 0.0 && config.epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0,1)");
  }
  if (config.problem == "rmc") return ExecuteRmc(data, config);
  if (config.problem == "rkc") return ExecuteRkc(data, config);
  throw std::invalid_argument("unknown problem: " + config.problem);
}

std::vector<Verdict> Verify(const Dataset& data, const RunReport& report,
                            const VerifyOptions& options) {
  if (report.n != data.size()) {
    return {Check("instance", false, "report was produced for another dataset")};
  }
  if (report.config.problem == "rmc") return VerifyRmc(data, report, options);
  return VerifyRkc(data, report, options);
}

bool AnyFailed(const std::vector<Verdict>& verdicts) {
  for (const auto& v : verdicts) {
    if (v.status == "fail") return true;
  }
  return false;
}

std::vector<TrendPoint> CoresetSizeTrend(std::size_t n, std::size_t dimension,
                                         std::size_t k, std::uint64_t z,
                                         std::span<const double> eps_primes) {
  GenSpec spec;
  spec.n = n;
  spec.dimension = dimension;
  spec.layout = Layout::kGrid;
  const Dataset data = Generate(spec);
  const DistanceOracle oracle(data);
  const UniformMatroid matroid(n, k);
  const auto points = data.ids();
  std::vector<TrendPoint> out;
  for (const double eps_prime : eps_primes) {
    const RmcCoreset coreset = BuildRmcCoreset(
        points, matroid, k, z, eps_prime, GonzalezAlgorithm(), oracle);
    out.push_back({dimension, eps_prime, coreset.tau, coreset.members.size(),
                   coreset.r_guess});
  }
  return out;
}

}  // namespace rcenter
