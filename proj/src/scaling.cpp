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

// Streaming engine. Cell thresholds follow the guess: a point joins the
// nearest cell anchor within eps_prime * g / (2 + delta). When a guess is
// reseeded, the independent-set members of its cells are replayed into
// the new cells with their masses; a member the new cell rejects hands its
// mass to the nearest accepted member. Chained moves shrink geometrically
// with the ladder, so every point stays within eps_prime * rho* of every
// member of its final cell.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "rcenter/bigdata.hpp"

namespace rcenter {

namespace {

struct CenterState {
  PointId id;
  std::uint64_t count;
  PointId witness;
};

struct Cell {
  PointId anchor;
  std::unique_ptr<IncrementalIndependentSet> y;
  std::vector<std::uint64_t> mass;               // parallel to y->members()
  std::vector<std::vector<PointId>> stands_for;  // with track_proxies
};

struct Guess {
  std::size_t index = 0;
  double g = 0.0;
  double theta = 0.0;
  double cover = 0.0;
  std::vector<CenterState> centers;
  std::vector<Cell> cells;
};

}  // namespace

struct ScalingSketch::Impl {
  const DistanceOracle& oracle;
  ScalingOptions opt;
  double gamma = 0.0;
  std::size_t window = 0;
  double g0 = 0.0;
  bool buffering = true;
  Guess buffer;
  std::vector<Guess> live;  // ascending index
  double lower_bound = 0.0;
  std::uint64_t seen = 0;
  std::uint64_t high_water = 0;
  std::uint64_t evals = 0;

  Impl(const DistanceOracle& o, const ScalingOptions& options)
      : oracle(o), opt(options) {
    if (opt.target == 0) throw std::invalid_argument("target must be >= 1");
    if (!(opt.delta > 0.0 && opt.delta < 1.0)) {
      throw std::invalid_argument("delta must lie in (0,1)");
    }
    if (opt.matroid && !(opt.eps_prime > 0.0 && opt.eps_prime < 1.0)) {
      throw std::invalid_argument("eps_prime must lie in (0,1)");
    }
    if (opt.track_witnesses && !o.dataset().has_weights()) {
      throw std::invalid_argument("witness tracking needs point weights");
    }
    gamma = opt.delta / 8.0;
    window = static_cast<std::size_t>(
        std::ceil(std::log(8.0 / opt.delta) / std::log1p(gamma)));
  }

  double Dist(PointId a, PointId b) {
    ++evals;
    return oracle.raw(a, b);
  }

  double GuessAt(std::size_t index) const {
    return g0 * std::pow(1.0 + gamma, static_cast<double>(index));
  }

  bool Lighter(PointId a, PointId b) const {
    const double wa = oracle.dataset().weight(a);
    const double wb = oracle.dataset().weight(b);
    return wa < wb || (wa == wb && a < b);
  }

  void Absorb(CenterState& into, std::uint64_t count, PointId witness) {
    into.count += count;
    if (opt.track_witnesses && Lighter(witness, into.witness)) {
      into.witness = witness;
    }
  }

  // Nearest center within 2g absorbs p, otherwise p opens a center.
  // Returns the distance moved, 0 for a new center.
  double InsertCenter(Guess& guess, PointId p, std::uint64_t count,
                      PointId witness) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < guess.centers.size(); ++i) {
      const double d = Dist(p, guess.centers[i].id);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    if (best_d <= 2.0 * guess.g) {
      Absorb(guess.centers[best], count, witness);
      return best_d;
    }
    guess.centers.push_back({p, count, witness});
    return 0.0;
  }

  void InsertCell(Guess& guess, PointId p, std::uint64_t mass,
                  std::vector<PointId> stands_for) {
    Cell* target = nullptr;
    double best_d = std::numeric_limits<double>::infinity();
    for (auto& cell : guess.cells) {
      const double d = Dist(p, cell.anchor);
      if (d < best_d || (d == best_d && cell.anchor < target->anchor)) {
        best_d = d;
        target = &cell;
      }
    }
    if (target == nullptr || best_d > guess.theta) {
      Cell cell;
      cell.anchor = p;
      cell.y = opt.matroid->NewIncrementalSet();
      cell.y->TryAdd(p);  // singletons are independent
      cell.mass.push_back(mass);
      if (opt.track_proxies) cell.stands_for.push_back(std::move(stands_for));
      guess.cells.push_back(std::move(cell));
      return;
    }
    if (target->y->TryAdd(p)) {
      target->mass.push_back(mass);
      if (opt.track_proxies) target->stands_for.push_back(std::move(stands_for));
      return;
    }
    const auto& ys = target->y->members();
    std::size_t best = 0;
    double near = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < ys.size(); ++i) {
      const double d = Dist(p, ys[i]);
      if (d < near || (d == near && ys[i] < ys[best])) {
        near = d;
        best = i;
      }
    }
    target->mass[best] += mass;
    if (opt.track_proxies) {
      auto& dst = target->stands_for[best];
      dst.insert(dst.end(), stands_for.begin(), stands_for.end());
    }
  }

  Guess Reseed(const Guess& source, std::size_t index) {
    Guess guess;
    guess.index = index;
    guess.g = GuessAt(index);
    guess.theta = opt.eps_prime * guess.g / (2.0 + opt.delta);
    double moved = 0.0;
    for (const auto& c : source.centers) {
      moved = std::max(moved, InsertCenter(guess, c.id, c.count, c.witness));
    }
    guess.cover = source.cover + moved;
    if (opt.matroid) {
      for (const auto& cell : source.cells) {
        const auto& ys = cell.y->members();
        for (std::size_t i = 0; i < ys.size(); ++i) {
          InsertCell(guess, ys[i], cell.mass[i],
                     opt.track_proxies ? cell.stands_for[i]
                                       : std::vector<PointId>{});
        }
      }
    }
    return guess;
  }

  bool Overflows(const Guess& guess) const {
    return guess.centers.size() > opt.target;
  }

  void Feed(Guess& guess, PointId p) {
    guess.cover = std::max(guess.cover, InsertCenter(guess, p, 1, p));
    if (opt.matroid) InsertCell(guess, p, 1, {p});
  }

  void StartLadder() {
    double min_pair = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < buffer.centers.size(); ++i) {
      for (std::size_t j = i + 1; j < buffer.centers.size(); ++j) {
        min_pair = std::min(min_pair,
                            Dist(buffer.centers[i].id, buffer.centers[j].id));
      }
    }
    g0 = min_pair / 2.0;
    lower_bound = g0;
    for (std::size_t i = 0; i < window; ++i) live.push_back(Reseed(buffer, i));
    buffering = false;
    buffer = Guess{};
  }

  void HandleFailures() {
    while (true) {
      std::size_t failed = live.size();
      for (std::size_t i = 0; i < live.size(); ++i) {
        if (Overflows(live[i])) failed = i;
      }
      if (failed == live.size()) return;
      lower_bound = std::max(lower_bound, live[failed].g);
      std::vector<Guess> next;
      for (std::size_t i = failed + 1; i < live.size(); ++i) {
        next.push_back(std::move(live[i]));
      }
      for (std::size_t i = 0; i <= failed; ++i) {
        next.push_back(Reseed(live[i], live[i].index + window));
      }
      live = std::move(next);
    }
  }

  std::uint64_t GuessItems(const Guess& guess) const {
    std::uint64_t items = guess.centers.size() * (opt.track_witnesses ? 2 : 1);
    for (const auto& cell : guess.cells) items += cell.y->members().size();
    return items;
  }

  std::uint64_t MemoryItems() const {
    if (buffering) return GuessItems(buffer);
    std::uint64_t items = 0;
    for (const auto& guess : live) items += GuessItems(guess);
    return items;
  }

  const Guess& Best() const { return buffering ? buffer : live.front(); }
};

ScalingSketch::ScalingSketch(const DistanceOracle& oracle,
                             const ScalingOptions& options)
    : impl_(std::make_unique<Impl>(oracle, options)) {}
ScalingSketch::~ScalingSketch() = default;
ScalingSketch::ScalingSketch(ScalingSketch&&) noexcept = default;

void ScalingSketch::Add(PointId p) {
  Impl& s = *impl_;
  s.oracle.check_id(p);
  ++s.seen;
  if (s.buffering) {
    s.Feed(s.buffer, p);
    if (s.Overflows(s.buffer)) {
      s.StartLadder();
      s.HandleFailures();
    }
  } else {
    for (auto& guess : s.live) s.Feed(guess, p);
    s.HandleFailures();
  }
  s.high_water = std::max(s.high_water, s.MemoryItems());
  s.oracle.charge(s.evals);
  s.evals = 0;
}

ScalingResult ScalingSketch::Result() const {
  const Impl& s = *impl_;
  if (s.seen == 0) throw std::invalid_argument("empty stream");
  const Guess& best = s.Best();
  ScalingResult out;
  out.radius_bound = best.cover;
  out.guess = best.g;
  out.lower_bound = s.lower_bound;
  for (const auto& c : best.centers) {
    out.centers.push_back(c.id);
    if (s.opt.track_witnesses) {
      out.counts.push_back(c.count);
      out.witnesses.push_back(c.witness);
    }
  }
  return out;
}

RmcCoreset ScalingSketch::Coreset() const {
  const Impl& s = *impl_;
  if (s.opt.matroid == nullptr) {
    throw std::logic_error("sketch was built without a matroid");
  }
  if (s.seen == 0) throw std::invalid_argument("empty stream");
  const Guess& best = s.Best();
  RmcCoreset out;
  out.tau = best.cells.size();
  out.eps_prime = s.opt.eps_prime;
  out.beta = 2.0 + s.opt.delta;
  out.r_guess = best.cover;
  std::vector<std::tuple<PointId, PointId, std::size_t>> owned;
  for (std::size_t c = 0; c < best.cells.size(); ++c) {
    const Cell& cell = best.cells[c];
    const auto& ys = cell.y->members();
    out.anchors.push_back(cell.anchor);
    out.independent_sets.push_back(ys);
    for (std::size_t i = 0; i < ys.size(); ++i) {
      out.members.push_back({ys[i], cell.mass[i]});
      if (s.opt.track_proxies) {
        for (const PointId p : cell.stands_for[i]) owned.emplace_back(p, ys[i], c);
      }
    }
  }
  std::sort(out.members.begin(), out.members.end(),
            [](const auto& a, const auto& b) { return a.point < b.point; });
  std::sort(owned.begin(), owned.end());
  for (const auto& [p, proxy, cell] : owned) {
    out.points.push_back(p);
    out.proxy.push_back(proxy);
    out.cluster_of.push_back(cell);
  }
  return out;
}

std::size_t ScalingSketch::window() const { return impl_->window; }
std::size_t ScalingSketch::live_guesses() const {
  return impl_->buffering ? 1 : impl_->live.size();
}
std::uint64_t ScalingSketch::points_seen() const { return impl_->seen; }
std::uint64_t ScalingSketch::memory_items() const {
  return impl_->MemoryItems();
}
std::uint64_t ScalingSketch::memory_high_water() const {
  return impl_->high_water;
}

namespace {

void FeedPass(StreamSource& stream, ScalingSketch& sketch) {
  stream.BeginPass();
  while (const auto p = stream.Next()) sketch.Add(*p);
}

// Measures a finished solution on the whole stream. Holds every distance,
// so it is an evaluation aid and not part of the algorithm's pass budget.
double EvaluationPass(StreamSource& stream, std::span<const PointId> centers,
                      std::uint64_t z, const DistanceOracle& oracle) {
  stream.BeginPass(/*evaluation=*/true);
  std::vector<PointId> seen;
  while (const auto p = stream.Next()) seen.push_back(*p);
  return RobustCost(centers, seen, z, oracle);
}

void CopyLedger(const StreamSource& stream, ResourceStats& stats) {
  stats.mode = "stream";
  stats.passes = stream.passes();
  stats.stream_reads = stream.reads();
  stats.evaluation_passes = stream.evaluation_passes();
  stats.evaluation_reads = stream.evaluation_reads();
}

}  // namespace

ScalingOutcome StreamScalingKCenter(StreamSource& stream,
                                    const DistanceOracle& oracle,
                                    std::size_t target, double delta) {
  if (stream.size() == 0) throw std::invalid_argument("empty stream");
  const std::uint64_t evals_before = oracle.evaluations();
  ScalingOptions options;
  options.target = target;
  options.delta = delta;
  ScalingSketch sketch(oracle, options);
  FeedPass(stream, sketch);
  ScalingOutcome out;
  out.result = sketch.Result();
  out.window = sketch.window();
  CopyLedger(stream, out.stats);
  out.stats.max_local_memory_items = sketch.memory_high_water();
  out.stats.distance_evals = oracle.evaluations() - evals_before;
  return out;
}

StreamRmcOutcome StreamSolveRmc(StreamSource& stream, const RmcInstance& inst,
                                double epsilon, const RmcmSolver& solver,
                                const StreamRmcOptions& options) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0,1)");
  }
  if (stream.size() == 0) throw std::invalid_argument("empty stream");
  const DistanceOracle& oracle = *inst.oracle;
  const std::uint64_t evals_before = oracle.evaluations();
  ScalingOptions sk;
  sk.target = inst.k + inst.z;
  sk.delta = options.delta;
  sk.matroid = inst.matroid;
  sk.eps_prime = RmcEpsPrime(epsilon, solver.alpha());
  sk.track_proxies = options.track_proxies;
  ScalingSketch sketch(oracle, sk);
  FeedPass(stream, sketch);

  StreamRmcOutcome out;
  out.radius_bound = sketch.Result().radius_bound;
  out.outcome.eps_prime = sk.eps_prime;
  out.outcome.coreset = sketch.Coreset();
  out.outcome.solution = solver.Solve(out.outcome.coreset.members,
                                      *inst.matroid, inst.z, oracle);
  out.outcome.coreset_cost = out.outcome.solution.cost;
  out.outcome.solution.epsilon = epsilon;
  out.outcome.solution.cost = std::numeric_limits<double>::quiet_NaN();
  if (options.evaluate) {
    out.outcome.solution.cost =
        EvaluationPass(stream, out.outcome.solution.centers, inst.z, oracle);
  }
  CopyLedger(stream, out.stats);
  out.stats.max_local_memory_items = sketch.memory_high_water();
  out.stats.distance_evals = oracle.evaluations() - evals_before;
  return out;
}

StreamRkcOutcome StreamSolveRkc(StreamSource& stream, const RkcInstance& inst,
                                double epsilon, const RkcmSolver& solver,
                                const RkcLoopOptions& options, double delta) {
  if (stream.size() == 0) throw std::invalid_argument("empty stream");
  const DistanceOracle& oracle = *inst.oracle;
  const Dataset& data = oracle.dataset();
  const std::uint64_t evals_before = oracle.evaluations();
  StreamRkcOutcome out;
  auto step = [&](std::size_t tau) {
    ScalingOptions sk;
    sk.target = tau;
    sk.delta = delta;
    sk.track_witnesses = true;
    ScalingSketch sketch(oracle, sk);
    FeedPass(stream, sketch);
    const ScalingResult r = sketch.Result();
    out.stats.max_local_memory_items = std::max(
        out.stats.max_local_memory_items, sketch.memory_high_water());

    RkcStep s;
    s.r1 = r.radius_bound;
    s.coreset.tau = tau;
    s.coreset.r1 = s.r1;
    for (std::size_t i = 0; i < r.centers.size(); ++i) {
      s.coreset.members.push_back(
          {r.witnesses[i], data.weight(r.witnesses[i]), r.counts[i]});
    }
    std::sort(s.coreset.members.begin(), s.coreset.members.end(),
              [](const auto& a, const auto& b) { return a.point < b.point; });
    s.solution = solver.Solve(s.coreset.members, inst.z, oracle);
    s.r2 = s.solution.cost;
    return s;
  };
  out.outcome = RunRknapLoop(
      stream.size(), epsilon, solver.alpha(), options, step,
      [&](std::span<const PointId> centers) {
        return EvaluationPass(stream, centers, inst.z, oracle);
      });
  const std::uint64_t high_water = out.stats.max_local_memory_items;
  CopyLedger(stream, out.stats);
  out.stats.max_local_memory_items = high_water;
  out.stats.distance_evals = oracle.evaluations() - evals_before;
  return out;
}

}  // namespace rcenter
