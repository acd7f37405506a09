// Copyright 2026 The brp-toolkit Authors.
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


#include "brp/iterate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "brp/bounds.hpp"
#include "brp/heuristics.hpp"
#include "brp/mip/builder.hpp"
#include "brp/mip/codec.hpp"

namespace brp {
namespace {

struct LoopResult {
  bool converged = false;
  bool all_optimal = true;
  int lower_bound = 0;
  MoveSequence sequence;  // model numbering, complete when converged
};

int to_int(double v) { return static_cast<int>(std::lround(v)); }

// The first `turns` relocations of a heuristic solution, with their
// retrievals.
std::optional<mip::Assignment> warm_start(const mip::Model& m, const Configuration& c,
                                          std::optional<int> height, int turns) {
  try {
    const HeuristicSolution h = greedy_min_max(c, height);
    if (h.relocations < turns) return std::nullopt;
    MoveSequence cut;
    int seen = 0;
    for (const Move& mv : h.sequence.moves) {
      if (mv.is_relocation() && ++seen > turns) break;
      cut.moves.push_back(mv);
    }
    return mip::encode_sequence(m, cut);
  } catch (const Error&) {
    return std::nullopt;
  }
}

LoopResult loop(const Configuration& mc, std::optional<int> height, int start, int phase,
                mip::Backend& backend, const IsOptions& options, IterationTrace& trace) {
  LoopResult out;
  int L = 0;
  int next = start;
  if (next == 0) {
    // The relaxation over zero turns is the blockage count itself.
    next = direct_blockages(mc);
    trace.records.push_back({static_cast<int>(trace.records.size()) + 1, phase, 0,
                             static_cast<double>(next), 0.0, mip::SolveStatus::kOptimal});
  }
  trace.best_bound = std::max(trace.best_bound, next);
  bool have = false;
  MoveSequence last;
  int rounds = 0;
  while (L < next) {
    if (++rounds > options.max_iterations) {
      out.all_optimal = false;
      break;
    }
    L = next;
    const mip::Model m = mip::build_brp_m3r(mc, height, L);
    std::optional<mip::Assignment> warm;
    if (options.warm_start) warm = warm_start(m, mc, height, L);
    const mip::SolveOutcome o = backend.solve(m, warm ? &*warm : nullptr, options.budget);
    trace.records.push_back({static_cast<int>(trace.records.size()) + 1, phase, L, o.objective,
                             o.wall_time_s, o.status});
    if (o.status == mip::SolveStatus::kOptimal && o.assignment) {
      next = to_int(o.objective);
      last = mip::decode_assignment(m, *o.assignment);
      have = true;
    } else {
      out.all_optimal = false;
      have = false;
      const int certified = o.bound ? static_cast<int>(std::ceil(*o.bound - 1e-6)) : L;
      if (certified <= L) break;
      next = certified;
    }
    trace.best_bound = std::max(trace.best_bound, next);
  }
  out.lower_bound = L;
  if (have && next == L) {
    out.converged = true;
    const RetrievalResult rest = auto_retrieve(replay(mc, last, std::optional<int>{}));
    last.moves.insert(last.moves.end(), rest.moves.begin(), rest.moves.end());
    out.sequence = std::move(last);
  }
  return out;
}

// Best effort when the loop did not converge.
OptimalResult fallback(const Configuration& c, std::optional<int> height) {
  OptimalResult r;
  r.proven = false;
  try {
    const HeuristicSolution h = greedy_min_max(c, height);
    r.witness = h.sequence;
    r.optimum = h.relocations;
  } catch (const Error&) {
    r.feasible = false;
  }
  return r;
}

OptimalResult accept(const Configuration& c, std::optional<int> height, MoveSequence seq,
                     bool proven) {
  OptimalResult r;
  r.witness = std::move(seq);
  r.optimum = r.witness.relocation_count();
  r.proven = proven;
  if (height && !respects_height(c.with_height_limit(std::nullopt), r.witness, *height)) {
    // The model checks heights at turn ends only.
    try {
      r.witness = settle_turn_heights(c, r.witness, *height);
    } catch (const Error&) {
      r.proven = false;
      r.feasible = false;
      return r;
    }
  }
  validate_sequence(c, r.witness, height);
  return r;
}

void check_height(const Configuration& c, std::optional<int> height) {
  if (height && *height < c.max_height()) {
    throw Error("height limit " + std::to_string(*height) + " is below the current height " +
                std::to_string(c.max_height()));
  }
}

}  // namespace

std::string IterationTrace::to_csv() const {
  std::ostringstream out;
  out << "iteration,phase,L,objective,time_s,status\n";
  for (const IterationRecord& r : records) {
    out << r.iteration << ',' << r.phase << ',' << r.lower_bound << ',' << r.objective << ','
        << r.time_s << ',' << mip::to_string(r.status) << '\n';
  }
  return out.str();
}

IsResult run_is(const Configuration& c, std::optional<int> height, mip::Backend& backend,
                const IsOptions& options) {
  check_height(c, height);
  IsResult res;
  const mip::PreparedInstance p = mip::prepare_instance(c);
  if (bp_set(p.config).empty()) {
    res.trace.exit = IsExit::kNoBlockage;
    res.trace.proven = true;
    res.trace.final_sequence = p.prefix;
    res.result = accept(c, height, p.prefix, true);
    return res;
  }
  const int start = options.initial_bound.value_or(lb4_value(p.config));
  const LoopResult lr = loop(p.config, height, start, 1, backend, options, res.trace);
  if (!lr.converged) {
    res.trace.exit = IsExit::kStopped;
    res.result = fallback(c, height);
    return res;
  }
  res.trace.exit = IsExit::kConverged;
  res.result = accept(c, height, mip::restore_numbering(p, lr.sequence), lr.all_optimal);
  res.trace.final_sequence = res.result.witness;
  res.trace.proven = res.result.proven;
  return res;
}

IsResult run_is_star(const Configuration& c, int height, mip::Backend& backend,
                     const IsOptions& options) {
  check_height(c, height);
  IsResult res;
  const mip::PreparedInstance p = mip::prepare_instance(c);
  if (bp_set(p.config).empty()) {
    res.trace.exit = IsExit::kNoBlockage;
    res.trace.proven = true;
    res.trace.phase1_exit = true;
    res.trace.final_sequence = p.prefix;
    res.result = accept(c, height, p.prefix, true);
    return res;
  }
  const int start = options.initial_bound.value_or(lb4_value(p.config));
  const LoopResult first = loop(p.config, std::nullopt, start, 1, backend, options, res.trace);
  if (!first.converged) {
    res.trace.exit = IsExit::kStopped;
    res.result = fallback(c, height);
    return res;
  }
  const MoveSequence sln1 = mip::restore_numbering(p, first.sequence);
  const Configuration free = c.with_height_limit(std::nullopt);
  if (respects_height(free, sln1, height)) {
    res.trace.exit = IsExit::kConverged;
    res.trace.phase1_exit = true;
    res.result = accept(c, height, sln1, first.all_optimal);
    res.trace.final_sequence = res.result.witness;
    res.trace.proven = res.result.proven;
    return res;
  }
  try {
    const MoveSequence sln2 = repair_height(free, sln1, height);
    if (sln2.relocation_count() == first.lower_bound) {
      res.trace.exit = IsExit::kRepaired;
      res.result = accept(c, height, sln2, first.all_optimal);
      res.trace.final_sequence = res.result.witness;
      res.trace.proven = res.result.proven;
      return res;
    }
  } catch (const Error&) {
    // Falls through to the height-limited loop.
  }
  const LoopResult second =
      loop(p.config, height, first.lower_bound, 2, backend, options, res.trace);
  if (!second.converged) {
    res.trace.exit = IsExit::kStopped;
    res.result = fallback(c, height);
    return res;
  }
  res.trace.exit = IsExit::kConverged;
  res.result = accept(c, height, mip::restore_numbering(p, second.sequence),
                      first.all_optimal && second.all_optimal);
  res.trace.final_sequence = res.result.witness;
  res.trace.proven = res.result.proven;
  return res;
}

}  // namespace brp
