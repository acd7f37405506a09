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


#include <chrono>
#include <string>

#include "brp/mip/backend.hpp"
#include "brp/mip/codec.hpp"
#include "brp/mip/relaxation_search.hpp"
#include "brp/oracle.hpp"

namespace brp::mip {
namespace {

using Clock = std::chrono::steady_clock;

SolveOutcome finish(const Model& m, const MoveSequence& seq, SolveStatus status,
                    Clock::time_point start) {
  SolveOutcome out;
  out.backend = "internal";
  Assignment a = encode_sequence(m, seq);
  const FeasibilityReport report = check_assignment(m, a);
  if (!report.feasible()) {
    const Violation& v = report.violations.front();
    throw BackendError("internal backend produced an assignment violating " + v.constraint +
                       " (" + v.group + ")");
  }
  out.status = status;
  out.objective = report.objective;
  if (status == SolveStatus::kOptimal) out.bound = report.objective;
  out.assignment = std::move(a);
  out.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

SolveOutcome without_assignment(SolveStatus status, std::optional<double> bound,
                                Clock::time_point start) {
  SolveOutcome out;
  out.backend = "internal";
  out.status = status;
  out.bound = bound;
  if (bound) out.objective = *bound;
  out.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

// Completes a sequence that leaves only well placed blocks.
MoveSequence with_final_retrievals(const Configuration& c, MoveSequence seq) {
  const RetrievalResult rest = auto_retrieve(replay(c, seq, std::optional<int>{}));
  seq.moves.insert(seq.moves.end(), rest.moves.begin(), rest.moves.end());
  return seq;
}

}  // namespace

SolveOutcome InternalBackend::solve(const Model& m, const Assignment* /*warm_start*/,
                                    const SolveBudget& budget) {
  const auto start = Clock::now();
  const ModelInfo& info = m.info();
  const Configuration c(info.initial, info.height);
  if (c.num_blocks() != info.blocks) throw BackendError("model metadata does not match a bay");

  SearchLimits limits;
  limits.max_blocks = std::max(limits.max_blocks, info.blocks);
  limits.height_rule = HeightRule::kTurnEnd;
  limits.node_budget = budget.nodes;
  limits.time_budget_s = budget.time_s;

  if (info.variant == Variant::kM3R) {
    const RelaxationResult r = min_blockages_after(c, info.lower_bound, limits);
    if (!r.proven) {
      return without_assignment(SolveStatus::kBudget, info.lower_bound + r.bound, start);
    }
    if (!r.feasible) return without_assignment(SolveStatus::kInfeasible, std::nullopt, start);
    if (info.height) {
      // Prefer a witness a crane can execute: same value, heights kept at
      // every move.
      SearchLimits strict = limits;
      strict.height_rule = HeightRule::kEveryMove;
      const RelaxationResult s = min_blockages_after(c, info.lower_bound, strict, r.blockages);
      if (s.proven && s.feasible) return finish(m, s.witness, SolveStatus::kOptimal, start);
    }
    return finish(m, r.witness, SolveStatus::kOptimal, start);
  }

  if (c.empty()) return finish(m, MoveSequence{}, SolveStatus::kOptimal, start);
  const OptimalResult exact = solve_exact(c, limits);
  if (!exact.proven) {
    const int n = exact.witness.relocation_count();
    if (exact.feasible && !exact.witness.moves.empty() && n >= info.lower_bound &&
        n <= info.turns) {
      return finish(m, exact.witness, SolveStatus::kBudget, start);
    }
    return without_assignment(SolveStatus::kBudget, std::nullopt, start);
  }
  if (!exact.feasible || exact.optimum > info.turns) {
    return without_assignment(SolveStatus::kInfeasible, std::nullopt, start);
  }
  if (exact.optimum >= info.lower_bound) {
    if (info.height) {
      SearchLimits strict = limits;
      strict.height_rule = HeightRule::kEveryMove;
      const OptimalResult s = solve_exact(c, strict);
      if (s.proven && s.feasible && s.optimum == exact.optimum) {
        return finish(m, s.witness, SolveStatus::kOptimal, start);
      }
    }
    return finish(m, exact.witness, SolveStatus::kOptimal, start);
  }
  // Every turn up to L must relocate, so look for the shortest padded
  // sequence that still clears the bay.
  for (int turns = info.lower_bound; turns <= info.turns; ++turns) {
    const RelaxationResult r = min_blockages_after(c, turns, limits);
    if (!r.proven) return without_assignment(SolveStatus::kBudget, std::nullopt, start);
    if (r.feasible && r.blockages == 0) {
      return finish(m, with_final_retrievals(c, r.witness), SolveStatus::kOptimal, start);
    }
  }
  return without_assignment(SolveStatus::kInfeasible, std::nullopt, start);
}

}  // namespace brp::mip
