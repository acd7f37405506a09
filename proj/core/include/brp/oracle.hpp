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

// Exact reference solvers for small bays.

#ifndef BRP_ORACLE_HPP_
#define BRP_ORACLE_HPP_

#include <cstdint>
#include <optional>

#include "brp/configuration.hpp"
#include "brp/moves.hpp"

namespace brp {

// kEveryMove is the crane's rule: a stack never exceeds the limit. kTurnEnd
// only checks heights after each relocation and its retrievals, so a block
// may land on a full stack if it is retrieved at once.
enum class HeightRule { kEveryMove, kTurnEnd };

struct SearchLimits {
  int max_blocks = 20;
  HeightRule height_rule = HeightRule::kEveryMove;
  int max_depth = 200;
  std::int64_t node_budget = 20'000'000;
  double time_budget_s = 120.0;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

struct OptimalResult {
  int optimum = 0;       // relocations of the witness
  MoveSequence witness;  // complete sequence, retrievals included
  std::int64_t nodes = 0;
  bool proven = false;
  bool feasible = true;  // false when the height limit admits no solution
};

// Minimum relocations under the configuration's height limit. Iterative
// deepening with lb4 as the admissible estimate. On budget exhaustion the
// best known sequence is returned with proven = false. Throws Error when the
// bay exceeds limits.max_blocks.
OptimalResult solve_exact(const Configuration& c, const SearchLimits& limits = {});

// Same search restricted to relocating the block directly above the target.
OptimalResult solve_restricted(const Configuration& c, const SearchLimits& limits = {});

// Number of solve_restricted calls made by this process.
std::int64_t restricted_call_count();

enum class MoveFilter { kAny, kBB, kBG, kGB, kGG, kNonBG };

// Least number of relocations matching `filter` over all complete
// sequences. Retrievals are explicit choices, not applied eagerly. Throws
// BudgetExceeded when the state space exceeds the node budget; returns
// nullopt when no complete sequence exists.
std::optional<int> min_moves_of_type(const Configuration& c, MoveFilter filter,
                                     const SearchLimits& limits = {});

}  // namespace brp

#endif  // BRP_ORACLE_HPP_
