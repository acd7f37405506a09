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

#ifndef BRP_HEURISTICS_HPP_
#define BRP_HEURISTICS_HPP_

#include <optional>

#include "brp/configuration.hpp"
#include "brp/moves.hpp"

namespace brp {

struct HeuristicSolution {
  MoveSequence sequence;
  int relocations = 0;
  bool respects_height = true;
};

// Forced moves only. The block above the target goes to the stack with the
// smallest priority number above its own; failing that, to the stack with
// the largest priority number. Stacks at the height limit are skipped.
// Throws Error("no feasible destination") when every other stack is full.
HeuristicSolution greedy_min_max(const Configuration& c);
HeuristicSolution greedy_min_max(const Configuration& c, std::optional<int> height_limit);

// Same candidate order, but picks the destination leaving the fewest badly
// placed blocks after the move.
HeuristicSolution greedy_lookahead(const Configuration& c);

// Replays seq under height limit h. Relocations that would overflow are
// redirected by the greedy rule; blocks that end up covered are uncovered
// first. Whatever remains at the end is finished greedily.
MoveSequence repair_height(const Configuration& c, const MoveSequence& seq, int h);

// Sequences that satisfy h only at the end of each turn may put a block on a
// full stack and retrieve it later in the same turn. Such relocations are
// sent to another stack with room that holds no block retrieved before it.
// The relocation count is unchanged. Throws Error when a relocation cannot
// be redirected.
MoveSequence settle_turn_heights(const Configuration& c, const MoveSequence& seq, int h);

}  // namespace brp

#endif  // BRP_HEURISTICS_HPP_
