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


// Exact search for the relaxed model: exactly `turns` relocation turns,
// then count the direct blockages left in the bay.

#ifndef BRP_MIP_RELAXATION_SEARCH_HPP_
#define BRP_MIP_RELAXATION_SEARCH_HPP_

#include <cstdint>
#include <optional>

#include "brp/configuration.hpp"
#include "brp/moves.hpp"
#include "brp/oracle.hpp"

namespace brp::mip {

struct RelaxationResult {
  bool feasible = false;  // some sequence of exactly `turns` turns exists
  bool proven = false;    // false when the budget ran out
  int blockages = 0;      // best found, or the certified bound if unproven
  int bound = 0;          // certified lower bound on the blockages
  MoveSequence witness;   // exactly `turns` relocations
  std::int64_t nodes = 0;
};

// Each turn relocates one topmost block to another stack and then retrieves
// any prefix of the targets that are exposed in order. Lone blocks never
// move to an empty stack. The height limit of c, if any, is checked after
// every move or after each turn, per limits.height_rule. With at_most set,
// the search gives up (feasible = false) beyond that many blockages. Blocks
// use the numbering of c.
RelaxationResult min_blockages_after(const Configuration& c, int turns,
                                     const SearchLimits& limits = {},
                                     std::optional<int> at_most = std::nullopt);

}  // namespace brp::mip

#endif  // BRP_MIP_RELAXATION_SEARCH_HPP_
