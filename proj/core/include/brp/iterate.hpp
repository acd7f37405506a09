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


// Iterative schemes that raise a lower bound L by solving the relaxed model
// over L turns until the relaxation leaves no blockage.

#ifndef BRP_ITERATE_HPP_
#define BRP_ITERATE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "brp/configuration.hpp"
#include "brp/mip/backend.hpp"
#include "brp/oracle.hpp"

namespace brp {

struct IterationRecord {
  int iteration = 0;  // 1-based over the whole run
  int phase = 1;      // 2 for the height-limited loop of run_is_star
  int lower_bound = 0;
  double objective = 0.0;
  double time_s = 0.0;
  mip::SolveStatus status = mip::SolveStatus::kOptimal;
};

enum class IsExit {
  kNoBlockage,  // nothing to relocate
  kConverged,   // the loop ended with objective == L
  kRepaired,    // run_is_star: repaired phase-1 solution reached L
  kStopped,     // a backend call was not optimal and gave no usable bound
};

struct IterationTrace {
  std::vector<IterationRecord> records;
  MoveSequence final_sequence;
  bool proven = false;
  IsExit exit = IsExit::kStopped;
  bool phase1_exit = false;  // run_is_star returned the phase-1 solution
  int best_bound = 0;        // largest certified L

  std::string to_csv() const;  // header plus one row per record
};

struct IsOptions {
  std::optional<int> initial_bound;  // L0; lb4 when unset
  mip::SolveBudget budget;
  bool warm_start = true;
  int max_iterations = 1000;
};

struct IsResult {
  OptimalResult result;  // witness in the numbering of the input bay
  IterationTrace trace;
};

// Algorithm: L = 0, L' = L0; while L < L' { L = L'; L' = optimum of the
// relaxed model over L turns }. The witness is the last relaxed solution
// with its remaining retrievals. Heights, when given, are enforced by the
// model (at turn ends).
IsResult run_is(const Configuration& c, std::optional<int> height, mip::Backend& backend,
                const IsOptions& options = {});

// Phase 1 runs the loop without heights. Its solution is returned when it
// respects h; otherwise it is repaired, and returned if the repair needs no
// more than L relocations. Phase 2 reruns the loop with heights, starting
// from the phase-1 L.
IsResult run_is_star(const Configuration& c, int height, mip::Backend& backend,
                     const IsOptions& options = {});

}  // namespace brp

#endif  // BRP_ITERATE_HPP_
