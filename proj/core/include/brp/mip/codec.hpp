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

// Conversions between move sequences and model assignments. Sequences use
// model numbering and start from the model's initial bay.

#ifndef BRP_MIP_CODEC_HPP_
#define BRP_MIP_CODEC_HPP_

#include <string>
#include <vector>

#include "brp/mip/model.hpp"
#include "brp/moves.hpp"

namespace brp::mip {

// Sets every variable. Relocation k occupies turn k; retrievals belong to
// the turn of the preceding relocation. Throws Error when the sequence does
// not fit the horizon (more than T relocations for m3, not exactly L for
// m3R), is incomplete for m3, or retrieves before the first relocation.
Assignment encode_sequence(const Model& m, const MoveSequence& seq);

struct Violation {
  std::string constraint;  // row name, or the variable name for domain errors
  std::string group;       // e.g. "Z-2"; domains report "X-5", "X-6", "X-7", "U-3"
  double lhs = 0.0;
  double rhs = 0.0;
};

struct FeasibilityReport {
  std::vector<Violation> violations;
  double objective = 0.0;

  bool feasible() const { return violations.empty(); }
  bool violates(const std::string& group) const;
};

// Evaluates every row and variable domain. Throws Error when a variable of
// the model has no value in the assignment.
FeasibilityReport check_assignment(const Model& m, const Assignment& a, double tol = 1e-6);

// Reads the moves turn by turn. Floor placements go to the leftmost empty
// stack. Throws Error when the assignment does not describe legal moves.
MoveSequence decode_assignment(const Model& m, const Assignment& a);

}  // namespace brp::mip

#endif  // BRP_MIP_CODEC_HPP_
