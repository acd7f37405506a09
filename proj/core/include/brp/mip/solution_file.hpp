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

// Plain-text solver answers:
//
//   status optimal|feasible|infeasible|budget
//   objective <value>          (optional)
//   <variable> <value>         (one per line)
//
// Blank lines and lines starting with '#' are ignored.

#ifndef BRP_MIP_SOLUTION_FILE_HPP_
#define BRP_MIP_SOLUTION_FILE_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "brp/mip/model.hpp"

namespace brp::mip {

struct SolutionFile {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<double> objective;
  Assignment values;
};

// Throws ParseError with the offending line.
SolutionFile parse_solution_file(std::string_view text);
std::string write_solution_file(const SolutionFile& s);

// The values of every model variable. Throws Error naming the first
// variable the file does not mention.
Assignment assignment_from(const Model& m, const SolutionFile& s);

}  // namespace brp::mip

#endif  // BRP_MIP_SOLUTION_FILE_HPP_
