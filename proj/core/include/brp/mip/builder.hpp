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

// Adjacency-based relocation models.
//
// Blocks are 1..B and B+1 is the floor. Turn t is one relocation followed by
// retrievals; turn 0 is the initial bay. Variables:
//
//   x_i_j_t   block i rests directly on j at the end of turn t   (t >= 1)
//   ym_i_j_t  block i is lifted off j during turn t
//   yp_i_j_t  block i is put down on j during turn t
//   z_i_j_t   block i is retrieved from the top of j during turn t (j > i)
//   u_i_t     number of blocks below i at the end of turn t (only with H)
//
// The turn-0 adjacencies are constants and are folded into the right-hand
// sides.

#ifndef BRP_MIP_BUILDER_HPP_
#define BRP_MIP_BUILDER_HPP_

#include <optional>
#include <string>

#include "brp/configuration.hpp"
#include "brp/mip/model.hpp"
#include "brp/moves.hpp"

namespace brp::mip {

// Thrown by build_brp_m3r for L = 0: there are no turns, and the value is
// simply the number of direct blockages.
class DegenerateModel : public Error {
 public:
  explicit DegenerateModel(int blockages)
      : Error("degenerate L=0 model: value is the direct blockage count " +
              std::to_string(blockages)),
        blockages_(blockages) {}
  int blockages() const { return blockages_; }

 private:
  int blockages_;
};

// Requires a bay with priorities 1..B whose target is not on top. Throws
// Error otherwise, or when T < L.
Model build_brp_m3(const Configuration& c, std::optional<int> height, int lower_bound, int turns);
Model build_brp_m3r(const Configuration& c, std::optional<int> height, int lower_bound);

// Brings any bay into model form: retrieves exposed targets and renumbers
// so the next target is 1.
struct PreparedInstance {
  Configuration config;  // model numbering, no height limit
  MoveSequence prefix;   // retrievals done beforehand, original numbering
  Block offset = 0;      // original number = model number + offset
};
PreparedInstance prepare_instance(const Configuration& c);

// Maps a model-numbered sequence back to original block numbers.
MoveSequence restore_numbering(const PreparedInstance& p, const MoveSequence& model_seq);

std::string x_name(int i, int j, int t);
std::string ym_name(int i, int j, int t);
std::string yp_name(int i, int j, int t);
std::string z_name(int i, int j, int t);
std::string u_name(int i, int t);

}  // namespace brp::mip

#endif  // BRP_MIP_BUILDER_HPP_
