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

// Lower bounds on the number of relocations.
//
// Every bound counts the badly placed blocks (one BG move each) and adds
// non-BG moves certified by structural properties of the bay:
//
//   lb1   badly placed blocks only
//   lb2   +1 when every top block is forced into a BB move
//   lb3   +k for the deepest run of k top layers that all need a non-BG move
//   lb_n  +1 when relocating the blocks above some target once cannot make
//         all of them well placed
//   lb4   +2 per overlapped layer pair, +1 per virtual layer, then lb_n's
//         test on what is left
//
// By default every bound first retrieves all exposed targets.

#ifndef BRP_BOUNDS_HPP_
#define BRP_BOUNDS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "brp/configuration.hpp"

namespace brp {

struct LayerPick {
  Block block = 0;
  int stack = -1;
  int depth = -1;

  friend bool operator==(const LayerPick&, const LayerPick&) = default;
};

// One pick per stack, ordered by stack index.
struct VirtualLayer {
  std::vector<LayerPick> picks;

  std::vector<Block> blocks() const;
  friend bool operator==(const VirtualLayer&, const VirtualLayer&) = default;
};

// Two virtual layers sharing exactly one well-placed block.
struct OverlappedLayers {
  VirtualLayer upper;
  VirtualLayer lower;
  LayerPick shared;

  // 2S-1 distinct blocks.
  std::vector<Block> blocks() const;
  friend bool operator==(const OverlappedLayers&, const OverlappedLayers&) = default;
};

// Dense membership set over block numbers.
class BlockSet {
 public:
  bool contains(Block b) const {
    return b >= 0 && static_cast<std::size_t>(b) < bits_.size() && bits_[static_cast<std::size_t>(b)];
  }
  void insert(Block b);
  void insert(const std::vector<Block>& bs) {
    for (Block b : bs) insert(b);
  }

 private:
  std::vector<bool> bits_;
};

struct BoundReport {
  std::string name;
  int value = 0;
  std::vector<Block> bp;                 // badly placed blocks
  int layers_k = 0;                      // lb3 only
  std::vector<OverlappedLayers> pairs;   // lb4 only
  std::vector<VirtualLayer> layers;      // lb4 only
  std::optional<std::vector<Block>> p4;  // blocks above the target plus each other stack's best block
  std::vector<Block> retrieved;          // blocks removed by the initial retrieval pass
};

struct BoundOptions {
  bool retrieve_first = true;
  // Keep trying later shared-block candidates after one fails instead of
  // stopping at the first failure.
  bool continue_after_failed_pair = false;
};

BoundReport lb1(const Configuration& c, const BoundOptions& options = {});
BoundReport lb2(const Configuration& c, const BoundOptions& options = {});
BoundReport lb3(const Configuration& c, const BoundOptions& options = {});
BoundReport lb_n(const Configuration& c, const BoundOptions& options = {});
BoundReport lb4(const Configuration& c, const BoundOptions& options = {});

// lb4's value alone, without building certificates. Used as a search heuristic.
int lb4_value(const Configuration& c);

struct AllBounds {
  BoundReport lb1, lb2, lb3, lb_n, lb4;
};
AllBounds all_bounds(const Configuration& c, const BoundOptions& options = {});

// Searches for a virtual layer among blocks not in `excluded`, starting from
// the topmost candidate of every stack and moving failing picks downward.
std::optional<VirtualLayer> find_virtual_layer(const Configuration& c,
                                               const BlockSet& excluded = {});

// Builds an upper and a lower layer around `shared`, a well-placed block.
std::optional<OverlappedLayers> find_overlapped_layers(const Configuration& c, Block shared,
                                                       const BlockSet& excluded = {});

// The P4 experiment for the current target of c, repeated on the residue
// after removing the target and everything above it. Returns the blocks of
// the first satisfied experiment.
std::optional<std::vector<Block>> find_p4_set(const Configuration& c);

// Certificate checks used by reports and tests.
bool layer_is_valid(const Configuration& c, const VirtualLayer& layer);
bool overlapped_is_valid(const Configuration& c, const OverlappedLayers& pair);

}  // namespace brp

#endif  // BRP_BOUNDS_HPP_
