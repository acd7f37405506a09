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

#ifndef BRP_CONFIGURATION_HPP_
#define BRP_CONFIGURATION_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace brp {

// A block is identified by its retrieval priority: block 1 leaves first.
using Block = int;
using Stack = std::vector<Block>;  // bottom -> top

// Priority of an empty stack. Compares larger than every real priority.
inline constexpr Block kInfinitePriority = std::numeric_limits<Block>::max();

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidConfiguration : public Error {
 public:
  using Error::Error;
};

struct Position {
  int stack = -1;
  int depth = -1;  // 0 is the bottom slot

  friend bool operator==(const Position&, const Position&) = default;
};

// Immutable bay state. Stacks are listed bottom to top, priorities are
// distinct positive integers, and every present priority is larger than
// retrieved_up_to().
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<Stack> stacks,
                         std::optional<int> height_limit = std::nullopt,
                         Block retrieved_up_to = 0);

  // Skips invariant checks. For search code that derives states from an
  // already valid configuration.
  static Configuration Trusted(std::vector<Stack> stacks,
                               std::optional<int> height_limit,
                               Block retrieved_up_to);

  int num_stacks() const { return static_cast<int>(stacks_.size()); }
  int num_blocks() const;
  bool empty() const;

  std::span<const Stack> stacks() const { return stacks_; }
  const Stack& stack(int s) const { return stacks_.at(static_cast<std::size_t>(s)); }
  int height(int s) const { return static_cast<int>(stack(s).size()); }
  int max_height() const;

  // 0 when the stack is empty.
  Block top(int s) const;

  std::optional<int> height_limit() const { return height_limit_; }
  Block retrieved_up_to() const { return retrieved_up_to_; }

  // Highest-priority block still in the bay, or 0 when empty.
  Block target() const;
  std::optional<Position> locate(Block b) const;
  bool contains(Block b) const { return locate(b).has_value(); }

  // Largest block number present (0 when empty).
  Block max_block() const;

  Configuration with_height_limit(std::optional<int> h) const;

  // True iff the remaining priorities are exactly retrieved_up_to()+1 ..
  // retrieved_up_to()+num_blocks().
  bool has_contiguous_priorities() const;

  // Sorted-stack encoding; equal for configurations that differ only by a
  // permutation of stacks.
  std::string canonical_key() const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.stacks_ == b.stacks_ && a.height_limit_ == b.height_limit_ &&
           a.retrieved_up_to_ == b.retrieved_up_to_;
  }

 private:
  struct TrustedTag {};
  Configuration(TrustedTag, std::vector<Stack> stacks, std::optional<int> h, Block r)
      : stacks_(std::move(stacks)), height_limit_(h), retrieved_up_to_(r) {}

  std::vector<Stack> stacks_;
  std::optional<int> height_limit_;
  Block retrieved_up_to_ = 0;
};

// Smallest priority number in stack s, kInfinitePriority when empty.
Block stack_priority(const Configuration& c, int s);

// True iff some block below b in its stack has a smaller priority number.
// Throws Error when b is not present.
bool is_badly_placed(const Configuration& c, Block b);

// All badly placed blocks, ascending.
std::vector<Block> bp_set(const Configuration& c);

// Number of blocks resting directly on a block with a smaller number.
int direct_blockages(const Configuration& c);

// Returns a copy whose priorities are shifted so the next target is 1.
// Requires contiguous priorities.
Configuration normalized(const Configuration& c);

// Renumbers the present blocks to 1..B preserving their relative order.
Configuration renumbered(const Configuration& c);

}  // namespace brp

#endif  // BRP_CONFIGURATION_HPP_
