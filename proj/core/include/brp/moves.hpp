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

#ifndef BRP_MOVES_HPP_
#define BRP_MOVES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brp/configuration.hpp"

namespace brp {

// Stacks are 0-based in the API and 1-based in files and console output.
struct Move {
  enum class Kind { kRelocate, kRetrieve };

  Kind kind = Kind::kRetrieve;
  Block block = 0;
  int from = -1;
  int to = -1;  // unused for retrievals

  static Move Relocate(Block b, int from, int to) { return {Kind::kRelocate, b, from, to}; }
  static Move Retrieve(Block b, int from) { return {Kind::kRetrieve, b, from, -1}; }

  bool is_relocation() const { return kind == Kind::kRelocate; }

  friend bool operator==(const Move&, const Move&) = default;
};

// First letter: status before the relocation; second: after.
enum class MoveType { kBB, kBG, kGB, kGG };

std::string_view to_string(MoveType t);

class IllegalMove : public Error {
 public:
  IllegalMove(std::size_t index, std::string reason)
      : Error("move " + std::to_string(index + 1) + ": " + reason),
        index_(index),
        reason_(std::move(reason)) {}
  std::size_t index() const { return index_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t index_;
  std::string reason_;
};

struct MoveSequence {
  std::vector<Move> moves;

  int relocation_count() const;

  // Index ranges [begin, end) of each relocation turn: one relocation and
  // the retrievals that follow it. Retrievals before the first relocation
  // are not part of any turn.
  struct Turn {
    std::size_t begin;
    std::size_t end;
  };
  std::vector<Turn> turns() const;

  friend bool operator==(const MoveSequence&, const MoveSequence&) = default;
};

// Applies one move. Throws IllegalMove (index 0) naming the violated
// precondition. The height limit is taken from the configuration.
Configuration apply_move(const Configuration& c, const Move& m);

struct RetrievalResult {
  Configuration config;
  std::vector<Block> retrieved;
  std::vector<Move> moves;
};

// Retrieves targets while they are on top.
RetrievalResult auto_retrieve(const Configuration& c);

// Throws IllegalMove when the relocation is not legal in c.
MoveType classify_relocation(const Configuration& c, const Move& m);

// Replays seq from c0 under the given height limit (the configuration's own
// limit when unset) and returns the final configuration. Errors carry the
// index of the first illegal move.
Configuration replay(const Configuration& c0, const MoveSequence& seq,
                     std::optional<std::optional<int>> height_override = std::nullopt);

// Replays and additionally requires that every block is retrieved. Returns
// the relocation count.
int validate_sequence(const Configuration& c0, const MoveSequence& seq,
                      std::optional<std::optional<int>> height_override = std::nullopt);

// True when no stack ever exceeds h while replaying seq.
bool respects_height(const Configuration& c0, const MoveSequence& seq, int h);

}  // namespace brp

#endif  // BRP_MOVES_HPP_
