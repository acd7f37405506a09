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

#include "brp/moves.hpp"

#include <algorithm>

namespace brp {

std::string_view to_string(MoveType t) {
  switch (t) {
    case MoveType::kBB: return "BB";
    case MoveType::kBG: return "BG";
    case MoveType::kGB: return "GB";
    case MoveType::kGG: return "GG";
  }
  return "?";
}

int MoveSequence::relocation_count() const {
  return static_cast<int>(std::count_if(moves.begin(), moves.end(),
                                        [](const Move& m) { return m.is_relocation(); }));
}

std::vector<MoveSequence::Turn> MoveSequence::turns() const {
  std::vector<Turn> out;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (moves[i].is_relocation()) {
      if (!out.empty()) out.back().end = i;
      out.push_back({i, moves.size()});
    }
  }
  return out;
}

namespace {

std::string stack_name(int s) { return "stack " + std::to_string(s + 1); }

void check_topmost(const Configuration& c, const Move& m) {
  if (m.from < 0 || m.from >= c.num_stacks()) {
    throw IllegalMove(0, "source " + stack_name(m.from) + " does not exist");
  }
  const Block top = c.top(m.from);
  if (top != m.block) {
    if (c.contains(m.block)) {
      throw IllegalMove(0, "block " + std::to_string(m.block) + " is not topmost in " +
                               stack_name(m.from));
    }
    throw IllegalMove(0, "block " + std::to_string(m.block) + " is not in the bay");
  }
}

void check_relocation(const Configuration& c, const Move& m) {
  check_topmost(c, m);
  if (m.to < 0 || m.to >= c.num_stacks()) {
    throw IllegalMove(0, "destination " + stack_name(m.to) + " does not exist");
  }
  if (m.to == m.from) {
    throw IllegalMove(0, "relocation of block " + std::to_string(m.block) +
                             " onto its own stack");
  }
  if (c.height_limit() && c.height(m.to) >= *c.height_limit()) {
    throw IllegalMove(0, "destination " + stack_name(m.to) + " is at height limit " +
                             std::to_string(*c.height_limit()));
  }
}

}  // namespace

Configuration apply_move(const Configuration& c, const Move& m) {
  std::vector<Stack> stacks(c.stacks().begin(), c.stacks().end());
  if (m.is_relocation()) {
    check_relocation(c, m);
    stacks[static_cast<std::size_t>(m.from)].pop_back();
    stacks[static_cast<std::size_t>(m.to)].push_back(m.block);
    return Configuration::Trusted(std::move(stacks), c.height_limit(), c.retrieved_up_to());
  }
  const Block target = c.target();
  if (m.block == target && m.from >= 0 && m.from < c.num_stacks() && c.top(m.from) != target &&
      c.locate(target)->stack == m.from) {
    throw IllegalMove(0, "block " + std::to_string(c.top(m.from)) + " blocks target " +
                             std::to_string(target));
  }
  check_topmost(c, m);
  if (m.block != target) {
    throw IllegalMove(0, "block " + std::to_string(target) + " blocks target: only block " +
                             std::to_string(target) + " may be retrieved, not " +
                             std::to_string(m.block));
  }
  stacks[static_cast<std::size_t>(m.from)].pop_back();
  return Configuration::Trusted(std::move(stacks), c.height_limit(), m.block);
}

RetrievalResult auto_retrieve(const Configuration& c) {
  std::vector<Stack> stacks(c.stacks().begin(), c.stacks().end());
  RetrievalResult out;
  Block last = c.retrieved_up_to();
  for (;;) {
    Block target = 0;
    int where = -1;
    for (std::size_t s = 0; s < stacks.size(); ++s) {
      for (Block b : stacks[s]) {
        if (target == 0 || b < target) {
          target = b;
          where = static_cast<int>(s);
        }
      }
    }
    if (target == 0 || stacks[static_cast<std::size_t>(where)].back() != target) break;
    stacks[static_cast<std::size_t>(where)].pop_back();
    out.retrieved.push_back(target);
    out.moves.push_back(Move::Retrieve(target, where));
    last = target;
  }
  out.config = Configuration::Trusted(std::move(stacks), c.height_limit(), last);
  return out;
}

MoveType classify_relocation(const Configuration& c, const Move& m) {
  if (!m.is_relocation()) throw IllegalMove(0, "retrievals have no move type");
  check_relocation(c, m);
  const bool bad_before = is_badly_placed(c, m.block);
  const bool bad_after = stack_priority(c, m.to) < m.block;
  if (bad_before) return bad_after ? MoveType::kBB : MoveType::kBG;
  return bad_after ? MoveType::kGB : MoveType::kGG;
}

Configuration replay(const Configuration& c0, const MoveSequence& seq,
                     std::optional<std::optional<int>> height_override) {
  Configuration c = height_override ? c0.with_height_limit(*height_override) : c0;
  for (std::size_t i = 0; i < seq.moves.size(); ++i) {
    try {
      c = apply_move(c, seq.moves[i]);
    } catch (const IllegalMove& e) {
      throw IllegalMove(i, e.reason());
    }
  }
  return c;
}

int validate_sequence(const Configuration& c0, const MoveSequence& seq,
                      std::optional<std::optional<int>> height_override) {
  const Configuration end = replay(c0, seq, height_override);
  if (!end.empty()) {
    throw IllegalMove(seq.moves.size(), "sequence ends with " + std::to_string(end.num_blocks()) +
                                            " blocks still in the bay");
  }
  return seq.relocation_count();
}

bool respects_height(const Configuration& c0, const MoveSequence& seq, int h) {
  if (c0.max_height() > h) return false;
  try {
    replay(c0, seq, std::optional<int>(h));
  } catch (const IllegalMove&) {
    return false;
  }
  return true;
}

}  // namespace brp
