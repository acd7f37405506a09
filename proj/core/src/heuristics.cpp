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

#include "brp/heuristics.hpp"

#include <algorithm>
#include <vector>

namespace brp {
namespace {

bool has_room(const Configuration& c, int s) {
  return !c.height_limit() || c.height(s) < *c.height_limit();
}

// Destinations for block b leaving stack from, best first.
std::vector<int> ranked_destinations(const Configuration& c, Block b, int from) {
  std::vector<int> good;
  std::vector<int> bad;
  for (int s = 0; s < c.num_stacks(); ++s) {
    if (s == from || !has_room(c, s)) continue;
    (stack_priority(c, s) > b ? good : bad).push_back(s);
  }
  std::stable_sort(good.begin(), good.end(),
                   [&](int a, int z) { return stack_priority(c, a) < stack_priority(c, z); });
  std::stable_sort(bad.begin(), bad.end(),
                   [&](int a, int z) { return stack_priority(c, a) > stack_priority(c, z); });
  good.insert(good.end(), bad.begin(), bad.end());
  return good;
}

void push_retrievals(MoveSequence& seq, const RetrievalResult& r) {
  seq.moves.insert(seq.moves.end(), r.moves.begin(), r.moves.end());
}

void relocate(Configuration& c, MoveSequence& seq, Block b, int from, int to) {
  const Move m = Move::Relocate(b, from, to);
  seq.moves.push_back(m);
  RetrievalResult r = auto_retrieve(apply_move(c, m));
  push_retrievals(seq, r);
  c = std::move(r.config);
}

// Relocates every block above the target until the bay is empty.
template <typename Choose>
void finish_forced(Configuration& c, MoveSequence& seq, Choose choose) {
  while (!c.empty()) {
    const Position tp = *c.locate(c.target());
    const Block b = c.top(tp.stack);
    const std::vector<int> dests = ranked_destinations(c, b, tp.stack);
    if (dests.empty()) throw Error("no feasible destination for block " + std::to_string(b));
    relocate(c, seq, b, tp.stack, choose(c, b, tp.stack, dests));
  }
}

HeuristicSolution finish(MoveSequence seq) {
  HeuristicSolution out;
  out.relocations = seq.relocation_count();
  out.sequence = std::move(seq);
  return out;
}

}  // namespace

HeuristicSolution greedy_min_max(const Configuration& c) {
  MoveSequence seq;
  RetrievalResult r = auto_retrieve(c);
  push_retrievals(seq, r);
  Configuration cur = std::move(r.config);
  finish_forced(cur, seq, [](const Configuration&, Block, int, const std::vector<int>& d) {
    return d.front();
  });
  return finish(std::move(seq));
}

HeuristicSolution greedy_min_max(const Configuration& c, std::optional<int> height_limit) {
  return greedy_min_max(c.with_height_limit(height_limit));
}

HeuristicSolution greedy_lookahead(const Configuration& c) {
  MoveSequence seq;
  RetrievalResult r = auto_retrieve(c);
  push_retrievals(seq, r);
  Configuration cur = std::move(r.config);
  finish_forced(cur, seq,
                [](const Configuration& now, Block b, int from, const std::vector<int>& d) {
                  int best = d.front();
                  std::size_t best_bp = static_cast<std::size_t>(-1);
                  for (int to : d) {
                    const Configuration next =
                        auto_retrieve(apply_move(now, Move::Relocate(b, from, to))).config;
                    const std::size_t n = bp_set(next).size();
                    if (n < best_bp) {
                      best_bp = n;
                      best = to;
                    }
                  }
                  return best;
                });
  return finish(std::move(seq));
}

MoveSequence repair_height(const Configuration& c, const MoveSequence& seq, int h) {
  const Configuration start = c.with_height_limit(h);
  if (respects_height(start, seq, h)) {
    replay(start, seq);
    return seq;
  }
  MoveSequence out;
  RetrievalResult r = auto_retrieve(start);
  push_retrievals(out, r);
  Configuration cur = std::move(r.config);
  try {
    for (const Move& m : seq.moves) {
      if (!m.is_relocation() || !cur.contains(m.block)) continue;
      Position pos = *cur.locate(m.block);
      while (cur.top(pos.stack) != m.block) {
        const Block above = cur.top(pos.stack);
        const std::vector<int> dests = ranked_destinations(cur, above, pos.stack);
        if (dests.empty()) throw Error("no feasible destination for block " + std::to_string(above));
        relocate(cur, out, above, pos.stack, dests.front());
        if (!cur.contains(m.block)) break;
        pos = *cur.locate(m.block);
      }
      if (!cur.contains(m.block) || pos.stack == m.to) continue;
      int to = m.to;
      if (to < 0 || to >= cur.num_stacks() || !has_room(cur, to)) {
        const std::vector<int> dests = ranked_destinations(cur, m.block, pos.stack);
        if (dests.empty()) {
          throw Error("no feasible destination for block " + std::to_string(m.block));
        }
        to = dests.front();
      }
      relocate(cur, out, m.block, pos.stack, to);
    }
    finish_forced(cur, out, [](const Configuration&, Block, int, const std::vector<int>& d) {
      return d.front();
    });
  } catch (const IllegalMove& e) {
    throw Error(std::string("height repair failed: ") + e.what());
  } catch (const Error& e) {
    throw Error(std::string("height repair failed: ") + e.what());
  }
  return out;
}

MoveSequence settle_turn_heights(const Configuration& c, const MoveSequence& seq, int h) {
  MoveSequence out = seq;
  Configuration cur = c.with_height_limit(std::nullopt);
  for (std::size_t i = 0; i < out.moves.size(); ++i) {
    Move& mv = out.moves[i];
    if (mv.is_relocation() && cur.height(mv.to) >= h) {
      std::size_t until = i + 1;
      while (until < out.moves.size() && !out.moves[until].is_relocation() &&
             out.moves[until].block != mv.block) {
        ++until;
      }
      if (until == out.moves.size() || out.moves[until].is_relocation()) {
        throw Error("relocation of block " + std::to_string(mv.block) +
                    " exceeds height limit " + std::to_string(h));
      }
      int to = -1;
      for (int s = 0; s < cur.num_stacks() && to < 0; ++s) {
        const Stack& st = cur.stack(s);
        if (s == mv.from || cur.height(s) >= h) continue;
        if (std::none_of(st.begin(), st.end(), [&](Block b) { return b < mv.block; })) to = s;
      }
      if (to < 0) {
        throw Error("no stack can hold block " + std::to_string(mv.block) +
                    " until its retrieval");
      }
      mv.to = to;
      out.moves[until].from = to;
    }
    try {
      cur = apply_move(cur, mv);
    } catch (const IllegalMove& e) {
      throw IllegalMove(i, e.reason());
    }
  }
  return out;
}

}  // namespace brp
