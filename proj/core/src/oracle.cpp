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

#include "brp/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "brp/bounds.hpp"
#include "brp/heuristics.hpp"

namespace brp {
namespace {

std::atomic<std::int64_t> g_restricted_calls{0};

constexpr int kUnreached = std::numeric_limits<int>::max();

struct Stop {};

struct Child {
  Configuration config;
  std::vector<Move> moves;  // relocation then retrievals
  int h = 0;
};

bool has_room(const Configuration& c, int s) {
  return !c.height_limit() || c.height(s) < *c.height_limit();
}

// Relocation followed by eager retrieval. Returns nullopt when the move is
// not allowed under `rule`.
std::optional<RetrievalResult> turn(const Configuration& c, const Move& m, HeightRule rule) {
  if (rule == HeightRule::kEveryMove || !c.height_limit()) {
    if (!has_room(c, m.to)) return std::nullopt;
    return auto_retrieve(apply_move(c, m));
  }
  const int h = *c.height_limit();
  RetrievalResult r = auto_retrieve(apply_move(c.with_height_limit(std::nullopt), m));
  if (r.config.max_height() > h) return std::nullopt;
  r.config = Configuration::Trusted(std::vector<Stack>(r.config.stacks().begin(), r.config.stacks().end()),
                                    h, r.config.retrieved_up_to());
  return r;
}

class Ida {
 public:
  Ida(const SearchLimits& limits, bool restricted)
      : limits_(limits), restricted_(restricted), start_(std::chrono::steady_clock::now()) {}

  OptimalResult run(const Configuration& c0) {
    if (c0.num_blocks() > limits_.max_blocks) {
      throw Error("instance has " + std::to_string(c0.num_blocks()) + " blocks, limit is " +
                  std::to_string(limits_.max_blocks));
    }
    RetrievalResult first = auto_retrieve(c0);
    OptimalResult out;
    std::optional<HeuristicSolution> incumbent;
    try {
      incumbent = greedy_min_max(c0);
    } catch (const Error&) {
    }

    const int h0 = lb4_value(first.config);
    int bound = h0;
    try {
      for (;;) {
        if (incumbent && bound >= incumbent->relocations) {
          out.witness = incumbent->sequence;
          out.optimum = incumbent->relocations;
          out.proven = true;
          break;
        }
        if (bound > limits_.max_depth) throw Stop{};
        seen_.clear();
        next_ = kUnreached;
        path_.clear();
        if (dfs(first.config, 0, h0, bound)) {
          out.witness.moves = first.moves;
          out.witness.moves.insert(out.witness.moves.end(), path_.begin(), path_.end());
          out.optimum = out.witness.relocation_count();
          out.proven = true;
          break;
        }
        if (next_ == kUnreached) {
          out.feasible = false;
          out.proven = true;
          break;
        }
        bound = next_;
      }
    } catch (const Stop&) {
      if (!incumbent) throw BudgetExceeded("search budget exhausted without a feasible sequence");
      out.witness = incumbent->sequence;
      out.optimum = incumbent->relocations;
      out.proven = false;
    }
    out.nodes = nodes_;
    return out;
  }

 private:
  void tick() {
    ++nodes_;
    if (nodes_ > limits_.node_budget) throw Stop{};
    if ((nodes_ & 0xfff) == 0) {
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      if (elapsed > limits_.time_budget_s) throw Stop{};
    }
  }

  std::vector<Child> children(const Configuration& c) {
    std::vector<Child> out;
    int source_only = -1;
    if (restricted_) source_only = c.locate(c.target())->stack;
    for (int s = 0; s < c.num_stacks(); ++s) {
      if (c.height(s) == 0 || (source_only >= 0 && s != source_only)) continue;
      bool empty_tried = false;
      for (int t = 0; t < c.num_stacks(); ++t) {
        if (t == s) continue;
        if (c.height(t) == 0) {
          if (empty_tried || c.height(s) == 1) continue;
          empty_tried = true;
        }
        const Move m = Move::Relocate(c.top(s), s, t);
        auto r = turn(c, m, limits_.height_rule);
        if (!r) continue;
        Child ch{std::move(r->config), {m}, 0};
        ch.moves.insert(ch.moves.end(), r->moves.begin(), r->moves.end());
        ch.h = lb4_value(ch.config);
        out.push_back(std::move(ch));
      }
    }
    std::stable_sort(out.begin(), out.end(), [](const Child& a, const Child& b) { return a.h < b.h; });
    return out;
  }

  bool dfs(const Configuration& c, int g, int h, int bound) {
    tick();
    if (c.empty()) return true;
    if (g + h > bound) {
      next_ = std::min(next_, g + h);
      return false;
    }
    auto [it, inserted] = seen_.try_emplace(c.canonical_key(), g);
    if (!inserted) {
      if (it->second <= g) return false;
      it->second = g;
    }
    for (Child& ch : children(c)) {
      const std::size_t mark = path_.size();
      path_.insert(path_.end(), ch.moves.begin(), ch.moves.end());
      if (dfs(ch.config, g + 1, ch.h, bound)) return true;
      path_.resize(mark);
    }
    return false;
  }

  SearchLimits limits_;
  bool restricted_;
  std::chrono::steady_clock::time_point start_;
  std::int64_t nodes_ = 0;
  int next_ = kUnreached;
  std::unordered_map<std::string, int> seen_;
  std::vector<Move> path_;
};

bool matches(MoveFilter f, MoveType t) {
  switch (f) {
    case MoveFilter::kAny: return true;
    case MoveFilter::kBB: return t == MoveType::kBB;
    case MoveFilter::kBG: return t == MoveType::kBG;
    case MoveFilter::kGB: return t == MoveType::kGB;
    case MoveFilter::kGG: return t == MoveType::kGG;
    case MoveFilter::kNonBG: return t != MoveType::kBG;
  }
  return false;
}

}  // namespace

OptimalResult solve_exact(const Configuration& c, const SearchLimits& limits) {
  return Ida(limits, false).run(c);
}

OptimalResult solve_restricted(const Configuration& c, const SearchLimits& limits) {
  g_restricted_calls.fetch_add(1, std::memory_order_relaxed);
  return Ida(limits, true).run(c);
}

std::int64_t restricted_call_count() { return g_restricted_calls.load(std::memory_order_relaxed); }

std::optional<int> min_moves_of_type(const Configuration& c, MoveFilter filter,
                                     const SearchLimits& limits) {
  if (c.num_blocks() > limits.max_blocks) {
    throw Error("instance has " + std::to_string(c.num_blocks()) + " blocks, limit is " +
                std::to_string(limits.max_blocks));
  }
  std::unordered_map<std::string, int> dist;
  std::deque<std::pair<Configuration, int>> queue;
  dist.emplace(c.canonical_key(), 0);
  queue.emplace_back(c, 0);
  std::int64_t nodes = 0;
  auto relax = [&](Configuration next, int d, bool front) {
    auto [it, inserted] = dist.try_emplace(next.canonical_key(), d);
    if (!inserted) {
      if (it->second <= d) return;
      it->second = d;
    }
    if (front) {
      queue.emplace_front(std::move(next), d);
    } else {
      queue.emplace_back(std::move(next), d);
    }
  };
  while (!queue.empty()) {
    auto [cur, d] = std::move(queue.front());
    queue.pop_front();
    if (dist[cur.canonical_key()] < d) continue;
    if (cur.empty()) return d;
    if (++nodes > limits.node_budget) throw BudgetExceeded("state space exceeds node budget");
    const Block target = cur.target();
    for (int s = 0; s < cur.num_stacks(); ++s) {
      if (cur.height(s) == 0) continue;
      if (cur.top(s) == target) relax(apply_move(cur, Move::Retrieve(target, s)), d, true);
      bool empty_tried = false;
      for (int t = 0; t < cur.num_stacks(); ++t) {
        if (t == s || !has_room(cur, t)) continue;
        if (cur.height(t) == 0) {
          if (empty_tried) continue;
          empty_tried = true;
        }
        const Move m = Move::Relocate(cur.top(s), s, t);
        const int cost = matches(filter, classify_relocation(cur, m)) ? 1 : 0;
        relax(apply_move(cur, m), d + cost, cost == 0);
      }
    }
  }
  return std::nullopt;
}

}  // namespace brp
