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


#include "brp/mip/relaxation_search.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <string>
#include <unordered_map>
#include <vector>

#include "brp/bounds.hpp"

namespace brp::mip {
namespace {

using Clock = std::chrono::steady_clock;

struct Child {
  Configuration config;
  std::vector<Move> moves;
  int blockages = 0;
};

class Search {
 public:
  explicit Search(const SearchLimits& limits)
      : limits_(limits),
        deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(limits.time_budget_s))) {}

  // True when exactly r more turns can end with at most v direct blockages.
  // On success path_ holds the moves in reverse order.
  bool reach(const Configuration& c, int r, int v) {
    if (++nodes_ > limits_.node_budget || ((nodes_ & 1023) == 0 && Clock::now() > deadline_)) {
      throw BudgetExceeded("relaxation search budget exhausted");
    }
    const int b = direct_blockages(c);
    if (r == 0) return b <= v;
    if (b - r > v) return false;
    if (v == 0 && lb4_value(c) > r) return false;

    std::string key = c.canonical_key();
    key += std::to_string(r);
    const auto memo = fail_.find(key);
    if (memo != fail_.end() && memo->second >= v) return false;

    std::vector<Child> kids = children(c);
    for (Child& ch : kids) {
      if (reach(ch.config, r - 1, v)) {
        path_.insert(path_.end(), ch.moves.rbegin(), ch.moves.rend());
        return true;
      }
    }
    int& mark = fail_[key];
    mark = std::max(mark, kids.empty() ? INT_MAX : v);
    return false;
  }

  std::int64_t nodes() const { return nodes_; }
  std::vector<Move> path_;

 private:
  std::vector<Child> children(const Configuration& c) {
    std::vector<Child> out;
    const int S = c.num_stacks();
    const auto h = c.height_limit();
    for (int s = 0; s < S; ++s) {
      if (c.height(s) == 0) continue;
      const Block top = c.top(s);
      bool tried_empty = false;
      for (int d = 0; d < S; ++d) {
        if (d == s) continue;
        if (c.height(d) == 0) {
          if (c.height(s) == 1 || tried_empty) continue;
          tried_empty = true;
        }
        if (h && limits_.height_rule == HeightRule::kEveryMove && c.height(d) >= *h) continue;
        std::vector<Stack> stacks(c.stacks().begin(), c.stacks().end());
        stacks[static_cast<std::size_t>(s)].pop_back();
        stacks[static_cast<std::size_t>(d)].push_back(top);
        std::vector<Move> moves{Move::Relocate(top, s, d)};
        Block done = c.retrieved_up_to();
        while (true) {
          auto fits = [&] {
            return !h || std::all_of(stacks.begin(), stacks.end(), [&](const Stack& st) {
              return static_cast<int>(st.size()) <= *h;
            });
          };
          if (fits()) {
            Configuration next = Configuration::Trusted(stacks, h, done);
            const int b = direct_blockages(next);
            out.push_back({std::move(next), moves, b});
          }
          int at = -1;
          for (int k = 0; k < S && at < 0; ++k) {
            const Stack& st = stacks[static_cast<std::size_t>(k)];
            if (!st.empty() && st.back() == done + 1) at = k;
          }
          if (at < 0) break;
          stacks[static_cast<std::size_t>(at)].pop_back();
          ++done;
          moves.push_back(Move::Retrieve(done, at));
        }
      }
    }
    std::stable_sort(out.begin(), out.end(), [](const Child& a, const Child& b) {
      if (a.blockages != b.blockages) return a.blockages < b.blockages;
      return a.moves.size() > b.moves.size();
    });
    return out;
  }

  SearchLimits limits_;
  Clock::time_point deadline_;
  std::int64_t nodes_ = 0;
  std::unordered_map<std::string, int> fail_;
};

}  // namespace

RelaxationResult min_blockages_after(const Configuration& c, int turns,
                                     const SearchLimits& limits, std::optional<int> at_most) {
  if (turns < 0) throw Error("turn count must be non-negative");
  if (c.num_blocks() > limits.max_blocks) {
    throw Error("bay has " + std::to_string(c.num_blocks()) + " blocks, search limit is " +
                std::to_string(limits.max_blocks));
  }
  RelaxationResult res;
  Search search(limits);
  int v = std::max(0, direct_blockages(c) - turns);
  const int last = std::min(c.num_blocks(), at_most.value_or(c.num_blocks()));
  try {
    for (; v <= last; ++v) {
      if (search.reach(c, turns, v)) {
        res.feasible = true;
        res.proven = true;
        res.blockages = v;
        res.bound = v;
        res.witness.moves.assign(search.path_.rbegin(), search.path_.rend());
        break;
      }
    }
    if (!res.feasible) res.proven = true;
  } catch (const BudgetExceeded&) {
    res.proven = false;
    res.bound = v;
    res.blockages = v;
  }
  res.nodes = search.nodes();
  return res;
}

}  // namespace brp::mip
