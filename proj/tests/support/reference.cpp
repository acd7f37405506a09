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


#include "support/reference.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace brp_test {
namespace {

int smallest(const Bay& bay) {
  int m = INT_MAX;
  for (const auto& s : bay) {
    for (int b : s) m = std::min(m, b);
  }
  return m;
}

void retrieve_all(Bay& bay) {
  for (;;) {
    const int t = smallest(bay);
    bool done = false;
    for (auto& s : bay) {
      if (!s.empty() && s.back() == t) {
        s.pop_back();
        done = true;
        break;
      }
    }
    if (!done) return;
  }
}

Bay sorted(Bay bay) {
  std::sort(bay.begin(), bay.end());
  return bay;
}

bool empty_bay(const Bay& bay) {
  return std::all_of(bay.begin(), bay.end(), [](const auto& s) { return s.empty(); });
}

bool fits(const Bay& bay, int h) {
  if (h <= 0) return true;
  return std::all_of(bay.begin(), bay.end(), [&](const auto& s) { return static_cast<int>(s.size()) <= h; });
}

int breadth_first(const Bay& start, int h, bool restricted) {
  Bay first = start;
  retrieve_all(first);
  std::set<Bay> seen{sorted(first)};
  std::vector<Bay> layer{first};
  for (int depth = 0; !layer.empty(); ++depth) {
    std::vector<Bay> next;
    for (const Bay& bay : layer) {
      if (empty_bay(bay)) return depth;
      const int target = smallest(bay);
      for (std::size_t s = 0; s < bay.size(); ++s) {
        if (bay[s].empty()) continue;
        if (restricted) {
          const bool holds_target = std::find(bay[s].begin(), bay[s].end(), target) != bay[s].end();
          if (!holds_target || bay[s].back() == target) continue;
        }
        for (std::size_t d = 0; d < bay.size(); ++d) {
          if (d == s) continue;
          Bay child = bay;
          child[d].push_back(child[s].back());
          child[s].pop_back();
          if (!fits(child, h)) continue;
          retrieve_all(child);
          if (seen.insert(sorted(child)).second) next.push_back(std::move(child));
        }
      }
    }
    layer = std::move(next);
  }
  return -1;
}

int exhaustive(const Bay& bay, int turns, int h, std::map<std::pair<Bay, int>, int>& memo) {
  if (turns == 0) return count_direct_blockages(bay);
  const auto key = std::make_pair(sorted(bay), turns);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  int best = -1;
  for (std::size_t s = 0; s < bay.size(); ++s) {
    if (bay[s].empty()) continue;
    for (std::size_t d = 0; d < bay.size(); ++d) {
      if (d == s || (bay[d].empty() && bay[s].size() == 1)) continue;
      Bay child = bay;
      child[d].push_back(child[s].back());
      child[s].pop_back();
      for (;;) {
        if (fits(child, h)) {
          const int v = exhaustive(child, turns - 1, h, memo);
          if (v >= 0 && (best < 0 || v < best)) best = v;
        }
        const int t = smallest(child);
        auto on_top = std::find_if(child.begin(), child.end(),
                                   [&](const auto& st) { return !st.empty() && st.back() == t; });
        if (on_top == child.end()) break;
        on_top->pop_back();
      }
    }
  }
  memo[key] = best;
  return best;
}

}  // namespace

Bay bay_of(const brp::Configuration& c) {
  Bay bay;
  for (const auto& s : c.stacks()) bay.emplace_back(s.begin(), s.end());
  return bay;
}

brp::Configuration random_bay(std::mt19937& rng, int h, int w, int empty) {
  std::vector<int> p(static_cast<std::size_t>(h * w));
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<brp::Stack> stacks(static_cast<std::size_t>(w + empty));
  for (std::size_t i = 0; i < p.size(); ++i) stacks[i / static_cast<std::size_t>(h)].push_back(p[i]);
  return brp::Configuration(stacks);
}

int count_bp(const Bay& bay) {
  int n = 0;
  for (const auto& s : bay) {
    int low = INT_MAX;
    for (int b : s) {
      if (b > low) ++n;
      low = std::min(low, b);
    }
  }
  return n;
}

int count_direct_blockages(const Bay& bay) {
  int n = 0;
  for (const auto& s : bay) {
    for (std::size_t i = 1; i < s.size(); ++i) n += s[i] > s[i - 1];
  }
  return n;
}

int reference_optimum(const Bay& bay, int h) { return breadth_first(bay, h, false); }

int reference_restricted_optimum(const Bay& bay, int h) { return breadth_first(bay, h, true); }

int reference_min_blockages(const Bay& bay, int turns, int h) {
  std::map<std::pair<Bay, int>, int> memo;
  return exhaustive(bay, turns, h, memo);
}

}  // namespace brp_test
