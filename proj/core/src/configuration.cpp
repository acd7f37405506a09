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

#include "brp/configuration.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace brp {

Configuration::Configuration(std::vector<Stack> stacks, std::optional<int> height_limit,
                             Block retrieved_up_to)
    : stacks_(std::move(stacks)),
      height_limit_(height_limit),
      retrieved_up_to_(retrieved_up_to) {
  if (retrieved_up_to_ < 0) {
    throw InvalidConfiguration("retrieved_up_to must be non-negative");
  }
  if (height_limit_ && *height_limit_ <= 0) {
    throw InvalidConfiguration("height limit must be positive");
  }
  std::unordered_set<Block> seen;
  for (std::size_t s = 0; s < stacks_.size(); ++s) {
    if (height_limit_ && static_cast<int>(stacks_[s].size()) > *height_limit_) {
      throw InvalidConfiguration("stack " + std::to_string(s + 1) + " exceeds height limit " +
                                 std::to_string(*height_limit_));
    }
    for (Block b : stacks_[s]) {
      if (b <= 0) {
        throw InvalidConfiguration("priority " + std::to_string(b) + " is not positive");
      }
      if (b <= retrieved_up_to_) {
        throw InvalidConfiguration("block " + std::to_string(b) +
                                   " is present but already retrieved");
      }
      if (!seen.insert(b).second) {
        throw InvalidConfiguration("duplicate priority " + std::to_string(b));
      }
    }
  }
}

Configuration Configuration::Trusted(std::vector<Stack> stacks, std::optional<int> height_limit,
                                     Block retrieved_up_to) {
  return Configuration(TrustedTag{}, std::move(stacks), height_limit, retrieved_up_to);
}

int Configuration::num_blocks() const {
  int n = 0;
  for (const Stack& s : stacks_) n += static_cast<int>(s.size());
  return n;
}

bool Configuration::empty() const {
  return std::all_of(stacks_.begin(), stacks_.end(), [](const Stack& s) { return s.empty(); });
}

int Configuration::max_height() const {
  int h = 0;
  for (const Stack& s : stacks_) h = std::max(h, static_cast<int>(s.size()));
  return h;
}

Block Configuration::top(int s) const {
  const Stack& st = stack(s);
  return st.empty() ? 0 : st.back();
}

Block Configuration::target() const {
  Block best = 0;
  for (const Stack& s : stacks_) {
    for (Block b : s) {
      if (best == 0 || b < best) best = b;
    }
  }
  return best;
}

std::optional<Position> Configuration::locate(Block b) const {
  for (std::size_t s = 0; s < stacks_.size(); ++s) {
    const Stack& st = stacks_[s];
    for (std::size_t d = 0; d < st.size(); ++d) {
      if (st[d] == b) return Position{static_cast<int>(s), static_cast<int>(d)};
    }
  }
  return std::nullopt;
}

Block Configuration::max_block() const {
  Block m = 0;
  for (const Stack& s : stacks_) {
    for (Block b : s) m = std::max(m, b);
  }
  return m;
}

Configuration Configuration::with_height_limit(std::optional<int> h) const {
  return Configuration(stacks_, h, retrieved_up_to_);
}

bool Configuration::has_contiguous_priorities() const {
  const int n = num_blocks();
  return n == 0 || (target() == retrieved_up_to_ + 1 && max_block() == retrieved_up_to_ + n);
}

std::string Configuration::canonical_key() const {
  std::vector<const Stack*> order;
  order.reserve(stacks_.size());
  for (const Stack& s : stacks_) order.push_back(&s);
  std::sort(order.begin(), order.end(), [](const Stack* a, const Stack* b) { return *a < *b; });
  std::string key;
  key.reserve(static_cast<std::size_t>(num_blocks()) * 2 + stacks_.size());
  for (const Stack* s : order) {
    for (Block b : *s) {
      // Two bytes per block keeps the key unambiguous up to 65535 blocks.
      key.push_back(static_cast<char>(b & 0xff));
      key.push_back(static_cast<char>((b >> 8) & 0xff));
    }
    key.push_back('\xff');
    key.push_back('\xff');
  }
  return key;
}

Block stack_priority(const Configuration& c, int s) {
  const Stack& st = c.stack(s);
  if (st.empty()) return kInfinitePriority;
  return *std::min_element(st.begin(), st.end());
}

bool is_badly_placed(const Configuration& c, Block b) {
  const auto pos = c.locate(b);
  if (!pos) throw Error("unknown block " + std::to_string(b));
  const Stack& st = c.stack(pos->stack);
  for (int d = 0; d < pos->depth; ++d) {
    if (st[static_cast<std::size_t>(d)] < b) return true;
  }
  return false;
}

std::vector<Block> bp_set(const Configuration& c) {
  std::vector<Block> out;
  for (const Stack& st : c.stacks()) {
    Block lowest = kInfinitePriority;
    for (Block b : st) {
      if (b > lowest) out.push_back(b);
      lowest = std::min(lowest, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int direct_blockages(const Configuration& c) {
  int n = 0;
  for (const Stack& st : c.stacks()) {
    for (std::size_t d = 1; d < st.size(); ++d) {
      if (st[d] > st[d - 1]) ++n;
    }
  }
  return n;
}

Configuration normalized(const Configuration& c) {
  if (!c.has_contiguous_priorities()) {
    throw InvalidConfiguration("priorities are not contiguous");
  }
  const Block shift = c.retrieved_up_to();
  std::vector<Stack> stacks(c.stacks().begin(), c.stacks().end());
  for (Stack& st : stacks) {
    for (Block& b : st) b -= shift;
  }
  return Configuration(std::move(stacks), c.height_limit(), 0);
}

Configuration renumbered(const Configuration& c) {
  std::vector<Block> all;
  for (const Stack& st : c.stacks()) all.insert(all.end(), st.begin(), st.end());
  std::sort(all.begin(), all.end());
  std::vector<Stack> stacks(c.stacks().begin(), c.stacks().end());
  for (Stack& st : stacks) {
    for (Block& b : st) {
      b = static_cast<Block>(std::lower_bound(all.begin(), all.end(), b) - all.begin()) + 1;
    }
  }
  return Configuration(std::move(stacks), c.height_limit(), 0);
}

}  // namespace brp
