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

#include "brp/bounds.hpp"

#include <algorithm>

#include "brp/moves.hpp"

namespace brp {

std::vector<Block> VirtualLayer::blocks() const {
  std::vector<Block> out;
  out.reserve(picks.size());
  for (const LayerPick& p : picks) out.push_back(p.block);
  return out;
}

std::vector<Block> OverlappedLayers::blocks() const {
  std::vector<Block> out = upper.blocks();
  for (const LayerPick& p : lower.picks) {
    if (p.block != shared.block) out.push_back(p.block);
  }
  return out;
}

void BlockSet::insert(Block b) {
  if (b < 0) return;
  if (static_cast<std::size_t>(b) >= bits_.size()) bits_.resize(static_cast<std::size_t>(b) + 1);
  bits_[static_cast<std::size_t>(b)] = true;
}

namespace {

constexpr int kNone = -1;

// Per-slot minima: below[s][d] over depths < d, at_or_below[s][d] over <= d.
struct Tables {
  std::vector<std::vector<Block>> below;
  std::vector<std::vector<Block>> at_or_below;

  explicit Tables(const Configuration& c) {
    below.resize(static_cast<std::size_t>(c.num_stacks()));
    at_or_below.resize(below.size());
    for (int s = 0; s < c.num_stacks(); ++s) {
      const Stack& st = c.stack(s);
      auto& bl = below[static_cast<std::size_t>(s)];
      auto& ab = at_or_below[static_cast<std::size_t>(s)];
      bl.resize(st.size());
      ab.resize(st.size());
      Block m = kInfinitePriority;
      for (std::size_t d = 0; d < st.size(); ++d) {
        bl[d] = m;
        m = std::min(m, st[d]);
        ab[d] = m;
      }
    }
  }

  bool well_placed(const Configuration& c, int s, int d) const {
    return c.stack(s)[static_cast<std::size_t>(d)] < below[static_cast<std::size_t>(s)][static_cast<std::size_t>(d)];
  }
};

struct LayerQuery {
  const BlockSet* excluded = nullptr;
  std::vector<int> limit;  // picks must sit strictly below this depth
  int fixed_stack = kNone;
  int fixed_depth = kNone;
};

int next_free(const Configuration& c, const BlockSet& excluded, int s, int below_depth) {
  const Stack& st = c.stack(s);
  for (int d = std::min(below_depth, static_cast<int>(st.size())) - 1; d >= 0; --d) {
    if (!excluded.contains(st[static_cast<std::size_t>(d)])) return d;
  }
  return kNone;
}

struct LayerState {
  std::vector<int> depth;
  Block below_min = kInfinitePriority;   // best priority strictly under the layer
  Block after_max = 0;                   // worst stack priority once the blocks above are gone
};

void summarize(const Tables& t, LayerState& st) {
  st.below_min = kInfinitePriority;
  st.after_max = 0;
  for (std::size_t s = 0; s < st.depth.size(); ++s) {
    const auto d = static_cast<std::size_t>(st.depth[s]);
    st.below_min = std::min(st.below_min, t.below[s][d]);
    st.after_max = std::max(st.after_max, t.at_or_below[s][d]);
  }
}

bool pick_ok(const Configuration& c, const Tables& t, const LayerState& st, int s) {
  const int d = st.depth[static_cast<std::size_t>(s)];
  const Block b = c.stack(s)[static_cast<std::size_t>(d)];
  return t.well_placed(c, s, d) ? b > st.below_min : b > st.after_max;
}

std::optional<LayerState> search_layer(const Configuration& c, const Tables& t,
                                       const LayerQuery& q) {
  const int n = c.num_stacks();
  LayerState st;
  st.depth.assign(static_cast<std::size_t>(n), kNone);
  for (int s = 0; s < n; ++s) {
    if (s == q.fixed_stack) {
      st.depth[static_cast<std::size_t>(s)] = q.fixed_depth;
      continue;
    }
    const int d = next_free(c, *q.excluded, s, q.limit[static_cast<std::size_t>(s)]);
    if (d == kNone) return std::nullopt;
    st.depth[static_cast<std::size_t>(s)] = d;
  }
  for (;;) {
    summarize(t, st);
    bool found = true;
    for (int s = 0; s < n; ++s) {
      if (pick_ok(c, t, st, s)) continue;
      if (s == q.fixed_stack) return std::nullopt;
      const int d = next_free(c, *q.excluded, s, st.depth[static_cast<std::size_t>(s)]);
      if (d == kNone) return std::nullopt;
      st.depth[static_cast<std::size_t>(s)] = d;
      found = false;
      break;
    }
    if (found) return st;
  }
}

VirtualLayer to_layer(const Configuration& c, const LayerState& st) {
  VirtualLayer layer;
  for (int s = 0; s < c.num_stacks(); ++s) {
    const int d = st.depth[static_cast<std::size_t>(s)];
    layer.picks.push_back({c.stack(s)[static_cast<std::size_t>(d)], s, d});
  }
  return layer;
}

std::vector<int> full_limits(const Configuration& c) {
  std::vector<int> limit;
  for (int s = 0; s < c.num_stacks(); ++s) limit.push_back(c.height(s));
  return limit;
}

std::optional<OverlappedLayers> overlapped_at(const Configuration& c, const Tables& t,
                                              const BlockSet& excluded, int s, int d) {
  if (!t.well_placed(c, s, d)) return std::nullopt;
  const Block w = c.stack(s)[static_cast<std::size_t>(d)];
  LayerQuery q{&excluded, full_limits(c), s, d};
  const auto upper = search_layer(c, t, q);
  if (!upper || upper->after_max != w) return std::nullopt;
  q.limit = upper->depth;
  q.limit[static_cast<std::size_t>(s)] = c.height(s);
  const auto lower = search_layer(c, t, q);
  if (!lower) return std::nullopt;
  return OverlappedLayers{to_layer(c, *upper), to_layer(c, *lower), LayerPick{w, s, d}};
}

// Shared-block candidates: well-placed blocks whose number exceeds every
// other stack's priority, ascending.
std::vector<Position> pair_candidates(const Configuration& c, const Tables& t) {
  const int n = c.num_stacks();
  std::vector<Block> prio(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) prio[static_cast<std::size_t>(s)] = stack_priority(c, s);
  std::vector<std::pair<Block, Position>> cands;
  for (int s = 0; s < n; ++s) {
    Block others = 0;
    for (int r = 0; r < n; ++r) {
      if (r != s) others = std::max(others, prio[static_cast<std::size_t>(r)]);
    }
    for (int d = 0; d < c.height(s); ++d) {
      const Block b = c.stack(s)[static_cast<std::size_t>(d)];
      if (t.well_placed(c, s, d) && b > others) cands.push_back({b, Position{s, d}});
    }
  }
  std::sort(cands.begin(), cands.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Position> out;
  for (const auto& [b, pos] : cands) out.push_back(pos);
  return out;
}

std::optional<std::vector<Block>> p4_experiment(std::vector<Stack> stacks) {
  const auto n = stacks.size();
  for (;;) {
    Block target = kInfinitePriority;
    std::size_t ts = 0;
    std::size_t td = 0;
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t d = 0; d < stacks[s].size(); ++d) {
        if (stacks[s][d] < target) {
          target = stacks[s][d];
          ts = s;
          td = d;
        }
      }
    }
    if (target == kInfinitePriority) return std::nullopt;
    const Stack& home = stacks[ts];
    std::vector<Block> prio(n, kInfinitePriority);
    for (std::size_t s = 0; s < n; ++s) {
      if (s == ts) continue;
      for (Block b : stacks[s]) prio[s] = std::min(prio[s], b);
    }
    const std::vector<Block> original_prio = prio;
    bool holds = false;
    for (std::size_t d = home.size(); d-- > td + 1;) {
      const Block b = home[d];
      std::size_t best = n;
      for (std::size_t s = 0; s < n; ++s) {
        if (s == ts || prio[s] <= b) continue;
        if (best == n || prio[s] < prio[best]) best = s;
      }
      if (best == n) {
        holds = true;
        break;
      }
      prio[best] = b;
    }
    if (holds) {
      std::vector<Block> set(home.begin() + static_cast<std::ptrdiff_t>(td) + 1, home.end());
      for (std::size_t s = 0; s < n; ++s) {
        if (s != ts && original_prio[s] != kInfinitePriority) set.push_back(original_prio[s]);
      }
      return set;
    }
    stacks[ts].resize(td);
  }
}

struct Prepared {
  Configuration config;
  std::vector<Block> retrieved;
};

Prepared prepare(const Configuration& c, const BoundOptions& options) {
  if (!options.retrieve_first) return {c, {}};
  RetrievalResult r = auto_retrieve(c);
  return {std::move(r.config), std::move(r.retrieved)};
}

BoundReport base_report(const char* name, const Prepared& p) {
  BoundReport r;
  r.name = name;
  r.bp = bp_set(p.config);
  r.value = static_cast<int>(r.bp.size());
  r.retrieved = p.retrieved;
  return r;
}

Block max_stack_priority(const Configuration& c) {
  Block m = 0;
  for (int s = 0; s < c.num_stacks(); ++s) m = std::max(m, stack_priority(c, s));
  return m;
}

struct Lb4Parts {
  std::vector<OverlappedLayers> pairs;
  std::vector<VirtualLayer> layers;
  std::optional<std::vector<Block>> p4;
};

Lb4Parts lb4_parts(const Configuration& c, bool continue_after_failure) {
  Lb4Parts parts;
  if (c.empty()) return parts;
  const Tables t(c);
  BlockSet excluded;
  std::vector<int> lowest(static_cast<std::size_t>(c.num_stacks()), kNone);
  auto mark = [&](const VirtualLayer& layer) {
    for (const LayerPick& p : layer.picks) {
      excluded.insert(p.block);
      int& low = lowest[static_cast<std::size_t>(p.stack)];
      low = low == kNone ? p.depth : std::min(low, p.depth);
    }
  };

  for (const Position& pos : pair_candidates(c, t)) {
    if (excluded.contains(c.stack(pos.stack)[static_cast<std::size_t>(pos.depth)])) continue;
    auto pair = overlapped_at(c, t, excluded, pos.stack, pos.depth);
    if (!pair) {
      if (continue_after_failure) continue;
      break;
    }
    mark(pair->upper);
    mark(pair->lower);
    parts.pairs.push_back(std::move(*pair));
  }

  const LayerQuery q{&excluded, full_limits(c), kNone, kNone};
  while (auto st = search_layer(c, t, q)) {
    VirtualLayer layer = to_layer(c, *st);
    mark(layer);
    parts.layers.push_back(std::move(layer));
  }

  std::vector<Stack> residue(c.stacks().begin(), c.stacks().end());
  for (std::size_t s = 0; s < residue.size(); ++s) {
    if (lowest[s] != kNone) residue[s].resize(static_cast<std::size_t>(lowest[s]));
  }
  parts.p4 = p4_experiment(std::move(residue));
  return parts;
}

}  // namespace

BoundReport lb1(const Configuration& c, const BoundOptions& options) {
  return base_report("LB1", prepare(c, options));
}

BoundReport lb2(const Configuration& c, const BoundOptions& options) {
  const Prepared p = prepare(c, options);
  BoundReport r = base_report("LB2", p);
  if (p.config.empty()) return r;
  Block top_min = kInfinitePriority;
  for (int s = 0; s < p.config.num_stacks(); ++s) {
    if (p.config.height(s) == 0) return r;
    top_min = std::min(top_min, p.config.top(s));
  }
  if (top_min > max_stack_priority(p.config)) ++r.value;
  return r;
}

BoundReport lb3(const Configuration& c, const BoundOptions& options) {
  const Prepared p = prepare(c, options);
  BoundReport r = base_report("LB3", p);
  const Configuration& cc = p.config;
  if (cc.empty()) return r;
  const auto tpos = *cc.locate(cc.target());
  const int above_target = cc.height(tpos.stack) - tpos.depth - 1;
  int min_height = kInfinitePriority;
  for (int s = 0; s < cc.num_stacks(); ++s) min_height = std::min(min_height, cc.height(s));
  const int kmax = std::min(above_target, min_height);
  const Tables t(cc);
  Block bp_min = kInfinitePriority;
  for (int k = 1; k <= kmax; ++k) {
    Block after_max = 0;
    for (int s = 0; s < cc.num_stacks(); ++s) {
      const int d = cc.height(s) - k;
      if (!t.well_placed(cc, s, d)) bp_min = std::min(bp_min, cc.stack(s)[static_cast<std::size_t>(d)]);
      // Removing the top k-1 layers leaves depth d as the new top.
      after_max = std::max(after_max, t.at_or_below[static_cast<std::size_t>(s)][static_cast<std::size_t>(d)]);
    }
    if (bp_min <= after_max) break;
    r.layers_k = k;
  }
  r.value += r.layers_k;
  return r;
}

BoundReport lb_n(const Configuration& c, const BoundOptions& options) {
  const Prepared p = prepare(c, options);
  BoundReport r = base_report("LB-N", p);
  r.p4 = p4_experiment(std::vector<Stack>(p.config.stacks().begin(), p.config.stacks().end()));
  if (r.p4) ++r.value;
  return r;
}

BoundReport lb4(const Configuration& c, const BoundOptions& options) {
  const Prepared p = prepare(c, options);
  BoundReport r = base_report("LB4", p);
  Lb4Parts parts = lb4_parts(p.config, options.continue_after_failed_pair);
  r.value += 2 * static_cast<int>(parts.pairs.size()) + static_cast<int>(parts.layers.size()) +
             (parts.p4 ? 1 : 0);
  r.pairs = std::move(parts.pairs);
  r.layers = std::move(parts.layers);
  r.p4 = std::move(parts.p4);
  return r;
}

int lb4_value(const Configuration& c) {
  const Configuration cc = auto_retrieve(c).config;
  const Lb4Parts parts = lb4_parts(cc, false);
  return static_cast<int>(bp_set(cc).size()) + 2 * static_cast<int>(parts.pairs.size()) +
         static_cast<int>(parts.layers.size()) + (parts.p4 ? 1 : 0);
}

AllBounds all_bounds(const Configuration& c, const BoundOptions& options) {
  return {lb1(c, options), lb2(c, options), lb3(c, options), lb_n(c, options), lb4(c, options)};
}

std::optional<VirtualLayer> find_virtual_layer(const Configuration& c, const BlockSet& excluded) {
  if (c.num_stacks() == 0) return std::nullopt;
  const Tables t(c);
  const LayerQuery q{&excluded, full_limits(c), kNone, kNone};
  const auto st = search_layer(c, t, q);
  if (!st) return std::nullopt;
  return to_layer(c, *st);
}

std::optional<OverlappedLayers> find_overlapped_layers(const Configuration& c, Block shared,
                                                       const BlockSet& excluded) {
  const auto pos = c.locate(shared);
  if (!pos || excluded.contains(shared)) return std::nullopt;
  const Tables t(c);
  return overlapped_at(c, t, excluded, pos->stack, pos->depth);
}

std::optional<std::vector<Block>> find_p4_set(const Configuration& c) {
  return p4_experiment(std::vector<Stack>(c.stacks().begin(), c.stacks().end()));
}

namespace {

bool layer_shape_ok(const Configuration& c, const VirtualLayer& layer) {
  if (static_cast<int>(layer.picks.size()) != c.num_stacks()) return false;
  for (int s = 0; s < c.num_stacks(); ++s) {
    const LayerPick& p = layer.picks[static_cast<std::size_t>(s)];
    if (p.stack != s || p.depth < 0 || p.depth >= c.height(s)) return false;
    if (c.stack(s)[static_cast<std::size_t>(p.depth)] != p.block) return false;
  }
  return true;
}

LayerState state_of(const Tables& t, const VirtualLayer& layer) {
  LayerState st;
  for (const LayerPick& p : layer.picks) st.depth.push_back(p.depth);
  summarize(t, st);
  return st;
}

}  // namespace

bool layer_is_valid(const Configuration& c, const VirtualLayer& layer) {
  if (!layer_shape_ok(c, layer)) return false;
  const Tables t(c);
  const LayerState st = state_of(t, layer);
  for (int s = 0; s < c.num_stacks(); ++s) {
    if (!pick_ok(c, t, st, s)) return false;
  }
  return true;
}

bool overlapped_is_valid(const Configuration& c, const OverlappedLayers& pair) {
  if (!layer_is_valid(c, pair.upper) || !layer_is_valid(c, pair.lower)) return false;
  const int s = pair.shared.stack;
  if (s < 0 || s >= c.num_stacks()) return false;
  if (pair.upper.picks[static_cast<std::size_t>(s)] != pair.shared ||
      pair.lower.picks[static_cast<std::size_t>(s)] != pair.shared) {
    return false;
  }
  for (int r = 0; r < c.num_stacks(); ++r) {
    if (r == s) continue;
    if (pair.lower.picks[static_cast<std::size_t>(r)].depth >=
        pair.upper.picks[static_cast<std::size_t>(r)].depth) {
      return false;
    }
  }
  const Tables t(c);
  if (!t.well_placed(c, s, pair.shared.depth)) return false;
  return state_of(t, pair.upper).after_max == pair.shared.block;
}

}  // namespace brp
