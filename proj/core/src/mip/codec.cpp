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

#include "brp/mip/codec.hpp"

#include <algorithm>
#include <cmath>

#include "brp/mip/builder.hpp"

namespace brp::mip {
namespace {

int below(const Configuration& c, Block b, int floor) {
  const Position p = *c.locate(b);
  return p.depth == 0 ? floor : c.stack(p.stack)[static_cast<std::size_t>(p.depth - 1)];
}

void set(Assignment& a, const std::string& name, double v) {
  const auto it = a.find(name);
  if (it == a.end()) throw Error("sequence needs variable " + name + ", which the model lacks");
  it->second = v;
}

std::string domain_group(const std::string& name) {
  if (name.rfind("x_", 0) == 0) return "X-5";
  if (name.rfind("ym_", 0) == 0 || name.rfind("yp_", 0) == 0) return "X-6";
  if (name.rfind("z_", 0) == 0) return "X-7";
  if (name.rfind("u_", 0) == 0) return "U-3";
  return "domain";
}

}  // namespace

bool FeasibilityReport::violates(const std::string& group) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.group == group; });
}

Assignment encode_sequence(const Model& m, const MoveSequence& seq) {
  const ModelInfo& info = m.info();
  const int floor = info.blocks + 1;
  Assignment a;
  a.reserve(m.variables().size());
  for (const Variable& v : m.variables()) a.emplace(v.name, 0.0);

  std::vector<std::vector<Move>> turns(1);
  for (const Move& mv : seq.moves) {
    if (mv.is_relocation()) {
      turns.push_back({mv});
    } else if (turns.size() == 1) {
      throw Error("retrieval of block " + std::to_string(mv.block) +
                  " before the first relocation");
    } else {
      turns.back().push_back(mv);
    }
  }
  const int used = static_cast<int>(turns.size()) - 1;
  if (used > info.turns) {
    throw Error("sequence has " + std::to_string(used) + " relocations but the model has " +
                std::to_string(info.turns) + " turns");
  }
  if (info.variant == Variant::kM3R && used != info.lower_bound) {
    throw Error("relaxed model needs exactly " + std::to_string(info.lower_bound) +
                " relocations, sequence has " + std::to_string(used));
  }

  Configuration cur(info.initial);
  for (int t = 1; t <= info.turns; ++t) {
    if (t <= used) {
      for (const Move& mv : turns[static_cast<std::size_t>(t)]) {
        try {
          if (mv.is_relocation()) {
            const int from = below(cur, mv.block, floor);
            const int onto = cur.height(mv.to) == 0 ? floor : cur.top(mv.to);
            cur = apply_move(cur, mv);
            set(a, ym_name(mv.block, from, t), 1);
            set(a, yp_name(mv.block, onto, t), 1);
          } else {
            const int from = below(cur, mv.block, floor);
            cur = apply_move(cur, mv);
            set(a, z_name(mv.block, from, t), 1);
          }
        } catch (const IllegalMove& e) {
          throw Error("turn " + std::to_string(t) + ": " + e.reason());
        }
      }
    }
    for (int s = 0; s < cur.num_stacks(); ++s) {
      const Stack& st = cur.stack(s);
      for (std::size_t d = 0; d < st.size(); ++d) {
        const int under = d == 0 ? floor : st[d - 1];
        set(a, x_name(st[d], under, t), 1);
        if (info.height) set(a, u_name(st[d], t), static_cast<double>(d));
      }
    }
  }
  if (info.variant == Variant::kM3 && !cur.empty()) {
    throw Error("sequence leaves " + std::to_string(cur.num_blocks()) + " blocks in the bay");
  }
  return a;
}

FeasibilityReport check_assignment(const Model& m, const Assignment& a, double tol) {
  std::vector<double> val(m.variables().size());
  FeasibilityReport report;
  for (std::size_t k = 0; k < val.size(); ++k) {
    const Variable& v = m.variables()[k];
    const auto it = a.find(v.name);
    if (it == a.end()) throw Error("assignment is missing variable " + v.name);
    val[k] = it->second;
    bool ok = val[k] >= v.lower - tol && val[k] <= v.upper + tol;
    if (v.type == VarType::kBinary) ok = ok && std::fabs(val[k] - std::round(val[k])) <= tol;
    if (!ok) report.violations.push_back({v.name, domain_group(v.name), val[k], v.upper});
  }
  for (const Constraint& c : m.constraints()) {
    double lhs = 0;
    for (const Term& t : c.terms) lhs += t.coef * val[static_cast<std::size_t>(t.var)];
    bool ok = true;
    switch (c.sense) {
      case Sense::kLessEqual: ok = lhs <= c.rhs + tol; break;
      case Sense::kEqual: ok = std::fabs(lhs - c.rhs) <= tol; break;
      case Sense::kGreaterEqual: ok = lhs >= c.rhs - tol; break;
    }
    if (!ok) report.violations.push_back({c.name, c.group, lhs, c.rhs});
  }
  report.objective = m.objective().offset;
  for (const Term& t : m.objective().terms) {
    report.objective += t.coef * val[static_cast<std::size_t>(t.var)];
  }
  return report;
}

MoveSequence decode_assignment(const Model& m, const Assignment& a) {
  const ModelInfo& info = m.info();
  const int B = info.blocks;
  const int floor = B + 1;
  auto on = [&](const std::string& name) {
    const auto it = a.find(name);
    if (it == a.end()) throw Error("assignment is missing variable " + name);
    return it->second > 0.5;
  };
  MoveSequence seq;
  Configuration cur(info.initial);
  for (int t = 1; t <= info.turns; ++t) {
    int lifted = 0;
    int lifted_from = 0;
    int placed = 0;
    int placed_on = 0;
    std::vector<Block> retrieved;
    for (int i = 1; i <= B; ++i) {
      for (int j = 1; j <= floor; ++j) {
        if (j == i) continue;
        if (on(ym_name(i, j, t))) {
          if (lifted) throw Error("turn " + std::to_string(t) + " lifts more than one block");
          lifted = i;
          lifted_from = j;
        }
        if (on(yp_name(i, j, t))) {
          if (placed) throw Error("turn " + std::to_string(t) + " places more than one block");
          placed = i;
          placed_on = j;
        }
        if (j > i && on(z_name(i, j, t))) retrieved.push_back(i);
      }
    }
    const std::string where = "turn " + std::to_string(t) + ": ";
    if (lifted != placed) throw Error(where + "lift and put-down disagree");
    try {
      if (lifted) {
        const auto pos = cur.locate(lifted);
        if (!pos) throw Error(where + "block " + std::to_string(lifted) + " is not in the bay");
        if (below(cur, lifted, floor) != lifted_from) {
          throw Error(where + "block " + std::to_string(lifted) + " does not rest on " +
                      std::to_string(lifted_from));
        }
        int to = -1;
        for (int s = 0; s < cur.num_stacks() && to < 0; ++s) {
          if (s == pos->stack) continue;
          if (placed_on == floor ? cur.height(s) == 0 : cur.top(s) == placed_on) to = s;
        }
        if (to < 0) {
          throw Error(where + "no stack offers " +
                      (placed_on == floor ? std::string("an empty slot")
                                          : "block " + std::to_string(placed_on) + " on top"));
        }
        const Move mv = Move::Relocate(lifted, pos->stack, to);
        cur = apply_move(cur, mv);
        seq.moves.push_back(mv);
      }
      std::sort(retrieved.begin(), retrieved.end());
      for (Block b : retrieved) {
        const auto pos = cur.locate(b);
        if (!pos) throw Error(where + "block " + std::to_string(b) + " is not in the bay");
        const Move mv = Move::Retrieve(b, pos->stack);
        cur = apply_move(cur, mv);
        seq.moves.push_back(mv);
      }
    } catch (const IllegalMove& e) {
      throw Error(where + e.reason());
    }
  }
  return seq;
}

}  // namespace brp::mip
