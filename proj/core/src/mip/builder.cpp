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

#include "brp/mip/builder.hpp"

#include <vector>

namespace brp::mip {

std::string x_name(int i, int j, int t) {
  return "x_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(t);
}
std::string ym_name(int i, int j, int t) {
  return "ym_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(t);
}
std::string yp_name(int i, int j, int t) {
  return "yp_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(t);
}
std::string z_name(int i, int j, int t) {
  return "z_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(t);
}
std::string u_name(int i, int t) { return "u_" + std::to_string(i) + "_" + std::to_string(t); }

namespace {

std::string row(const char* prefix, std::initializer_list<int> idx) {
  std::string s = prefix;
  for (int v : idx) s += "_" + std::to_string(v);
  return s;
}

struct Expr {
  std::vector<Term> terms;
  double constant = 0.0;

  void add(int var, double coef) {
    for (Term& t : terms) {
      if (t.var == var) {
        t.coef += coef;
        return;
      }
    }
    terms.push_back({var, coef});
  }
};

class Builder {
 public:
  Builder(const Configuration& c, std::optional<int> h, int lower_bound, int turns, Variant v)
      : B_(c.num_blocks()), S_(c.num_stacks()), T_(turns), L_(lower_bound), H_(h), variant_(v) {
    const std::size_t n = static_cast<std::size_t>(B_ + 2);
    C_.assign(n * n, 0);
    for (const Stack& st : c.stacks()) {
      for (std::size_t d = 0; d < st.size(); ++d) {
        const int below = d == 0 ? floor() : st[d - 1];
        C_[static_cast<std::size_t>(st[d]) * n + static_cast<std::size_t>(below)] = 1;
      }
    }
    m_.info() = {v, B_, S_, h, lower_bound, turns, {c.stacks().begin(), c.stacks().end()}};
  }

  Model build() {
    declare_variables();
    if (variant_ == Variant::kM3) {
      for (int t = 1; t <= T_; ++t) {
        for (int i = 1; i <= B_; ++i) {
          for (int j = 1; j <= floor(); ++j) {
            if (j != i) m_.objective().terms.push_back({yp(i, j, t), 1.0});
          }
        }
      }
    } else {
      m_.objective().offset = L_;
      for (int i = 1; i <= B_; ++i) {
        for (int j = 1; j < i; ++j) m_.objective().terms.push_back({x(i, j, T_), 1.0});
      }
    }
    adjacency_rows();
    lift_up_rows();
    lift_down_rows();
    retrieval_rows();
    if (H_) height_rows();
    return std::move(m_);
  }

 private:
  int floor() const { return B_ + 1; }
  std::size_t slot(int i, int j, int t) const {
    const auto n = static_cast<std::size_t>(B_ + 2);
    return (static_cast<std::size_t>(t) * n + static_cast<std::size_t>(i)) * n + static_cast<std::size_t>(j);
  }
  int x(int i, int j, int t) const { return x_[slot(i, j, t)]; }
  int ym(int i, int j, int t) const { return ym_[slot(i, j, t)]; }
  int yp(int i, int j, int t) const { return yp_[slot(i, j, t)]; }
  int z(int i, int j, int t) const { return z_[slot(i, j, t)]; }
  int u(int i, int t) const { return u_[static_cast<std::size_t>(t) * static_cast<std::size_t>(B_ + 2) + static_cast<std::size_t>(i)]; }
  int C(int i, int j) const {
    return C_[static_cast<std::size_t>(i) * static_cast<std::size_t>(B_ + 2) + static_cast<std::size_t>(j)];
  }

  // x_ijt, or the initial constant when t = 0.
  void add_x(Expr& e, int i, int j, int t, double coef) const {
    if (t == 0) {
      e.constant += coef * C(i, j);
    } else {
      e.add(x(i, j, t), coef);
    }
  }

  void declare_variables() {
    const std::size_t n = static_cast<std::size_t>(B_ + 2);
    const std::size_t size = static_cast<std::size_t>(T_ + 1) * n * n;
    x_.assign(size, -1);
    ym_.assign(size, -1);
    yp_.assign(size, -1);
    z_.assign(size, -1);
    u_.assign(static_cast<std::size_t>(T_ + 1) * n, -1);
    auto each_pair = [&](auto&& fn) {
      for (int t = 1; t <= T_; ++t) {
        for (int i = 1; i <= B_; ++i) {
          for (int j = 1; j <= floor(); ++j) {
            if (j != i) fn(i, j, t);
          }
        }
      }
    };
    each_pair([&](int i, int j, int t) {
      x_[slot(i, j, t)] = m_.add_variable(x_name(i, j, t), VarType::kBinary, 0, 1);
    });
    each_pair([&](int i, int j, int t) {
      ym_[slot(i, j, t)] = m_.add_variable(ym_name(i, j, t), VarType::kBinary, 0, 1);
    });
    each_pair([&](int i, int j, int t) {
      yp_[slot(i, j, t)] = m_.add_variable(yp_name(i, j, t), VarType::kBinary, 0, 1);
    });
    each_pair([&](int i, int j, int t) {
      if (j > i) z_[slot(i, j, t)] = m_.add_variable(z_name(i, j, t), VarType::kBinary, 0, 1);
    });
    if (H_) {
      for (int t = 1; t <= T_; ++t) {
        for (int i = 1; i <= B_; ++i) {
          u_[static_cast<std::size_t>(t) * n + static_cast<std::size_t>(i)] =
              m_.add_variable(u_name(i, t), VarType::kContinuous, 0, *H_ - 1);
        }
      }
    }
  }

  void emit(std::string name, const char* group, Expr e, Sense sense, double rhs) {
    m_.add_constraint({std::move(name), group, std::move(e.terms), sense, rhs - e.constant});
  }

  void adjacency_rows() {
    for (int t = 1; t <= T_; ++t) {
      for (int i = 1; i <= B_; ++i) {
        for (int j = 1; j <= floor(); ++j) {
          if (j == i) continue;
          Expr e;
          e.add(x(i, j, t), 1);
          add_x(e, i, j, t - 1, -1);
          e.add(ym(i, j, t), 1);
          e.add(yp(i, j, t), -1);
          if (j > i) {
            e.add(z(i, j, t), 1);
            emit(row("X3", {i, j, t}), "X-3", std::move(e), Sense::kEqual, 0);
          } else {
            emit(row("X2", {i, j, t}), "X-2", std::move(e), Sense::kEqual, 0);
          }
        }
      }
    }
    if (variant_ != Variant::kM3) return;
    for (int i = 1; i <= B_; ++i) {
      for (int j = 1; j <= floor(); ++j) {
        if (j == i) continue;
        Expr e;
        add_x(e, i, j, T_, 1);
        emit(row("X4", {i, j}), "X-4", std::move(e), Sense::kEqual, 0);
      }
    }
  }

  // Shared shape of the "one operation per turn" rows.
  void per_turn_rows(const char* prefix1, const char* group1, const char* prefix2,
                     const char* group2, int (Builder::*var)(int, int, int) const) {
    for (int t = 1; t <= T_; ++t) {
      Expr e;
      for (int i = 1; i <= B_; ++i) {
        for (int j = 1; j <= floor(); ++j) {
          if (j != i) e.add((this->*var)(i, j, t), 1);
        }
      }
      if (t <= L_) {
        emit(row(prefix1, {t}), group1, std::move(e), Sense::kEqual, 1);
      } else if (variant_ == Variant::kM3 && t >= 2) {
        for (int i = 1; i <= B_; ++i) {
          for (int j = 1; j <= floor(); ++j) {
            if (j != i) e.add((this->*var)(i, j, t - 1), -1);
          }
        }
        emit(row(prefix2, {t}), group2, std::move(e), Sense::kLessEqual, 0);
      }
    }
  }

  void lift_up_rows() {
    per_turn_rows("Ym1", "Ym-1", "Ym2", "Ym-2", &Builder::ym);
    for (int t = 1; t <= T_; ++t) {
      for (int i = 1; i <= B_; ++i) {
        for (int j = 1; j <= floor(); ++j) {
          if (j == i) continue;
          Expr e;
          e.add(ym(i, j, t), 1);
          add_x(e, i, j, t - 1, -1);
          emit(row("Ym3", {i, j, t}), "Ym-3", std::move(e), Sense::kLessEqual, 0);
        }
      }
      for (int i = 1; i <= B_; ++i) {
        Expr e;
        for (int j = 1; j <= floor(); ++j) {
          if (j == i) continue;
          e.add(ym(i, j, t), 1);
          add_x(e, i, j, t - 1, -1);
        }
        for (int j = 1; j <= B_; ++j) {
          if (j != i) add_x(e, j, i, t - 1, 1);
        }
        emit(row("Ym4", {i, t}), "Ym-4", std::move(e), Sense::kLessEqual, 0);
      }
    }
  }

  void lift_down_rows() {
    per_turn_rows("Yp1", "Yp-1", "Yp2", "Yp-2", &Builder::yp);
    for (int t = 1; t <= T_; ++t) {
      for (int i = 1; i <= B_; ++i) {
        Expr e;
        for (int j = 1; j <= floor(); ++j) {
          if (j == i) continue;
          e.add(yp(i, j, t), 1);
          e.add(ym(i, j, t), -1);
        }
        emit(row("Yp3", {i, t}), "Yp-3", std::move(e), Sense::kEqual, 0);
      }
      for (int j = 1; j <= floor(); ++j) {
        Expr e;
        for (int i = 1; i <= B_; ++i) {
          if (i == j) continue;
          e.add(yp(i, j, t), 1);
          e.add(ym(i, j, t), 1);
        }
        emit(row("Yp4", {j, t}), "Yp-4", std::move(e), Sense::kLessEqual, 1);
      }
      for (int j = 1; j <= B_; ++j) {
        Expr e;
        for (int i = 1; i <= B_; ++i) {
          if (i != j) e.add(yp(i, j, t), 1);
        }
        for (int i = 1; i <= floor(); ++i) {
          if (i != j) add_x(e, j, i, t - 1, -1);
        }
        for (int i = 1; i <= B_; ++i) {
          if (i != j) add_x(e, i, j, t - 1, 1);
        }
        emit(row("Yp5", {j, t}), "Yp-5", std::move(e), Sense::kLessEqual, 0);
      }
      Expr e;
      for (int i = 1; i <= B_; ++i) {
        e.add(yp(i, floor(), t), 1);
        add_x(e, i, floor(), t - 1, 1);
      }
      emit(row("Yp6", {t}), "Yp-6", std::move(e), Sense::kLessEqual, S_);
    }
  }

  void retrieval_rows() {
    for (int t = 1; t <= T_; ++t) {
      for (int i = 1; i <= B_; ++i) {
        Expr e;
        for (int j = i + 1; j <= floor(); ++j) e.add(z(i, j, t), 1);
        for (int j = 1; j <= floor(); ++j) {
          if (j != i) add_x(e, i, j, t - 1, -1);
        }
        for (int j = i + 1; j <= B_; ++j) {
          add_x(e, j, i, t - 1, 1);
          e.add(ym(j, i, t), -1);
          e.add(yp(j, i, t), 1);
        }
        emit(row("Z1", {i, t}), "Z-1", std::move(e), Sense::kLessEqual, 0);
      }
      for (int i = 2; i <= B_; ++i) {
        Expr e;
        for (int tt = 1; tt <= t; ++tt) {
          for (int j = i + 1; j <= floor(); ++j) e.add(z(i, j, tt), 1);
          for (int j = i; j <= floor(); ++j) e.add(z(i - 1, j, tt), -1);
        }
        emit(row("Z2", {i, t}), "Z-2", std::move(e), Sense::kLessEqual, 0);
      }
    }
  }

  void height_rows() {
    const int h = *H_;
    for (int t = 1; t <= T_; ++t) {
      for (int i = 1; i <= B_; ++i) {
        Expr e;
        e.add(u(i, t), 1);
        emit(row("U1", {i, t}), "U-1", std::move(e), Sense::kLessEqual, h - 1);
      }
      for (int i = 1; i <= B_; ++i) {
        for (int j = 1; j <= B_; ++j) {
          if (j == i) continue;
          Expr e;
          e.add(u(i, t), 1);
          e.add(u(j, t), -1);
          e.add(x(i, j, t), -h);
          emit(row("U2", {i, j, t}), "U-2", std::move(e), Sense::kGreaterEqual, 1 - h);
        }
      }
    }
  }

  int B_, S_, T_, L_;
  std::optional<int> H_;
  Variant variant_;
  std::vector<int> C_;
  std::vector<int> x_, ym_, yp_, z_, u_;
  Model m_;
};

void require_model_form(const Configuration& c, std::optional<int> height) {
  if (c.retrieved_up_to() != 0 || !c.has_contiguous_priorities()) {
    throw Error("model input must hold priorities 1..B");
  }
  if (!c.empty() && c.top(c.locate(1)->stack) == 1) {
    throw Error("model input must not have the target on top; retrieve it first");
  }
  if (height && *height < c.max_height()) {
    throw Error("height limit " + std::to_string(*height) + " is below the current height " +
                std::to_string(c.max_height()));
  }
}

}  // namespace

Model build_brp_m3(const Configuration& c, std::optional<int> height, int lower_bound, int turns) {
  require_model_form(c, height);
  if (lower_bound < 0) throw Error("L must be non-negative");
  if (turns < lower_bound) {
    throw Error("T=" + std::to_string(turns) + " is below L=" + std::to_string(lower_bound));
  }
  return Builder(c, height, lower_bound, turns, Variant::kM3).build();
}

Model build_brp_m3r(const Configuration& c, std::optional<int> height, int lower_bound) {
  require_model_form(c, height);
  if (lower_bound < 0) throw Error("L must be non-negative");
  if (lower_bound == 0) throw DegenerateModel(direct_blockages(c));
  return Builder(c, height, lower_bound, lower_bound, Variant::kM3R).build();
}

PreparedInstance prepare_instance(const Configuration& c) {
  RetrievalResult r = auto_retrieve(c);
  PreparedInstance p;
  p.prefix.moves = r.moves;
  if (r.config.empty()) {
    p.config = Configuration(std::vector<Stack>(static_cast<std::size_t>(c.num_stacks())));
    p.offset = r.config.retrieved_up_to();
    return p;
  }
  if (!r.config.has_contiguous_priorities()) {
    throw Error("priorities must be contiguous; renumber the instance first");
  }
  p.offset = r.config.retrieved_up_to();
  p.config = normalized(r.config.with_height_limit(std::nullopt));
  return p;
}

MoveSequence restore_numbering(const PreparedInstance& p, const MoveSequence& model_seq) {
  MoveSequence out = p.prefix;
  for (Move m : model_seq.moves) {
    m.block += p.offset;
    out.moves.push_back(m);
  }
  return out;
}

}  // namespace brp::mip
