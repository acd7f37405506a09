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

#include "brp/mip/lp_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace brp::mip {
namespace {

constexpr std::size_t kLineWidth = 78;

std::string number(double v) {
  if (v == 0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// Accumulates tokens into lines no wider than kLineWidth.
class Wrapper {
 public:
  explicit Wrapper(std::string& out) : out_(out) {}
  void put(const std::string& token) {
    if (col_ > 0 && col_ + 1 + token.size() > kLineWidth) {
      out_ += "\n   ";
      col_ = 3;
    } else if (col_ > 0) {
      out_ += ' ';
      ++col_;
    }
    out_ += token;
    col_ += token.size();
  }
  void start(const std::string& lead) {
    out_ += lead;
    col_ = lead.size();
  }
  void end() {
    out_ += '\n';
    col_ = 0;
  }

 private:
  std::string& out_;
  std::size_t col_ = 0;
};

void put_terms(Wrapper& w, const Model& m, const std::vector<Term>& terms) {
  if (terms.empty()) {
    w.put("0");
    return;
  }
  bool first = true;
  for (const Term& t : terms) {
    const double mag = std::fabs(t.coef);
    std::string tok;
    if (t.coef < 0) {
      tok = "- ";
    } else if (!first) {
      tok = "+ ";
    }
    if (mag != 1.0) tok += number(mag) + " ";
    tok += m.variables()[static_cast<std::size_t>(t.var)].name;
    w.put(tok);
    first = false;
  }
}

const char* sense_text(Sense s) {
  switch (s) {
    case Sense::kLessEqual: return "<=";
    case Sense::kEqual: return "=";
    case Sense::kGreaterEqual: return ">=";
  }
  return "=";
}

}  // namespace

std::string group_of_row(std::string_view name) {
  const std::size_t us = name.find('_');
  const std::string_view head = name.substr(0, us);
  if (head.size() < 2) return {};
  std::size_t digits = head.size();
  while (digits > 0 && std::isdigit(static_cast<unsigned char>(head[digits - 1]))) --digits;
  if (digits == 0 || digits == head.size()) return {};
  return std::string(head.substr(0, digits)) + "-" + std::string(head.substr(digits));
}

std::string emit_lp(const Model& m) {
  std::string out;
  const ModelInfo& info = m.info();
  out += "\\ relocation model " + std::string(to_string(info.variant)) +
         " B=" + std::to_string(info.blocks) + " S=" + std::to_string(info.stacks) +
         " H=" + (info.height ? std::to_string(*info.height) : std::string("none")) +
         " L=" + std::to_string(info.lower_bound) + " T=" + std::to_string(info.turns) + "\n";
  out += "\\ offset " + number(m.objective().offset) + "\n";
  Wrapper w(out);
  out += "Minimize\n";
  w.start(" obj:");
  put_terms(w, m, m.objective().terms);
  w.end();
  out += "Subject To\n";
  for (const Constraint& c : m.constraints()) {
    w.start(" " + c.name + ":");
    put_terms(w, m, c.terms);
    w.put(sense_text(c.sense));
    w.put(number(c.rhs));
    w.end();
  }
  bool any_continuous = false;
  for (const Variable& v : m.variables()) any_continuous |= v.type == VarType::kContinuous;
  if (any_continuous) {
    out += "Bounds\n";
    for (const Variable& v : m.variables()) {
      if (v.type != VarType::kContinuous) continue;
      out += " " + number(v.lower) + " <= " + v.name + " <= " +
             (std::isinf(v.upper) ? std::string("+inf") : number(v.upper)) + "\n";
    }
  }
  bool any_binary = false;
  for (const Variable& v : m.variables()) any_binary |= v.type == VarType::kBinary;
  if (any_binary) {
    out += "Binaries\n";
    w.start("");
    for (const Variable& v : m.variables()) {
      if (v.type == VarType::kBinary) w.put(v.name);
    }
    w.end();
  }
  out += "End\n";
  return out;
}

namespace {

enum class Section { kNone, kObjective, kConstraints, kBounds, kBinaries, kGenerals, kEnd };

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

bool parse_number(std::string_view tok, double& v) {
  if (tok == "+inf" || tok == "inf" || tok == "+infinity" || tok == "infinity") {
    v = std::numeric_limits<double>::infinity();
    return true;
  }
  if (tok == "-inf" || tok == "-infinity") {
    v = -std::numeric_limits<double>::infinity();
    return true;
  }
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  const auto res = std::from_chars(first, tok.data() + tok.size(), v);
  return res.ec == std::errc() && res.ptr == tok.data() + tok.size();
}

class LpReader {
 public:
  explicit LpReader(std::string_view text) { tokenize(text); }

  Model read() {
    std::vector<std::string> pending;
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      const std::string& tok = tokens_[i];
      const std::string low = lower(tok);
      Section next = Section::kNone;
      if (low == "minimize" || low == "minimise" || low == "min") next = Section::kObjective;
      if (low == "subject" && i + 1 < tokens_.size() && lower(tokens_[i + 1]) == "to") {
        ++i;
        next = Section::kConstraints;
      }
      if (low == "st" || low == "s.t.") next = Section::kConstraints;
      if (low == "bounds") next = Section::kBounds;
      if (low == "binaries" || low == "binary" || low == "bin") next = Section::kBinaries;
      if (low == "generals" || low == "general") next = Section::kGenerals;
      if (low == "end") next = Section::kEnd;
      if (low == "maximize" || low == "maximise" || low == "max") {
        throw Error("LP reader: only minimization is supported");
      }
      if (next != Section::kNone) {
        flush(pending);
        section_ = next;
        continue;
      }
      if (section_ == Section::kBinaries || section_ == Section::kGenerals) {
        const int id = var(tok);
        auto& v = vars_[static_cast<std::size_t>(id)];
        v.type = VarType::kBinary;
        v.lower = 0;
        v.upper = 1;
        continue;
      }
      pending.push_back(tok);
      if (section_ == Section::kConstraints && is_sense(tok) && i + 1 < tokens_.size()) {
        pending.push_back(tokens_[++i]);
        flush(pending);
      } else if (section_ == Section::kBounds && pending.size() == 5) {
        flush(pending);
      }
    }
    flush(pending);
    Model m;
    for (const Variable& v : vars_) m.add_variable(v.name, v.type, v.lower, v.upper);
    m.objective() = objective_;
    for (Constraint& c : rows_) m.add_constraint(std::move(c));
    return m;
  }

 private:
  static bool is_sense(const std::string& t) {
    return t == "<=" || t == ">=" || t == "=" || t == "=<" || t == "=>" || t == "<" || t == ">";
  }

  void tokenize(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      const std::size_t bs = line.find('\\');
      if (bs != std::string_view::npos) {
        std::istringstream comment{std::string(line.substr(bs + 1))};
        std::string key;
        double v = 0;
        if (comment >> key && key == "offset" && comment >> v) objective_.offset = v;
        line = line.substr(0, bs);
      }
      std::string cur;
      auto push = [&] {
        if (!cur.empty()) tokens_.push_back(cur);
        cur.clear();
      };
      for (std::size_t k = 0; k < line.size(); ++k) {
        const char ch = line[k];
        if (std::isspace(static_cast<unsigned char>(ch))) {
          push();
        } else if (ch == ':') {
          cur += ch;
          push();
        } else if ((ch == '<' || ch == '>' || ch == '=') ) {
          push();
          cur += ch;
          if (k + 1 < line.size() && (line[k + 1] == '=' || line[k + 1] == '<' || line[k + 1] == '>')) {
            cur += line[++k];
          }
          push();
        } else if ((ch == '+' || ch == '-') && cur.empty()) {
          cur += ch;
          if (k + 1 < line.size() && !std::isspace(static_cast<unsigned char>(line[k + 1])) &&
              !std::isdigit(static_cast<unsigned char>(line[k + 1])) && line[k + 1] != '.' &&
              line.substr(k + 1, 3) != "inf") {
            push();
          }
        } else {
          cur += ch;
        }
      }
      push();
    }
  }

  int var(const std::string& name) {
    const auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    const int id = static_cast<int>(vars_.size());
    index_.emplace(name, id);
    vars_.push_back({name, VarType::kContinuous, 0, std::numeric_limits<double>::infinity()});
    return id;
  }

  // Parses "[label:] [+|-] [coef] name ..." and returns the constant part.
  double linear(const std::vector<std::string>& toks, std::size_t begin, std::size_t end,
                std::vector<Term>& terms) {
    double constant = 0;
    double sign = 1;
    double coef = 1.0;
    bool has_coef = false;
    for (std::size_t k = begin; k < end; ++k) {
      const std::string& t = toks[k];
      double v = 0;
      if (t == "+") continue;
      if (t == "-") {
        sign = -sign;
        continue;
      }
      if (parse_number(t, v)) {
        if (has_coef) constant += sign * coef;
        coef = v;
        has_coef = true;
        continue;
      }
      std::string name = t;
      if (name.front() == '-' || name.front() == '+') {
        if (name.front() == '-') sign = -sign;
        name.erase(0, 1);
      }
      const int id = var(name);
      const double c = sign * coef;
      bool merged = false;
      for (Term& term : terms) {
        if (term.var == id) {
          term.coef += c;
          merged = true;
        }
      }
      if (!merged) terms.push_back({id, c});
      sign = 1;
      coef = 1.0;
      has_coef = false;
    }
    if (has_coef) constant += sign * coef;
    return constant;
  }

  void flush(std::vector<std::string>& toks) {
    if (toks.empty()) return;
    std::size_t begin = 0;
    std::string label;
    if (toks.front().size() > 1 && toks.front().back() == ':') {
      label = toks.front().substr(0, toks.front().size() - 1);
      begin = 1;
    }
    switch (section_) {
      case Section::kObjective:
        objective_.offset += linear(toks, begin, toks.size(), objective_.terms);
        break;
      case Section::kConstraints: {
        std::size_t s = begin;
        while (s < toks.size() && !is_sense(toks[s])) ++s;
        if (s + 1 >= toks.size()) throw Error("LP reader: malformed row " + label);
        double rhs = 0;
        if (!parse_number(toks[s + 1], rhs)) throw Error("LP reader: bad rhs in row " + label);
        Constraint c;
        c.name = label.empty() ? "R" + std::to_string(rows_.size() + 1) : label;
        c.group = group_of_row(c.name);
        rhs -= linear(toks, begin, s, c.terms);
        const std::string& op = toks[s];
        c.sense = op == "=" ? Sense::kEqual
                  : (op == "<=" || op == "=<" || op == "<") ? Sense::kLessEqual
                                                            : Sense::kGreaterEqual;
        c.rhs = rhs;
        rows_.push_back(std::move(c));
        break;
      }
      case Section::kBounds: {
        double lo = 0;
        double hi = 0;
        if (toks.size() == 5 && parse_number(toks[0], lo) && parse_number(toks[4], hi)) {
          auto& v = vars_[static_cast<std::size_t>(var(toks[2]))];
          v.lower = lo;
          v.upper = hi;
        } else {
          throw Error("LP reader: unsupported bound line");
        }
        break;
      }
      default:
        throw Error("LP reader: unexpected text before a section header");
    }
    toks.clear();
  }

  std::vector<std::string> tokens_;
  Section section_ = Section::kNone;
  std::vector<Variable> vars_;
  std::unordered_map<std::string, int> index_;
  Objective objective_;
  std::vector<Constraint> rows_;
};

}  // namespace

Model parse_lp(std::string_view text) { return LpReader(text).read(); }

}  // namespace brp::mip
