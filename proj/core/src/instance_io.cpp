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

#include "brp/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace brp {
namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

int to_int(std::string_view token, int line) {
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, "expected an integer, found '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Configuration parse_instance(std::string_view text, const ParseOptions& options) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty instance");
  const Line& header = lines.front();
  if (header.tokens.size() != 2) {
    throw ParseError(header.number, "header must be 'S B'");
  }
  const int num_stacks = to_int(header.tokens[0], header.number);
  const int num_blocks = to_int(header.tokens[1], header.number);
  if (num_stacks <= 0) throw ParseError(header.number, "stack count must be positive");
  if (num_blocks < 0) throw ParseError(header.number, "block count must be non-negative");
  if (static_cast<int>(lines.size()) - 1 != num_stacks) {
    const int at = static_cast<int>(lines.size()) - 1 < num_stacks ? lines.back().number + 1
                                                                   : lines[static_cast<std::size_t>(num_stacks) + 1].number;
    throw ParseError(at, "header declares " + std::to_string(num_stacks) + " stacks, found " +
                             std::to_string(lines.size() - 1));
  }

  std::vector<Stack> stacks;
  std::unordered_map<Block, int> first_seen;
  int total = 0;
  for (std::size_t s = 1; s < lines.size(); ++s) {
    const Line& line = lines[s];
    const int n = to_int(line.tokens[0], line.number);
    if (n < 0) throw ParseError(line.number, "negative stack height");
    if (static_cast<int>(line.tokens.size()) - 1 != n) {
      throw ParseError(line.number, "stack declares " + std::to_string(n) + " blocks, found " +
                                        std::to_string(line.tokens.size() - 1));
    }
    Stack stack;
    for (std::size_t k = 1; k < line.tokens.size(); ++k) {
      const Block b = to_int(line.tokens[k], line.number);
      if (b <= 0) throw ParseError(line.number, "priority must be positive");
      if (auto [it, inserted] = first_seen.emplace(b, line.number); !inserted) {
        throw ParseError(line.number, "duplicate priority " + std::to_string(b) +
                                          " (first seen on line " + std::to_string(it->second) +
                                          ")");
      }
      stack.push_back(b);
    }
    total += n;
    stacks.push_back(std::move(stack));
  }
  if (total != num_blocks) {
    throw ParseError(header.number, "header declares " + std::to_string(num_blocks) +
                                        " blocks, stacks hold " + std::to_string(total));
  }

  Configuration c(std::move(stacks));
  if (!c.has_contiguous_priorities()) {
    if (!options.renumber) {
      throw ParseError(header.number, "priorities must be exactly 1.." +
                                          std::to_string(num_blocks) +
                                          " (enable renumbering to accept others)");
    }
    c = renumbered(c);
  }
  return c;
}

std::string serialize_instance(const Configuration& c) {
  std::ostringstream out;
  out << c.num_stacks() << ' ' << c.num_blocks() << '\n';
  for (const Stack& st : c.stacks()) {
    out << st.size();
    for (Block b : st) out << ' ' << b;
    out << '\n';
  }
  return out.str();
}

MoveSequence parse_move_sequence(std::string_view text) {
  MoveSequence seq;
  for (const Line& line : tokenize(text)) {
    if (line.tokens.front().starts_with('#')) continue;
    const std::string_view kind = line.tokens.front();
    if (kind == "R") {
      if (line.tokens.size() != 4) throw ParseError(line.number, "expected 'R b from to'");
      seq.moves.push_back(Move::Relocate(to_int(line.tokens[1], line.number),
                                         to_int(line.tokens[2], line.number) - 1,
                                         to_int(line.tokens[3], line.number) - 1));
    } else if (kind == "T") {
      if (line.tokens.size() != 3) throw ParseError(line.number, "expected 'T b from'");
      seq.moves.push_back(Move::Retrieve(to_int(line.tokens[1], line.number),
                                         to_int(line.tokens[2], line.number) - 1));
    } else {
      throw ParseError(line.number, "unknown move kind '" + std::string(kind) + "'");
    }
  }
  return seq;
}

std::string serialize_move_sequence(const MoveSequence& seq) {
  std::ostringstream out;
  for (const Move& m : seq.moves) {
    if (m.is_relocation()) {
      out << "R " << m.block << ' ' << m.from + 1 << ' ' << m.to + 1 << '\n';
    } else {
      out << "T " << m.block << ' ' << m.from + 1 << '\n';
    }
  }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FileError("cannot write " + path.string());
  out << text;
  if (!out) throw FileError("write failed for " + path.string());
}

}  // namespace brp
