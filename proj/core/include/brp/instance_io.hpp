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

// Text formats.
//
// Instance file: first line "S B" (stack count, block count), then S lines
// "n p_1 ... p_n" listing each stack bottom to top. Whitespace separated,
// LF line ends. The height limit is not part of the file.
//
// Move-sequence file: one move per line, "R b from to" for a relocation or
// "T b from" for a retrieval (take). Stacks are numbered from 1.

#ifndef BRP_INSTANCE_IO_HPP_
#define BRP_INSTANCE_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "brp/configuration.hpp"
#include "brp/moves.hpp"

namespace brp {

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A file could not be opened, read or written.
class FileError : public Error {
 public:
  using Error::Error;
};

struct ParseOptions {
  // Map arbitrary distinct priorities onto 1..B instead of rejecting them.
  bool renumber = false;
};

Configuration parse_instance(std::string_view text, const ParseOptions& options = {});
std::string serialize_instance(const Configuration& c);

MoveSequence parse_move_sequence(std::string_view text);
std::string serialize_move_sequence(const MoveSequence& seq);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace brp

#endif  // BRP_INSTANCE_IO_HPP_
