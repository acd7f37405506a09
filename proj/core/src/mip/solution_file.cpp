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


#include "brp/mip/solution_file.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

#include "brp/instance_io.hpp"

namespace brp::mip {
namespace {

std::optional<double> to_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ec == std::errc() ? end : buf);
}

}  // namespace

SolutionFile parse_solution_file(std::string_view text) {
  SolutionFile s;
  bool have_status = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    std::istringstream ls(line);
    std::string key;
    std::string value;
    std::string extra;
    if (!(ls >> key) || key.front() == '#') continue;
    if (!(ls >> value)) throw ParseError(n, "missing value after '" + key + "'");
    if (ls >> extra) throw ParseError(n, "unexpected token '" + extra + "'");
    if (key == "status") {
      if (have_status) throw ParseError(n, "duplicate status line");
      try {
        s.status = parse_status(value);
      } catch (const Error& e) {
        throw ParseError(n, e.what());
      }
      have_status = true;
      continue;
    }
    const auto v = to_double(value);
    if (!v) throw ParseError(n, "'" + value + "' is not a number");
    if (key == "objective") {
      s.objective = *v;
    } else if (!s.values.emplace(key, *v).second) {
      throw ParseError(n, "duplicate variable " + key);
    }
  }
  if (!have_status) throw ParseError(n, "missing status line");
  return s;
}

std::string write_solution_file(const SolutionFile& s) {
  std::string out = "status " + std::string(to_string(s.status)) + "\n";
  if (s.objective) out += "objective " + format_double(*s.objective) + "\n";
  std::vector<std::string> names;
  names.reserve(s.values.size());
  for (const auto& kv : s.values) names.push_back(kv.first);
  std::sort(names.begin(), names.end());
  for (const std::string& name : names) {
    out += name + " " + format_double(s.values.at(name)) + "\n";
  }
  return out;
}

Assignment assignment_from(const Model& m, const SolutionFile& s) {
  Assignment a;
  a.reserve(m.variables().size());
  for (const Variable& v : m.variables()) {
    const auto it = s.values.find(v.name);
    if (it == s.values.end()) throw Error("solution has no value for " + v.name);
    a.emplace(v.name, it->second);
  }
  return a;
}

}  // namespace brp::mip
