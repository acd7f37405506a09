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

#include "brp/mip/model.hpp"

namespace brp::mip {

std::string_view to_string(Variant v) { return v == Variant::kM3 ? "m3" : "m3r"; }

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kFeasible: return "feasible";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kBudget: return "budget";
  }
  return "?";
}

SolveStatus parse_status(std::string_view s) {
  if (s == "optimal") return SolveStatus::kOptimal;
  if (s == "feasible") return SolveStatus::kFeasible;
  if (s == "infeasible") return SolveStatus::kInfeasible;
  if (s == "budget") return SolveStatus::kBudget;
  throw Error("unknown solve status '" + std::string(s) + "'");
}

int Model::add_variable(std::string name, VarType type, double lower, double upper) {
  const int id = static_cast<int>(variables_.size());
  if (!index_.emplace(name, id).second) throw Error("duplicate variable " + name);
  variables_.push_back({std::move(name), type, lower, upper});
  return id;
}

std::optional<int> Model::find(const std::string& name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace brp::mip
