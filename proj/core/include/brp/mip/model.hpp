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

// Generic linear integer program plus the metadata of a relocation model.

#ifndef BRP_MIP_MODEL_HPP_
#define BRP_MIP_MODEL_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "brp/configuration.hpp"

namespace brp::mip {

enum class Variant { kM3, kM3R };
enum class VarType { kBinary, kContinuous };
enum class Sense { kLessEqual, kEqual, kGreaterEqual };
enum class SolveStatus { kOptimal, kFeasible, kInfeasible, kBudget };

std::string_view to_string(Variant v);
std::string_view to_string(SolveStatus s);
SolveStatus parse_status(std::string_view s);  // throws Error on unknown text

struct Variable {
  std::string name;
  VarType type = VarType::kBinary;
  double lower = 0.0;
  double upper = 1.0;
};

struct Term {
  int var = 0;
  double coef = 0.0;
};

struct Constraint {
  std::string name;
  std::string group;  // formulation family, e.g. "X-2" or "Yp-5"
  std::vector<Term> terms;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
};

// Minimized.
struct Objective {
  double offset = 0.0;
  std::vector<Term> terms;
};

struct ModelInfo {
  Variant variant = Variant::kM3;
  int blocks = 0;
  int stacks = 0;
  std::optional<int> height;
  int lower_bound = 0;  // L
  int turns = 0;        // T for m3, L for m3R
  std::vector<Stack> initial;
};

class Model {
 public:
  int add_variable(std::string name, VarType type, double lower, double upper);
  void add_constraint(Constraint c) { constraints_.push_back(std::move(c)); }

  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  Objective& objective() { return objective_; }
  const Objective& objective() const { return objective_; }
  ModelInfo& info() { return info_; }
  const ModelInfo& info() const { return info_; }

  std::optional<int> find(const std::string& name) const;

 private:
  std::vector<Variable> variables_;
  std::unordered_map<std::string, int> index_;
  std::vector<Constraint> constraints_;
  Objective objective_;
  ModelInfo info_;
};

// Variable name -> value.
using Assignment = std::unordered_map<std::string, double>;

}  // namespace brp::mip

#endif  // BRP_MIP_MODEL_HPP_
