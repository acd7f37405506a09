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


// Solver backends for relocation models. A backend handle runs one solve at
// a time; separate handles may run concurrently.

#ifndef BRP_MIP_BACKEND_HPP_
#define BRP_MIP_BACKEND_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "brp/mip/model.hpp"

namespace brp::mip {

struct SolveBudget {
  double time_s = 120.0;
  std::int64_t nodes = 20'000'000;  // internal backend only
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::kInfeasible;
  double objective = 0.0;  // of the assignment, offset included
  std::optional<Assignment> assignment;
  // Certified lower bound on the model optimum, when the backend knows one.
  // Equals objective for kOptimal.
  std::optional<double> bound;
  std::string backend;
  double wall_time_s = 0.0;
};

// The backend cannot run at all (not configured or not installed).
class BackendUnavailable : public Error {
 public:
  using Error::Error;
};

// The backend ran but failed or answered something unusable.
class BackendError : public Error {
 public:
  using Error::Error;
};

class Backend {
 public:
  virtual ~Backend() = default;
  virtual std::string id() const = 0;
  // Any returned assignment passes check_assignment. Warm starts are hints
  // and may be ignored.
  virtual SolveOutcome solve(const Model& m, const Assignment* warm_start,
                             const SolveBudget& budget) = 0;
};

// Exact search over the bay a model was built from. Only accepts models from
// build_brp_m3 / build_brp_m3r. Heights are checked at turn ends, as the
// model does.
class InternalBackend : public Backend {
 public:
  std::string id() const override { return "internal"; }
  SolveOutcome solve(const Model& m, const Assignment* warm_start,
                     const SolveBudget& budget) override;
};

// Runs an external command on the emitted LP file. The template may contain
// {lp}, {sol} and {time}; the command must write a solution file to {sol}.
class ExternalBackend : public Backend {
 public:
  explicit ExternalBackend(std::string command_template);
  std::string id() const override { return "external"; }
  SolveOutcome solve(const Model& m, const Assignment* warm_start,
                     const SolveBudget& budget) override;

  const std::string& command_template() const { return template_; }

 private:
  std::string template_;
};

inline constexpr const char* kBackendEnvVar = "BRP_MIP_COMMAND";

// ExternalBackend from BRP_MIP_COMMAND. Throws BackendUnavailable when the
// variable is unset or empty.
std::unique_ptr<Backend> external_backend_from_env();

}  // namespace brp::mip

#endif  // BRP_MIP_BACKEND_HPP_
