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


#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "brp/instance_io.hpp"
#include "brp/mip/backend.hpp"
#include "brp/mip/codec.hpp"
#include "brp/mip/lp_format.hpp"
#include "brp/mip/solution_file.hpp"

namespace brp::mip {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char ch : s) {
    if (ch == '\'') {
      out += "'\\''";
    } else {
      out += ch;
    }
  }
  return out + "'";
}

void replace_all(std::string& s, const std::string& from, const std::string& to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
}

class TempDir {
 public:
  TempDir() {
    std::string pattern = (fs::temp_directory_path() / "brp-mip-XXXXXX").string();
    if (::mkdtemp(pattern.data()) == nullptr) throw BackendError("cannot create a temporary directory");
    path_ = pattern;
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

}  // namespace

ExternalBackend::ExternalBackend(std::string command_template)
    : template_(std::move(command_template)) {
  if (template_.empty()) throw BackendUnavailable("backend unavailable: empty command template");
}

SolveOutcome ExternalBackend::solve(const Model& m, const Assignment* /*warm_start*/,
                                    const SolveBudget& budget) {
  const auto start = Clock::now();
  TempDir dir;
  const fs::path lp = dir.path() / "model.lp";
  const fs::path sol = dir.path() / "model.sol";
  write_text_file(lp.string(), emit_lp(m));

  std::string cmd = template_;
  const bool has_lp = cmd.find("{lp}") != std::string::npos;
  const bool has_sol = cmd.find("{sol}") != std::string::npos;
  replace_all(cmd, "{lp}", shell_quote(lp.string()));
  replace_all(cmd, "{sol}", shell_quote(sol.string()));
  replace_all(cmd, "{time}", std::to_string(budget.time_s));
  if (!has_lp) cmd += " " + shell_quote(lp.string());
  if (!has_sol) cmd += " " + shell_quote(sol.string());

  const int raw = std::system(cmd.c_str());
  if (raw == -1) throw BackendUnavailable("backend unavailable: cannot start a shell");
  const int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : 128 + WTERMSIG(raw);
  if (code == 126 || code == 127) {
    throw BackendUnavailable("backend unavailable: command not runnable (exit " +
                             std::to_string(code) + "): " + template_);
  }
  if (code != 0) throw BackendError("backend command failed with exit status " + std::to_string(code));
  if (!fs::exists(sol)) throw BackendError("backend command wrote no solution file");

  SolutionFile file;
  try {
    file = parse_solution_file(read_text_file(sol.string()));
  } catch (const ParseError& e) {
    throw BackendError(std::string("malformed solution file: ") + e.what());
  }

  SolveOutcome out;
  out.backend = id();
  out.status = file.status;
  if (file.status == SolveStatus::kOptimal || file.status == SolveStatus::kFeasible ||
      (file.status == SolveStatus::kBudget && !file.values.empty())) {
    Assignment a;
    try {
      a = assignment_from(m, file);
    } catch (const Error& e) {
      throw BackendError(std::string("malformed solution file: ") + e.what());
    }
    const FeasibilityReport report = check_assignment(m, a, 1e-5);
    if (!report.feasible()) {
      const Violation& v = report.violations.front();
      throw BackendError("backend solution violates " + v.constraint + " (" + v.group + ")");
    }
    out.objective = report.objective;
    if (file.status == SolveStatus::kOptimal) out.bound = report.objective;
    out.assignment = std::move(a);
  } else if (file.objective) {
    out.objective = *file.objective;
  }
  out.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

std::unique_ptr<Backend> external_backend_from_env() {
  const char* value = std::getenv(kBackendEnvVar);
  if (value == nullptr || *value == '\0') {
    throw BackendUnavailable(std::string("backend unavailable: ") + kBackendEnvVar + " is not set");
  }
  return std::make_unique<ExternalBackend>(value);
}

}  // namespace brp::mip
