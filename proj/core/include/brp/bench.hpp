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


// Random instances and batch experiments with CSV reports.

#ifndef BRP_BENCH_HPP_
#define BRP_BENCH_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brp/configuration.hpp"
#include "brp/mip/backend.hpp"

namespace brp {

// A uniformly random permutation of 1..h*w dealt bottom to top into w stacks
// of height h. The same seed gives the same bay on every platform.
Configuration generate_instance(std::uint64_t seed, int h, int w);

enum class HeightMode { kNone, kPlus2, kExplicit };

struct SuiteGroup {
  int height = 0;  // current stack height h
  int stacks = 0;  // w
  int count = 0;
  std::uint64_t seed = 1;  // instance i uses seed + i

  std::string label() const;  // "h-w"
};

inline constexpr std::string_view kSuiteMethods[] = {"bounds", "oracle", "m3", "m3r", "is", "is*"};

struct SuiteSpec {
  std::vector<SuiteGroup> groups;
  HeightMode height_mode = HeightMode::kNone;
  int explicit_height = 0;
  std::vector<std::string> methods;  // subset of kSuiteMethods, in this order
  double time_budget_s = 60.0;        // per instance and method
  int threads = 1;

  // Limit for a group, if any.
  std::optional<int> height_for(const SuiteGroup& g) const;
};

// Groups 2-2, 3-3, 3-4 and 4-4 with 20 instances each, bounds and oracle.
SuiteSpec default_suite();

// key=value lines; '#' starts a comment. Keys:
//   group   = h-w:count[:seed]   (repeatable)
//   height  = none | plus2 | <int>
//   methods = comma-separated list
//   time_budget = seconds
//   threads = worker count
// Throws ParseError.
SuiteSpec parse_suite(std::string_view text);

struct InstanceRow {
  std::string group;
  int instance = 0;
  std::uint64_t seed = 0;
  std::optional<int> height;
  std::string method;
  std::string status;  // optimal | feasible | infeasible | budget | error
  std::optional<double> value;
  double time_s = 0.0;
  std::optional<int> lb[5];  // LB1, LB2, LB3, LB-N, LB4; bounds rows only
  std::string note;
};

struct SummaryRow {
  std::string group;
  std::optional<int> height;
  std::string method;
  int instances = 0;
  int feasible = 0;
  int optimal = 0;
  double mean_time_s = 0.0;
  std::optional<double> mean_value;
  // Bounds rows with a known optimum on every instance: mean opt - LB,
  // mean (opt - LB) / opt, and the share of instances with LB = opt.
  std::optional<double> gap[5];
  std::optional<double> rel_gap[5];
  std::optional<double> tight_pct[5];
};

struct SuiteReport {
  std::vector<InstanceRow> instances;
  std::vector<SummaryRow> summary;

  std::string instances_csv() const;
  std::string summary_csv() const;
};

using BackendFactory = std::function<std::unique_ptr<mip::Backend>()>;

// Per-instance failures become rows with status "error". Each worker thread
// gets its own backend from the factory; rows keep suite order.
SuiteReport run_suite(const SuiteSpec& spec, const BackendFactory& backends);

}  // namespace brp

#endif  // BRP_BENCH_HPP_
