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


#include "brp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "brp/bounds.hpp"
#include "brp/heuristics.hpp"
#include "brp/instance_io.hpp"
#include "brp/iterate.hpp"
#include "brp/mip/builder.hpp"
#include "brp/oracle.hpp"

namespace brp {
namespace {

using Clock = std::chrono::steady_clock;

// Uniform in [0, n) by rejection, independent of the standard library's
// distribution algorithms.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t excess = (kMax % n + 1) % n;
  std::uint64_t x = rng();
  while (x > kMax - excess) x = rng();
  return x % n;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

int parse_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(line, "'" + s + "' is not an integer");
}

bool needs_backend(const std::string& method) {
  return method == "m3" || method == "m3r" || method == "is" || method == "is*";
}

std::string status_of(const OptimalResult& r) {
  if (!r.feasible) return r.proven ? "infeasible" : "budget";
  return r.proven ? "optimal" : "budget";
}

std::string number(double v, const char* fmt = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

template <class T>
std::string cell(const std::optional<T>& v, const char* fmt = "%.6g") {
  return v ? number(static_cast<double>(*v), fmt) : std::string();
}

std::string quoted(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

constexpr const char* kBoundNames[5] = {"lb1", "lb2", "lb3", "lbn", "lb4"};

InstanceRow run_method(const std::string& method, const Configuration& c,
                       std::optional<int> height, const SuiteSpec& spec, mip::Backend* backend) {
  InstanceRow row;
  row.method = method;
  const auto start = Clock::now();
  SearchLimits limits;
  limits.time_budget_s = spec.time_budget_s;
  mip::SolveBudget budget;
  budget.time_s = spec.time_budget_s;
  try {
    if (method == "bounds") {
      const AllBounds b = all_bounds(c);
      const BoundReport* reports[5] = {&b.lb1, &b.lb2, &b.lb3, &b.lb_n, &b.lb4};
      for (int k = 0; k < 5; ++k) row.lb[k] = reports[k]->value;
      row.status = "ok";
      row.value = b.lb4.value;
    } else if (method == "oracle") {
      const OptimalResult r = solve_exact(c, limits);
      row.status = status_of(r);
      if (r.feasible) row.value = r.optimum;
    } else if (method == "m3" || method == "m3r") {
      const mip::PreparedInstance p = mip::prepare_instance(c);
      const int L = lb4_value(p.config);
      if (p.config.empty() || (method == "m3r" && L == 0)) {
        row.status = "optimal";
        row.value = direct_blockages(p.config);
      } else {
        mip::Model m;
        if (method == "m3") {
          const Configuration hc = p.config.with_height_limit(height);
          const OptimalResult restricted = solve_restricted(hc, limits);
          int T = restricted.optimum;
          if (!restricted.proven || !restricted.feasible) {
            T = greedy_min_max(p.config, height).relocations;
            row.note = "horizon from heuristic";
          }
          m = mip::build_brp_m3(p.config, height, L, std::max(T, L));
        } else {
          m = mip::build_brp_m3r(p.config, height, L);
        }
        const mip::SolveOutcome o = backend->solve(m, nullptr, budget);
        row.status = std::string(mip::to_string(o.status));
        if (o.assignment) row.value = o.objective;
      }
    } else if (method == "is" || method == "is*") {
      IsOptions options;
      options.budget = budget;
      if (method == "is*" && !height) throw Error("is* needs a height limit");
      const IsResult r = method == "is" ? run_is(c, height, *backend, options)
                                        : run_is_star(c, *height, *backend, options);
      row.status = r.result.feasible ? (r.result.proven ? "optimal" : "feasible") : "infeasible";
      if (r.result.feasible) row.value = r.result.optimum;
      row.note = std::to_string(r.trace.records.size()) + " iterations";
    } else {
      throw Error("unknown method " + method);
    }
  } catch (const std::exception& e) {
    row.status = "error";
    row.value.reset();
    row.note = e.what();
  }
  row.time_s = std::chrono::duration<double>(Clock::now() - start).count();
  return row;
}

}  // namespace

Configuration generate_instance(std::uint64_t seed, int h, int w) {
  if (h < 1 || w < 1) throw Error("instance shape needs h >= 1 and w >= 1");
  const int n = h * w;
  std::vector<Block> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  std::mt19937_64 rng(seed);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(draw(rng, static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
  }
  std::vector<Stack> stacks(static_cast<std::size_t>(w));
  for (int i = 0; i < n; ++i) stacks[static_cast<std::size_t>(i / h)].push_back(perm[static_cast<std::size_t>(i)]);
  return Configuration(std::move(stacks));
}

std::string SuiteGroup::label() const {
  return std::to_string(height) + "-" + std::to_string(stacks);
}

std::optional<int> SuiteSpec::height_for(const SuiteGroup& g) const {
  switch (height_mode) {
    case HeightMode::kNone: return std::nullopt;
    case HeightMode::kPlus2: return g.height + 2;
    case HeightMode::kExplicit: return explicit_height;
  }
  return std::nullopt;
}

SuiteSpec default_suite() {
  SuiteSpec s;
  s.groups = {{2, 2, 20, 1}, {3, 3, 20, 1}, {3, 4, 20, 1}, {4, 4, 20, 1}};
  s.methods = {"bounds", "oracle"};
  return s;
}

SuiteSpec parse_suite(std::string_view text) {
  SuiteSpec s;
  s.methods.clear();
  std::istringstream in{std::string(text)};
  std::string raw;
  int n = 0;
  while (std::getline(in, raw)) {
    ++n;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(n, "expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "group") {
      SuiteGroup g;
      const auto dash = value.find('-');
      const auto colon = value.find(':');
      if (dash == std::string::npos || colon == std::string::npos || dash > colon) {
        throw ParseError(n, "group must look like h-w:count[:seed]");
      }
      const auto colon2 = value.find(':', colon + 1);
      g.height = parse_int(value.substr(0, dash), n);
      g.stacks = parse_int(value.substr(dash + 1, colon - dash - 1), n);
      g.count = parse_int(value.substr(colon + 1, colon2 == std::string::npos
                                                      ? std::string::npos
                                                      : colon2 - colon - 1),
                          n);
      if (colon2 != std::string::npos) {
        g.seed = static_cast<std::uint64_t>(parse_int(value.substr(colon2 + 1), n));
      }
      if (g.height < 1 || g.stacks < 1 || g.count < 1) {
        throw ParseError(n, "group sizes and counts must be positive");
      }
      s.groups.push_back(g);
    } else if (key == "height") {
      if (value == "none") {
        s.height_mode = HeightMode::kNone;
      } else if (value == "plus2") {
        s.height_mode = HeightMode::kPlus2;
      } else {
        s.height_mode = HeightMode::kExplicit;
        s.explicit_height = parse_int(value, n);
        if (s.explicit_height < 1) throw ParseError(n, "height must be positive");
      }
    } else if (key == "methods") {
      std::vector<std::string> wanted;
      std::istringstream list(value);
      std::string item;
      while (std::getline(list, item, ',')) {
        item = trim(item);
        if (std::find(std::begin(kSuiteMethods), std::end(kSuiteMethods), item) ==
            std::end(kSuiteMethods)) {
          throw ParseError(n, "unknown method '" + item + "'");
        }
        wanted.push_back(item);
      }
      for (std::string_view m : kSuiteMethods) {
        if (std::find(wanted.begin(), wanted.end(), m) != wanted.end()) s.methods.emplace_back(m);
      }
    } else if (key == "time_budget") {
      try {
        s.time_budget_s = std::stod(value);
      } catch (const std::exception&) {
        throw ParseError(n, "'" + value + "' is not a number");
      }
      if (!(s.time_budget_s > 0)) throw ParseError(n, "time_budget must be positive");
    } else if (key == "threads") {
      s.threads = parse_int(value, n);
      if (s.threads < 1) throw ParseError(n, "threads must be positive");
    } else {
      throw ParseError(n, "unknown key '" + key + "'");
    }
  }
  if (s.groups.empty()) throw ParseError(n, "suite has no group");
  if (s.methods.empty()) throw ParseError(n, "suite has no method");
  return s;
}

SuiteReport run_suite(const SuiteSpec& spec, const BackendFactory& backends) {
  struct Task {
    const SuiteGroup* group;
    int index;
  };
  std::vector<Task> tasks;
  for (const SuiteGroup& g : spec.groups) {
    for (int i = 0; i < g.count; ++i) tasks.push_back({&g, i});
  }
  const bool with_backend = std::any_of(spec.methods.begin(), spec.methods.end(), needs_backend);
  const int workers = std::max(1, std::min<int>(spec.threads, static_cast<int>(tasks.size())));
  std::vector<std::unique_ptr<mip::Backend>> handles(static_cast<std::size_t>(workers));
  if (with_backend) {
    for (auto& h : handles) h = backends();
  }

  std::vector<std::vector<InstanceRow>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&](mip::Backend* backend) {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const SuiteGroup& g = *tasks[t].group;
      const std::uint64_t seed = g.seed + static_cast<std::uint64_t>(tasks[t].index);
      const std::optional<int> height = spec.height_for(g);
      for (const std::string& method : spec.methods) {
        InstanceRow row;
        try {
          const Configuration c = generate_instance(seed, g.height, g.stacks).with_height_limit(height);
          row = run_method(method, c, height, spec, backend);
        } catch (const std::exception& e) {
          row.method = method;
          row.status = "error";
          row.note = e.what();
        }
        row.group = g.label();
        row.instance = tasks[t].index;
        row.seed = seed;
        row.height = height;
        results[t].push_back(std::move(row));
      }
    }
  };
  if (workers == 1) {
    work(handles[0].get());
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, handles[static_cast<std::size_t>(w)].get());
    for (std::thread& th : pool) th.join();
  }

  SuiteReport report;
  for (auto& rows : results) {
    for (InstanceRow& r : rows) report.instances.push_back(std::move(r));
  }

  for (const SuiteGroup& g : spec.groups) {
    // Optimum per instance from any proven exact method.
    std::vector<std::optional<double>> opt(static_cast<std::size_t>(g.count));
    for (const InstanceRow& r : report.instances) {
      if (r.group != g.label() || r.status != "optimal" || !r.value) continue;
      if (r.method == "oracle" || r.method == "m3" || r.method == "is" || r.method == "is*") {
        opt[static_cast<std::size_t>(r.instance)] = r.value;
      }
    }
    for (const std::string& method : spec.methods) {
      SummaryRow s;
      s.group = g.label();
      s.height = spec.height_for(g);
      s.method = method;
      double time = 0;
      double value = 0;
      int valued = 0;
      double gap[5] = {};
      double rel[5] = {};
      int tight[5] = {};
      bool complete = method == "bounds";
      for (const InstanceRow& r : report.instances) {
        if (r.group != g.label() || r.method != method) continue;
        ++s.instances;
        time += r.time_s;
        if (r.status == "optimal") ++s.optimal;
        if (r.value && r.status != "infeasible" && r.status != "error") {
          ++s.feasible;
          value += *r.value;
          ++valued;
        }
        const auto& o = opt[static_cast<std::size_t>(r.instance)];
        if (!complete) continue;
        if (!o || !r.lb[4]) {
          complete = false;
          continue;
        }
        for (int k = 0; k < 5; ++k) {
          const double d = *o - *r.lb[k];
          gap[k] += d;
          rel[k] += *o > 0 ? d / *o : 0.0;
          tight[k] += d == 0;
        }
      }
      if (s.instances > 0) s.mean_time_s = time / s.instances;
      if (valued > 0) s.mean_value = value / valued;
      if (complete && s.instances > 0) {
        for (int k = 0; k < 5; ++k) {
          s.gap[k] = gap[k] / s.instances;
          s.rel_gap[k] = rel[k] / s.instances;
          s.tight_pct[k] = 100.0 * tight[k] / s.instances;
        }
      }
      report.summary.push_back(s);
    }
  }
  return report;
}

std::string SuiteReport::instances_csv() const {
  std::string out = "group,instance,seed,height,method,status,value,time_s";
  for (const char* b : kBoundNames) out += std::string(",") + b;
  out += ",note\n";
  for (const InstanceRow& r : instances) {
    out += r.group + "," + std::to_string(r.instance) + "," + std::to_string(r.seed) + "," +
           (r.height ? std::to_string(*r.height) : "none") + "," + r.method + "," + r.status +
           "," + cell(r.value) + "," + number(r.time_s, "%.6f");
    for (const auto& lb : r.lb) out += "," + cell(lb);
    out += "," + quoted(r.note) + "\n";
  }
  return out;
}

std::string SuiteReport::summary_csv() const {
  std::string out = "group,height,method,instances,feasible,optimal,mean_time_s,mean_value";
  for (const char* prefix : {"gap_", "rel_gap_", "tight_pct_"}) {
    for (const char* b : kBoundNames) out += std::string(",") + prefix + b;
  }
  out += "\n";
  for (const SummaryRow& s : summary) {
    out += s.group + "," + (s.height ? std::to_string(*s.height) : "none") + "," + s.method +
           "," + std::to_string(s.instances) + "," + std::to_string(s.feasible) + "," +
           std::to_string(s.optimal) + "," + number(s.mean_time_s, "%.6f") + "," +
           cell(s.mean_value, "%.4f");
    for (const auto* column : {s.gap, s.rel_gap, s.tight_pct}) {
      for (int k = 0; k < 5; ++k) out += "," + cell(column[k], "%.4f");
    }
    out += "\n";
  }
  return out;
}

}  // namespace brp
