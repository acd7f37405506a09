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


// brp: bounds, exact solvers, model export and experiments for block
// relocation instances.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "brp/bench.hpp"
#include "brp/bounds.hpp"
#include "brp/heuristics.hpp"
#include "brp/instance_io.hpp"
#include "brp/iterate.hpp"
#include "brp/mip/backend.hpp"
#include "brp/mip/builder.hpp"
#include "brp/mip/codec.hpp"
#include "brp/mip/lp_format.hpp"
#include "brp/oracle.hpp"

namespace {

namespace fs = std::filesystem;
using brp::Configuration;
using brp::MoveSequence;

enum ExitCode {
  kExitOk = 0,
  kExitOther = 1,
  kExitUsage = 2,
  kExitParse = 3,
  kExitInvalid = 4,
  kExitBackend = 5,
  kExitBudget = 6,
  kExitFile = 7,
};

class UsageError : public brp::Error {
 public:
  using Error::Error;
};

enum class Format { kText, kCsv, kJsonLines };

// Ordered key/value records. Text prints "key value" (moves bare), csv a
// key,value table, json-lines one object per record.
class Printer {
 public:
  Printer(Format format, std::ostream& out) : format_(format), out_(out) {}

  void put(const std::string& key, const std::string& value) { emit(key, value, false); }
  void put(const std::string& key, long long value) { emit(key, std::to_string(value), true); }
  void put(const std::string& key, double value) {
    std::ostringstream s;
    s << value;
    emit(key, s.str(), true);
  }
  void flag(const std::string& key) { emit(key, "", false); }

  void moves(const MoveSequence& seq) {
    std::istringstream lines(brp::serialize_move_sequence(seq));
    std::string line;
    while (std::getline(lines, line)) put("move", line);
  }

 private:
  void emit(const std::string& key, const std::string& value, bool numeric) {
    switch (format_) {
      case Format::kText:
        if (key == "move") {
          out_ << value << '\n';
        } else if (value.empty()) {
          out_ << key << '\n';
        } else {
          out_ << key << ' ' << value << '\n';
        }
        break;
      case Format::kCsv:
        if (!header_) out_ << "key,value\n";
        header_ = true;
        out_ << csv(key) << ',' << csv(value) << '\n';
        break;
      case Format::kJsonLines: {
        nlohmann::json j;
        j["key"] = key;
        if (numeric) {
          j["value"] = nlohmann::json::parse(value);
        } else {
          j["value"] = value;
        }
        out_ << j.dump() << '\n';
        break;
      }
    }
  }

  static std::string csv(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"') out += '"';
      out += ch;
    }
    return out + "\"";
  }

  Format format_;
  std::ostream& out_;
  bool header_ = false;
};

struct Common {
  std::string format = "text";
  std::string height = "none";
  bool renumber = false;
  double time_limit = 120.0;
  std::int64_t node_limit = 20'000'000;
};

Format format_of(const std::string& s) {
  if (s == "text") return Format::kText;
  if (s == "csv") return Format::kCsv;
  if (s == "json-lines") return Format::kJsonLines;
  throw UsageError("unknown format '" + s + "'");
}

std::string read_file(const std::string& path) {
  if (!fs::exists(path)) throw brp::FileError("no such file: " + path);
  return brp::read_text_file(path);
}

Configuration load(const std::string& path, const Common& common) {
  brp::ParseOptions options;
  options.renumber = common.renumber;
  return brp::parse_instance(read_file(path), options);
}

std::optional<int> resolve_height(const std::string& mode, const Configuration& c) {
  if (mode == "none") return std::nullopt;
  if (mode == "plus2") return c.max_height() + 2;
  int h = 0;
  try {
    std::size_t used = 0;
    h = std::stoi(mode, &used);
    if (used != mode.size()) throw std::invalid_argument(mode);
  } catch (const std::exception&) {
    throw UsageError("--height expects none, plus2 or a positive integer, got '" + mode + "'");
  }
  if (h < 1) throw UsageError("--height must be positive");
  if (h < c.max_height()) {
    throw brp::InvalidConfiguration("height limit " + std::to_string(h) +
                                    " is below the current height " +
                                    std::to_string(c.max_height()));
  }
  return h;
}

brp::SearchLimits limits_of(const Common& common) {
  brp::SearchLimits limits;
  limits.time_budget_s = common.time_limit;
  limits.node_budget = common.node_limit;
  return limits;
}

std::string join(const std::vector<brp::Block>& blocks) {
  std::string out = "{";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(blocks[i]);
  }
  return out + "}";
}

void write_or_skip(const std::string& path, const std::string& text) {
  if (!path.empty()) brp::write_text_file(path, text);
}

// bounds -------------------------------------------------------------------

struct BoundsArgs {
  std::string instance;
  bool certificates = false;
  bool continue_pairs = false;
};

int run_bounds(const BoundsArgs& a, const Common& common, Printer& out) {
  const Configuration c = load(a.instance, common);
  brp::BoundOptions options;
  options.continue_after_failed_pair = a.continue_pairs;
  const brp::AllBounds b = brp::all_bounds(c, options);
  out.put("LB1", static_cast<long long>(b.lb1.value));
  out.put("LB2", static_cast<long long>(b.lb2.value));
  out.put("LB3", static_cast<long long>(b.lb3.value));
  out.put("LB-N", static_cast<long long>(b.lb_n.value));
  out.put("LB4", static_cast<long long>(b.lb4.value));
  if (a.certificates) {
    if (!b.lb4.retrieved.empty()) out.put("retrieved", join(b.lb4.retrieved));
    out.put("BP", join(b.lb4.bp));
    out.put("LB3.layers", static_cast<long long>(b.lb3.layers_k));
    if (b.lb_n.p4) out.put("LB-N.p4", join(*b.lb_n.p4));
    for (const brp::OverlappedLayers& p : b.lb4.pairs) {
      out.put("LB4.pair", "upper " + join(p.upper.blocks()) + " lower " +
                              join(p.lower.blocks()) + " shared " +
                              std::to_string(p.shared.block));
    }
    for (const brp::VirtualLayer& l : b.lb4.layers) out.put("LB4.layer", join(l.blocks()));
  }
  return kExitOk;
}

// oracle -------------------------------------------------------------------

struct OracleArgs {
  std::string instance;
  std::string out;
  bool restricted = false;
};

int run_oracle(const OracleArgs& a, const Common& common, Printer& out) {
  const Configuration raw = load(a.instance, common);
  const Configuration c = raw.with_height_limit(resolve_height(common.height, raw));
  const brp::SearchLimits limits = limits_of(common);
  const brp::OptimalResult r =
      a.restricted ? brp::solve_restricted(c, limits) : brp::solve_exact(c, limits);
  out.put("nodes", static_cast<long long>(r.nodes));
  if (!r.feasible) {
    out.flag(r.proven ? "infeasible" : "budget");
    return r.proven ? kExitInvalid : kExitBudget;
  }
  out.put(r.proven ? "optimal" : "best", static_cast<long long>(r.optimum));
  out.moves(r.witness);
  write_or_skip(a.out, brp::serialize_move_sequence(r.witness));
  return r.proven ? kExitOk : kExitBudget;
}

// solve / emit -------------------------------------------------------------

struct ModelArgs {
  std::string instance;
  std::string method = "is";
  std::optional<int> L;
  std::optional<int> T;
  std::string backend = "internal";
  std::string command;
  std::string out;
  std::string trace;
};

std::unique_ptr<brp::mip::Backend> make_backend(const ModelArgs& a) {
  if (a.backend == "internal") {
    if (!a.command.empty()) throw UsageError("--command needs --backend external");
    return std::make_unique<brp::mip::InternalBackend>();
  }
  if (a.backend == "external") {
    if (!a.command.empty()) return std::make_unique<brp::mip::ExternalBackend>(a.command);
    return brp::mip::external_backend_from_env();
  }
  throw UsageError("unknown backend '" + a.backend + "'");
}

int default_horizon(const Configuration& model_bay, std::optional<int> height,
                    const Common& common) {
  const brp::OptimalResult r =
      brp::solve_restricted(model_bay.with_height_limit(height), limits_of(common));
  if (r.proven && r.feasible) return r.optimum;
  return brp::greedy_min_max(model_bay, height).relocations;
}

brp::mip::Model build_model(const ModelArgs& a, const brp::mip::PreparedInstance& p,
                            std::optional<int> height, const Common& common) {
  const int L = a.L.value_or(brp::lb4_value(p.config));
  if (a.method == "m3r") {
    if (a.T) throw UsageError("--T applies to m3 only");
    return brp::mip::build_brp_m3r(p.config, height, L);
  }
  const int T = a.T ? *a.T : std::max(L, default_horizon(p.config, height, common));
  if (T < L) throw UsageError("--T must be at least --L");
  return brp::mip::build_brp_m3(p.config, height, L, T);
}

int status_exit(brp::mip::SolveStatus s) {
  switch (s) {
    case brp::mip::SolveStatus::kOptimal: return kExitOk;
    case brp::mip::SolveStatus::kInfeasible: return kExitInvalid;
    default: return kExitBudget;
  }
}

int run_iterative(const ModelArgs& a, const Configuration& c, std::optional<int> height,
                  const Common& common, Printer& out) {
  if (a.T) throw UsageError("--T does not apply to " + a.method);
  if (a.method == "is*" && !height) throw UsageError("is* needs --height");
  auto backend = make_backend(a);
  brp::IsOptions options;
  options.initial_bound = a.L;
  options.budget.time_s = common.time_limit;
  options.budget.nodes = common.node_limit;
  const brp::IsResult r = a.method == "is" ? brp::run_is(c, height, *backend, options)
                                           : brp::run_is_star(c, *height, *backend, options);
  for (const brp::IterationRecord& rec : r.trace.records) {
    std::ostringstream s;
    s << "phase " << rec.phase << " L " << rec.lower_bound << " objective " << rec.objective
      << " status " << brp::mip::to_string(rec.status);
    out.put("iteration", s.str());
  }
  write_or_skip(a.trace, r.trace.to_csv());
  if (a.method == "is*") {
    out.put("exit", r.trace.phase1_exit                     ? "phase1"
                    : r.trace.exit == brp::IsExit::kRepaired ? "repaired"
                                                             : "phase2");
  }
  out.put("bound", static_cast<long long>(r.trace.best_bound));
  if (!r.result.feasible) {
    out.flag("infeasible");
    return kExitInvalid;
  }
  const bool proven = r.result.proven;
  out.put(proven ? "optimal" : "feasible", static_cast<long long>(r.result.optimum));
  out.moves(r.result.witness);
  write_or_skip(a.out, brp::serialize_move_sequence(r.result.witness));
  return proven ? kExitOk : kExitBudget;
}

int run_solve(const ModelArgs& a, const Common& common, Printer& out) {
  const Configuration raw = load(a.instance, common);
  const std::optional<int> height = resolve_height(common.height, raw);
  const Configuration c = raw.with_height_limit(height);
  if (a.method == "is" || a.method == "is*") return run_iterative(a, c, height, common, out);
  if (a.method != "m3" && a.method != "m3r") throw UsageError("unknown method '" + a.method + "'");

  const brp::mip::PreparedInstance p = brp::mip::prepare_instance(c);
  if (a.method == "m3r" && a.L.value_or(brp::lb4_value(p.config)) == 0) {
    out.put("optimal", static_cast<long long>(brp::direct_blockages(p.config)));
    out.put("blockages", static_cast<long long>(brp::direct_blockages(p.config)));
    out.moves(p.prefix);
    return kExitOk;
  }
  auto backend = make_backend(a);
  const brp::mip::Model m = build_model(a, p, height, common);
  brp::mip::SolveBudget budget;
  budget.time_s = common.time_limit;
  budget.nodes = common.node_limit;
  const brp::mip::SolveOutcome o = backend->solve(m, nullptr, budget);
  out.put("backend", o.backend);
  out.put("L", static_cast<long long>(m.info().lower_bound));
  out.put("T", static_cast<long long>(m.info().turns));
  if (!o.assignment) {
    out.flag(std::string(brp::mip::to_string(o.status)));
    if (o.bound) out.put("bound", *o.bound);
    return status_exit(o.status);
  }
  MoveSequence seq = brp::mip::restore_numbering(p, brp::mip::decode_assignment(m, *o.assignment));
  if (a.method == "m3") {
    if (height && !brp::respects_height(raw, seq, *height)) {
      seq = brp::settle_turn_heights(raw, seq, *height);
    }
    brp::validate_sequence(c, seq, height);
  } else {
    out.put("blockages",
            static_cast<long long>(o.objective + 0.5) - m.info().lower_bound);
  }
  out.put(std::string(brp::mip::to_string(o.status)), static_cast<long long>(o.objective + 0.5));
  out.moves(seq);
  write_or_skip(a.out, brp::serialize_move_sequence(seq));
  return status_exit(o.status);
}

int run_emit(const ModelArgs& a, const Common& common, Printer& out) {
  if (a.method != "m3" && a.method != "m3r") throw UsageError("--variant must be m3 or m3r");
  const Configuration raw = load(a.instance, common);
  const std::optional<int> height = resolve_height(common.height, raw);
  const brp::mip::PreparedInstance p = brp::mip::prepare_instance(raw.with_height_limit(height));
  try {
    const std::string text = brp::mip::emit_lp(build_model(a, p, height, common));
    if (a.out.empty()) {
      std::cout << text;
    } else {
      brp::write_text_file(a.out, text);
    }
  } catch (const brp::mip::DegenerateModel& e) {
    out.put("degenerate", std::string("L=0 model, value is the direct blockage count"));
    out.put("blockages", static_cast<long long>(e.blockages()));
  }
  return kExitOk;
}

// validate / bench / gen ---------------------------------------------------

struct ValidateArgs {
  std::string instance;
  std::string sequence;
};

int run_validate(const ValidateArgs& a, const Common& common, Printer& out) {
  const Configuration raw = load(a.instance, common);
  const std::optional<int> height = resolve_height(common.height, raw);
  const MoveSequence seq = brp::parse_move_sequence(read_file(a.sequence));
  try {
    const int n = brp::validate_sequence(raw, seq, height);
    out.put("valid", static_cast<long long>(n));
    return kExitOk;
  } catch (const brp::IllegalMove& e) {
    out.put("invalid", std::string(e.what()));
    return kExitInvalid;
  }
}

struct BenchArgs {
  std::string suite;
  std::string out;
  std::string instances_out;
  std::optional<int> threads;
  std::string backend = "internal";
  std::string command;
};

int run_bench(const BenchArgs& a, Printer& out) {
  brp::SuiteSpec spec = a.suite.empty() ? brp::default_suite() : brp::parse_suite(read_file(a.suite));
  if (a.threads) spec.threads = *a.threads;
  ModelArgs backend_args;
  backend_args.backend = a.backend;
  backend_args.command = a.command;
  const brp::SuiteReport report =
      brp::run_suite(spec, [&] { return make_backend(backend_args); });
  write_or_skip(a.instances_out, report.instances_csv());
  if (a.out.empty()) {
    std::cout << report.summary_csv();
  } else {
    brp::write_text_file(a.out, report.summary_csv());
    out.put("summary", a.out);
  }
  return kExitOk;
}

struct GenArgs {
  std::string shape = "3-3";
  int h = 3;
  int w = 3;
  std::uint64_t seed = 1;
  int count = 1;
  std::string out;
};

int run_gen(GenArgs a, Printer& out) {
  const auto dash = a.shape.find('-');
  try {
    if (dash == std::string::npos) throw std::invalid_argument(a.shape);
    a.h = std::stoi(a.shape.substr(0, dash));
    a.w = std::stoi(a.shape.substr(dash + 1));
  } catch (const std::exception&) {
    throw UsageError("shape must look like h-w, got '" + a.shape + "'");
  }
  if (a.h < 1 || a.w < 1) throw UsageError("shape needs positive h and w");
  if (a.count > 1 && a.out.empty()) throw UsageError("--count above 1 needs --out DIR");
  for (int i = 0; i < a.count; ++i) {
    const std::uint64_t seed = a.seed + static_cast<std::uint64_t>(i);
    const std::string text = brp::serialize_instance(brp::generate_instance(seed, a.h, a.w));
    if (a.out.empty()) {
      std::cout << text;
    } else if (a.count == 1) {
      brp::write_text_file(a.out, text);
      out.put("wrote", a.out);
    } else {
      fs::create_directories(a.out);
      const fs::path file = fs::path(a.out) / (std::to_string(a.h) + "-" + std::to_string(a.w) +
                                               "_" + std::to_string(seed) + ".dat");
      brp::write_text_file(file, text);
      out.put("wrote", file.string());
    }
  }
  return kExitOk;
}

void add_common(CLI::App* cmd, Common& common, bool height, bool budget) {
  cmd->add_option("--format", common.format, "Output format: text, csv or json-lines")
      ->check(CLI::IsMember({"text", "csv", "json-lines"}));
  cmd->add_flag("--renumber", common.renumber, "Accept any distinct priorities");
  if (height) {
    cmd->add_option("--height", common.height, "Height limit: none, plus2 or an integer");
  }
  if (budget) {
    cmd->add_option("--time-limit", common.time_limit, "Seconds per search or solve")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--node-limit", common.node_limit, "Search nodes per solve")
        ->check(CLI::PositiveNumber);
  }
}

void add_model_options(CLI::App* cmd, ModelArgs& a) {
  cmd->add_option("--L", a.L, "Lower bound L (default: LB4)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--T", a.T, "Turn horizon T for m3 (default: restricted optimum)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("-o,--out", a.out, "Output file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block relocation toolkit"};
  app.require_subcommand(1);
  Common common;
  int code = kExitOk;

  BoundsArgs bounds;
  auto* c_bounds = app.add_subcommand("bounds", "Print LB1, LB2, LB3, LB-N and LB4");
  c_bounds->add_option("instance", bounds.instance, "Instance file")->required();
  c_bounds->add_flag("--certificates", bounds.certificates, "Also print the certificates");
  c_bounds->add_flag("--continue-after-failed-pair", bounds.continue_pairs,
                     "Keep searching overlapped layers after a failed candidate");
  add_common(c_bounds, common, false, false);

  OracleArgs oracle;
  auto* c_oracle = app.add_subcommand("oracle", "Solve exactly by search");
  c_oracle->add_option("instance", oracle.instance, "Instance file")->required();
  c_oracle->add_flag("--restricted", oracle.restricted, "Only relocate blocks above the target");
  c_oracle->add_option("-o,--out", oracle.out, "Write the move sequence to this file");
  add_common(c_oracle, common, true, true);

  ModelArgs solve;
  auto* c_solve = app.add_subcommand("solve", "Solve through the relocation models");
  c_solve->add_option("instance", solve.instance, "Instance file")->required();
  c_solve->add_option("--method", solve.method, "m3, m3r, is or is*")
      ->check(CLI::IsMember({"m3", "m3r", "is", "is*"}));
  c_solve->add_option("--backend", solve.backend, "internal or external")
      ->check(CLI::IsMember({"internal", "external"}));
  c_solve->add_option("--command", solve.command,
                      "External command template with {lp}, {sol} and {time}");
  c_solve->add_option("--trace", solve.trace, "Write the iteration trace as CSV");
  add_model_options(c_solve, solve);
  add_common(c_solve, common, true, true);

  ModelArgs emit;
  emit.method = "m3";
  auto* c_emit = app.add_subcommand("emit", "Write a relocation model as LP text");
  c_emit->add_option("instance", emit.instance, "Instance file")->required();
  c_emit->add_option("--variant", emit.method, "m3 or m3r")->check(CLI::IsMember({"m3", "m3r"}));
  add_model_options(c_emit, emit);
  add_common(c_emit, common, true, true);

  ValidateArgs validate;
  auto* c_validate = app.add_subcommand("validate", "Replay a move-sequence file");
  c_validate->add_option("instance", validate.instance, "Instance file")->required();
  c_validate->add_option("sequence", validate.sequence, "Move-sequence file")->required();
  add_common(c_validate, common, true, false);

  BenchArgs bench;
  auto* c_bench = app.add_subcommand("bench", "Run an experiment suite");
  c_bench->add_option("suite", bench.suite, "Suite file (default: built-in desk suite)");
  c_bench->add_option("-o,--out", bench.out, "Write the summary CSV here");
  c_bench->add_option("--instances", bench.instances_out, "Write per-instance rows here");
  c_bench->add_option("--threads", bench.threads, "Worker threads")->check(CLI::PositiveNumber);
  c_bench->add_option("--backend", bench.backend, "internal or external")
      ->check(CLI::IsMember({"internal", "external"}));
  c_bench->add_option("--command", bench.command, "External command template");
  add_common(c_bench, common, false, false);

  GenArgs gen;
  auto* c_gen = app.add_subcommand("gen", "Write random instances");
  c_gen->add_option("shape", gen.shape, "h-w: stack height and stack count (default 3-3)");
  c_gen->add_option("--seed", gen.seed, "Seed of the first instance");
  c_gen->add_option("--count", gen.count, "Number of instances")->check(CLI::PositiveNumber);
  c_gen->add_option("-o,--out", gen.out, "File, or directory when --count > 1");
  add_common(c_gen, common, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    Printer out(format_of(common.format), std::cout);
    if (*c_bounds) code = run_bounds(bounds, common, out);
    if (*c_oracle) code = run_oracle(oracle, common, out);
    if (*c_solve) code = run_solve(solve, common, out);
    if (*c_emit) code = run_emit(emit, common, out);
    if (*c_validate) code = run_validate(validate, common, out);
    if (*c_bench) code = run_bench(bench, out);
    if (*c_gen) code = run_gen(gen, out);
  } catch (const UsageError& e) {
    std::cerr << "brp: " << e.what() << '\n';
    return kExitUsage;
  } catch (const brp::FileError& e) {
    std::cerr << "brp: " << e.what() << '\n';
    return kExitFile;
  } catch (const brp::ParseError& e) {
    std::cerr << "brp: parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const brp::InvalidConfiguration& e) {
    std::cerr << "brp: invalid instance: " << e.what() << '\n';
    return kExitParse;
  } catch (const brp::mip::BackendUnavailable& e) {
    std::cerr << "brp: " << e.what() << '\n';
    return kExitBackend;
  } catch (const brp::mip::BackendError& e) {
    std::cerr << "brp: backend error: " << e.what() << '\n';
    return kExitBackend;
  } catch (const brp::BudgetExceeded& e) {
    std::cerr << "brp: " << e.what() << '\n';
    return kExitBudget;
  } catch (const brp::IllegalMove& e) {
    std::cerr << "brp: invalid sequence: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "brp: " << e.what() << '\n';
    return kExitOther;
  }
  return code;
}
