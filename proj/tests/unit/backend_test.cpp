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


#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <random>

#include <unistd.h>

#include "brp/bounds.hpp"
#include "brp/instance_io.hpp"
#include "brp/mip/backend.hpp"
#include "brp/mip/builder.hpp"
#include "brp/mip/codec.hpp"
#include "brp/mip/relaxation_search.hpp"
#include "brp/mip/solution_file.hpp"
#include "brp/oracle.hpp"
#include "support/reference.hpp"

namespace brp::mip {
namespace {

namespace fs = std::filesystem;

const Configuration kTiny({{1, 2}, {}});

Model tiny_m3() { return build_brp_m3(kTiny, std::nullopt, 1, 1); }

TEST(InternalBackend, TinyM3) {
  InternalBackend b;
  const SolveOutcome o = b.solve(tiny_m3(), nullptr, {});
  EXPECT_EQ(o.status, SolveStatus::kOptimal);
  EXPECT_DOUBLE_EQ(o.objective, 1.0);
  ASSERT_TRUE(o.assignment.has_value());
  EXPECT_TRUE(check_assignment(tiny_m3(), *o.assignment).feasible());
  EXPECT_EQ(validate_sequence(kTiny, decode_assignment(tiny_m3(), *o.assignment)), 1);
  EXPECT_EQ(o.backend, "internal");
}

TEST(InternalBackend, TinyM3R) {
  InternalBackend b;
  const SolveOutcome o = b.solve(build_brp_m3r(kTiny, std::nullopt, 1), nullptr, {});
  EXPECT_EQ(o.status, SolveStatus::kOptimal);
  EXPECT_DOUBLE_EQ(o.objective, 1.0);
}

TEST(InternalBackend, EmptyModel) {
  InternalBackend b;
  const Model m = build_brp_m3(Configuration(std::vector<Stack>(2)), std::nullopt, 0, 0);
  const SolveOutcome o = b.solve(m, nullptr, {});
  EXPECT_EQ(o.status, SolveStatus::kOptimal);
  EXPECT_DOUBLE_EQ(o.objective, 0.0);
}

TEST(InternalBackend, ShortHorizonIsInfeasible) {
  InternalBackend b;
  const Configuration c({{1, 3, 2}, {}});
  const SolveOutcome o = b.solve(build_brp_m3(c, std::nullopt, 1, 1), nullptr, {});
  EXPECT_EQ(o.status, SolveStatus::kInfeasible);
  EXPECT_FALSE(o.assignment.has_value());
}

TEST(InternalBackend, MatchesOracleAndRelaxes) {
  std::mt19937 rng(73);
  InternalBackend b;
  for (int i = 0; i < 40; ++i) {
    const PreparedInstance p = prepare_instance(brp_test::random_bay(rng, 3, 3));
    if (p.config.empty()) continue;
    const int opt = solve_exact(p.config).optimum;
    const int lb = lb4_value(p.config);
    const SolveOutcome full = b.solve(build_brp_m3(p.config, std::nullopt, lb, opt + 1), nullptr, {});
    EXPECT_EQ(full.status, SolveStatus::kOptimal);
    EXPECT_DOUBLE_EQ(full.objective, opt);
    if (lb == 0) continue;
    const Model r = build_brp_m3r(p.config, std::nullopt, lb);
    const SolveOutcome relaxed = b.solve(r, nullptr, {});
    EXPECT_EQ(relaxed.status, SolveStatus::kOptimal);
    EXPECT_LE(relaxed.objective, opt);
    if (lb == opt) EXPECT_DOUBLE_EQ(relaxed.objective, opt);
    if (relaxed.objective > lb) {
      const MoveSequence prefix = decode_assignment(r, *relaxed.assignment);
      EXPECT_GT(direct_blockages(replay(p.config, prefix)), 0);
    }
  }
}

TEST(InternalBackend, BudgetStatus) {
  InternalBackend b;
  const PreparedInstance p = prepare_instance(
      parse_instance(read_text_file(std::string(BRP_TEST_DATA) + "/fig2b.dat")));
  SolveBudget tight;
  tight.nodes = 10;
  const SolveOutcome o = b.solve(build_brp_m3r(p.config, std::nullopt, 12), nullptr, tight);
  EXPECT_TRUE(o.status == SolveStatus::kBudget || o.status == SolveStatus::kFeasible);
}

TEST(RelaxationSearch, MatchesExhaustiveReference) {
  std::mt19937 rng(79);
  for (int i = 0; i < 60; ++i) {
    const Configuration c = auto_retrieve(brp_test::random_bay(rng, 2 + i % 2, 3)).config;
    if (c.empty()) continue;
    const int turns = 1 + i % 3;
    const int h = i % 2 ? 4 : 0;
    SearchLimits limits;
    limits.height_rule = HeightRule::kTurnEnd;
    const Configuration cc = h ? c.with_height_limit(h) : c;
    const RelaxationResult r = min_blockages_after(cc, turns, limits);
    const int ref = brp_test::reference_min_blockages(brp_test::bay_of(c), turns, h);
    ASSERT_TRUE(r.proven);
    EXPECT_EQ(r.feasible, ref >= 0) << serialize_instance(c);
    if (ref >= 0) EXPECT_EQ(r.blockages, ref) << serialize_instance(c) << " turns " << turns;
  }
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("brp-test-" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

std::string tiny_solution(SolveStatus status) {
  const Model m = tiny_m3();
  const MoveSequence seq{{Move::Relocate(2, 0, 1), Move::Retrieve(1, 0), Move::Retrieve(2, 1)}};
  SolutionFile s;
  s.status = status;
  s.objective = 1;
  for (const auto& [k, v] : encode_sequence(m, seq)) s.values[k] = v;
  return write_solution_file(s);
}

TEST(ExternalBackend, ReadsSolutionFile) {
  TempDir dir;
  write_text_file(dir / "canned.sol", tiny_solution(SolveStatus::kOptimal));
  ExternalBackend b("cp " + (dir / "canned.sol").string() + " {sol} # {lp} {time}");
  const SolveOutcome o = b.solve(tiny_m3(), nullptr, {});
  EXPECT_EQ(o.status, SolveStatus::kOptimal);
  EXPECT_DOUBLE_EQ(o.objective, 1.0);
  ASSERT_TRUE(o.bound.has_value());
  EXPECT_EQ(o.backend, "external");
}

TEST(ExternalBackend, SeesTheLpFile) {
  TempDir dir;
  const std::string copy = (dir / "seen.lp").string();
  write_text_file(dir / "canned.sol", tiny_solution(SolveStatus::kOptimal));
  ExternalBackend b("cp {lp} " + copy + " && cp " + (dir / "canned.sol").string() + " {sol}");
  b.solve(tiny_m3(), nullptr, {});
  EXPECT_NE(read_text_file(copy).find("Subject To"), std::string::npos);
}

TEST(ExternalBackend, Failures) {
  TempDir dir;
  EXPECT_THROW(ExternalBackend("brp-no-such-solver-xyz {lp} {sol}").solve(tiny_m3(), nullptr, {}),
               BackendUnavailable);
  EXPECT_THROW(ExternalBackend("exit 3 #").solve(tiny_m3(), nullptr, {}), BackendError);
  EXPECT_THROW(ExternalBackend("true").solve(tiny_m3(), nullptr, {}), BackendError);
  write_text_file(dir / "bad.sol", "status optimal\nx_1_2_1 maybe\n");
  EXPECT_THROW(ExternalBackend("cp " + (dir / "bad.sol").string() + " {sol} #")
                   .solve(tiny_m3(), nullptr, {}),
               BackendError);
  write_text_file(dir / "partial.sol", "status optimal\nx_2_1_1 1\n");
  EXPECT_THROW(ExternalBackend("cp " + (dir / "partial.sol").string() + " {sol} #")
                   .solve(tiny_m3(), nullptr, {}),
               BackendError);
}

TEST(ExternalBackend, RejectsInfeasibleAnswer) {
  TempDir dir;
  std::string text = tiny_solution(SolveStatus::kOptimal);
  text.replace(text.find("z_1_3_1 1"), 9, "z_1_3_1 0");
  write_text_file(dir / "wrong.sol", text);
  EXPECT_THROW(ExternalBackend("cp " + (dir / "wrong.sol").string() + " {sol} #")
                   .solve(tiny_m3(), nullptr, {}),
               BackendError);
}

TEST(ExternalBackend, InfeasibleStatusNeedsNoValues) {
  TempDir dir;
  write_text_file(dir / "inf.sol", "status infeasible\n");
  const SolveOutcome o = ExternalBackend("cp " + (dir / "inf.sol").string() + " {sol} #")
                             .solve(tiny_m3(), nullptr, {});
  EXPECT_EQ(o.status, SolveStatus::kInfeasible);
  EXPECT_FALSE(o.assignment.has_value());
}

TEST(ExternalBackend, UnsetEnvironment) {
  ::unsetenv(kBackendEnvVar);
  try {
    external_backend_from_env();
    FAIL();
  } catch (const BackendUnavailable& e) {
    EXPECT_NE(std::string(e.what()).find("backend unavailable"), std::string::npos);
  }
  ::setenv(kBackendEnvVar, "cat {lp}", 1);
  EXPECT_EQ(external_backend_from_env()->id(), "external");
  ::unsetenv(kBackendEnvVar);
}

bool have_scipy() {
  return std::system("python3 -c 'import scipy.optimize' >/dev/null 2>&1") == 0;
}

TEST(ExternalBackend, PythonAdapterAgreesWithInternal) {
  if (!have_scipy()) GTEST_SKIP() << "python3 with scipy is not installed";
  ExternalBackend ext(std::string("python3 ") + BRP_ADAPTER + " {lp} {sol} {time}");
  InternalBackend in;
  std::mt19937 rng(83);
  for (int i = 0; i < 6; ++i) {
    const PreparedInstance p = prepare_instance(brp_test::random_bay(rng, 2, 3));
    if (p.config.empty()) continue;
    const int lb = lb4_value(p.config);
    const std::optional<int> H = i % 2 ? std::optional<int>(3) : std::nullopt;
    const Model m = build_brp_m3(p.config, H, lb, lb + 2);
    const SolveOutcome a = ext.solve(m, nullptr, {});
    const SolveOutcome b = in.solve(m, nullptr, {});
    EXPECT_EQ(a.status, b.status) << serialize_instance(p.config);
    if (b.status == SolveStatus::kOptimal) EXPECT_NEAR(a.objective, b.objective, 1e-6);
    if (lb > 0) {
      const Model r = build_brp_m3r(p.config, H, lb);
      EXPECT_NEAR(ext.solve(r, nullptr, {}).objective, in.solve(r, nullptr, {}).objective, 1e-6);
    }
  }
}

}  // namespace
}  // namespace brp::mip
