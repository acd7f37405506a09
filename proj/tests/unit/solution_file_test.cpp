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

#include "brp/instance_io.hpp"
#include "brp/mip/builder.hpp"
#include "brp/mip/solution_file.hpp"

namespace brp::mip {
namespace {

TEST(SolutionFile, Parses) {
  const SolutionFile s = parse_solution_file(
      "# written by a solver\nstatus optimal\nobjective 1\nx_1_2_1 1\nym_2_1_1 1e0\nyp_2_3_1 +1\n"
      "z_1_3_1 -0\n");
  EXPECT_EQ(s.status, SolveStatus::kOptimal);
  ASSERT_TRUE(s.objective.has_value());
  EXPECT_DOUBLE_EQ(*s.objective, 1.0);
  EXPECT_DOUBLE_EQ(s.values.at("ym_2_1_1"), 1.0);
  EXPECT_DOUBLE_EQ(s.values.at("yp_2_3_1"), 1.0);
  EXPECT_EQ(s.values.size(), 4u);
}

TEST(SolutionFile, ScientificNotation) {
  const SolutionFile s = parse_solution_file("status feasible\nu_1_1 2.5E-1\nu_2_1 1e-12\n");
  EXPECT_DOUBLE_EQ(s.values.at("u_1_1"), 0.25);
  EXPECT_NEAR(s.values.at("u_2_1"), 0.0, 1e-11);
}

TEST(SolutionFile, Rejects) {
  EXPECT_THROW(parse_solution_file("x 1\n"), ParseError);
  EXPECT_THROW(parse_solution_file("status optimal\nstatus optimal\n"), ParseError);
  EXPECT_THROW(parse_solution_file("status great\n"), ParseError);
  EXPECT_THROW(parse_solution_file("status optimal\nx one\n"), ParseError);
  EXPECT_THROW(parse_solution_file("status optimal\nx 1 2\n"), ParseError);
  EXPECT_THROW(parse_solution_file("status optimal\nx 1\nx 0\n"), ParseError);
  EXPECT_THROW(parse_solution_file("status optimal\nx\n"), ParseError);
}

TEST(SolutionFile, RoundTrip) {
  SolutionFile s;
  s.status = SolveStatus::kBudget;
  s.objective = 3.5;
  s.values = {{"b", 0.125}, {"a", 1}};
  const std::string text = write_solution_file(s);
  EXPECT_EQ(text, "status budget\nobjective 3.5\na 1\nb 0.125\n");
  const SolutionFile back = parse_solution_file(text);
  EXPECT_EQ(back.status, s.status);
  EXPECT_EQ(back.values, s.values);
}

TEST(SolutionFile, MissingVariable) {
  const Model m = build_brp_m3(Configuration({{1, 2}, {}}), std::nullopt, 1, 1);
  SolutionFile s;
  s.status = SolveStatus::kOptimal;
  try {
    assignment_from(m, s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("no value for"), std::string::npos);
  }
}

}  // namespace
}  // namespace brp::mip
