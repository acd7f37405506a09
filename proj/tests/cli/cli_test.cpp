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

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;

  bool has(const std::string& s) const { return out.find(s) != std::string::npos; }
};

Result brp(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " BRP_CLI " " + args + " 2>&1";
  Result r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  std::array<char, 4096> buf;
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(BRP_TEST_DATA) + "/" + name; }

class Scratch : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("brp-cli-" + std::to_string(::getpid()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
  }

 private:
  fs::path dir_;
};

TEST(Cli, BoundsFig2b) {
  const Result r = brp("bounds " + data("fig2b.dat"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.has("LB1 8"));
  EXPECT_TRUE(r.has("LB3 10"));
  EXPECT_TRUE(r.has("LB4 12")) << r.out;
}

TEST(Cli, BoundsCertificates) {
  const Result r = brp("bounds --certificates " + data("fig2b.dat"));
  EXPECT_TRUE(r.has("shared 5"));
  EXPECT_TRUE(r.has("{2,12,18,8}"));
}

TEST(Cli, MachineFormatsCarrySameContent) {
  const Result text = brp("bounds " + data("fig2a.dat"));
  const Result csv = brp("bounds --format csv " + data("fig2a.dat"));
  const Result json = brp("bounds --format json-lines " + data("fig2a.dat"));
  std::istringstream in(text.out);
  std::string key;
  std::string value;
  while (in >> key >> value) {
    EXPECT_TRUE(csv.has(key + "," + value)) << key;
    EXPECT_TRUE(json.has("\"key\":\"" + key + "\"")) << key;
  }
  EXPECT_TRUE(json.has("{\"key\":\"LB4\",\"value\":3}"));
}

TEST(Cli, OracleTiny) {
  const Result r = brp("oracle " + data("tiny12.dat"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.has("optimal 1"));
  EXPECT_TRUE(r.has("R 2 1 2"));
}

TEST(Cli, EmitDegenerate) {
  const Result r = brp("emit --variant m3r --L 0 " + data("blockfree.dat"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.has("degenerate L=0")) << r.out;
  EXPECT_TRUE(r.has("blockages 0"));
}

TEST(Cli, EmitMatchesGolden) {
  const Result r = brp("emit --variant m3 --L 1 --T 1 " + data("tiny12.dat"));
  std::ifstream in(data("tiny12_m3.lp"));
  std::stringstream golden;
  golden << in.rdbuf();
  EXPECT_EQ(r.out, golden.str());
}

TEST_F(Scratch, SolveThenValidate) {
  for (const char* method : {"is", "m3", "m3r"}) {
    const std::string seq = path(std::string(method) + ".seq");
    const Result s = brp(std::string("solve --method ") + method + " -o " + seq + " " + data("fig2a.dat"));
    ASSERT_EQ(s.code, 0) << s.out;
    const Result v = brp("validate " + data("fig2a.dat") + " " + seq);
    EXPECT_EQ(v.code, 0) << v.out;
    EXPECT_TRUE(v.has("valid ")) << v.out;
  }
}

TEST_F(Scratch, SolveWithHeightThenValidate) {
  const std::string seq = path("star.seq");
  const Result s = brp("solve --method is* --height plus2 --trace " + path("trace.csv") + " -o " + seq +
                    " " + data("fig2a.dat"));
  ASSERT_EQ(s.code, 0) << s.out;
  std::ifstream trace(path("trace.csv"));
  std::string header;
  std::getline(trace, header);
  EXPECT_EQ(header, "iteration,phase,L,objective,time_s,status");
  const Result v = brp("validate --height plus2 " + data("fig2a.dat") + " " + seq);
  EXPECT_EQ(v.code, 0) << v.out;
}

TEST_F(Scratch, ValidateRejectsBadSequence) {
  write("bad.seq", "T 1 1\n");
  const Result v = brp("validate " + data("tiny12.dat") + " " + path("bad.seq"));
  EXPECT_EQ(v.code, 4);
  EXPECT_TRUE(v.has("invalid"));
}

TEST_F(Scratch, ParseErrorExitCode) {
  write("broken.dat", "2 3\n2 1 2\n1 2\n");
  const Result r = brp("bounds " + path("broken.dat"));
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.has("line 3"));
}

TEST(Cli, UsageExitCode) {
  EXPECT_EQ(brp("bounds --no-such-flag " + data("tiny12.dat")).code, 2);
  EXPECT_EQ(brp("").code, 2);
  EXPECT_EQ(brp("solve --method magic " + data("tiny12.dat")).code, 2);
}

TEST(Cli, MissingFileExitCode) {
  EXPECT_EQ(brp("bounds /nonexistent/brp.dat").code, 7);
}

TEST(Cli, BackendUnavailableExitCode) {
  const Result r = brp("solve --method is --backend external " + data("tiny12.dat"),
                    "env -u BRP_MIP_COMMAND");
  EXPECT_EQ(r.code, 5);
  EXPECT_TRUE(r.has("backend unavailable"));
}

TEST(Cli, ExternalCommandFromEnvironment) {
  const Result r = brp("solve --method is --backend external " + data("tiny12.dat"),
                    "BRP_MIP_COMMAND='brp-no-such-solver-xyz {lp} {sol}'");
  EXPECT_EQ(r.code, 5);
}

TEST_F(Scratch, InfeasibleExitCode) {
  write("single.dat", "1 2\n2 1 2\n");
  const Result r = brp("oracle --height 2 " + path("single.dat"));
  EXPECT_EQ(r.code, 4) << r.out;
  EXPECT_EQ(brp("oracle --height 1 " + data("tiny12.dat")).code, 3);
}

TEST(Cli, BudgetExitCode) {
  const Result r = brp("oracle --node-limit 5 " + data("fig2b.dat"));
  EXPECT_EQ(r.code, 6) << r.out;
}

TEST_F(Scratch, GenWritesParseableInstances) {
  const Result r = brp("gen 3-4 --seed 9 --count 2 -o " + path("gen"));
  ASSERT_EQ(r.code, 0) << r.out;
  int files = 0;
  for (const auto& e : fs::directory_iterator(path("gen"))) {
    ++files;
    EXPECT_EQ(brp("bounds " + e.path().string()).code, 0);
  }
  EXPECT_EQ(files, 2);
  EXPECT_EQ(brp("gen 3-4 --seed 9").out, brp("gen 3-4 --seed 9").out);
}

TEST_F(Scratch, BenchWritesCsv) {
  write("suite.txt", "group = 2-2:3\nmethods = bounds, oracle, is\n");
  const Result r = brp("bench " + path("suite.txt") + " -o " + path("summary.csv") + " --instances " +
                    path("instances.csv"));
  ASSERT_EQ(r.code, 0) << r.out;
  std::ifstream in(path("instances.csv"));
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "group,instance,seed,height,method,status,value,time_s,lb1,lb2,lb3,lbn,lb4,note");
  EXPECT_TRUE(fs::exists(path("summary.csv")));
}

}  // namespace
