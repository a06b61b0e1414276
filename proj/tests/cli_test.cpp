// Copyright 2026 The GCR Solver Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gcr/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "test_support.hpp"

namespace gcr {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = {}) {
  args.insert(args.begin(), "gcr");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(GCR_DATA_DIR) + "/" + name; }

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("gcr_cli_test_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(CliSolve, P3Summary) {
  const Result r = run_cli({"solve", data("p3.txt")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(contains(r.out, "variant: classic\n"));
  EXPECT_TRUE(contains(r.out, "states: 19 (18 regular, 6 capture)\n"));
  EXPECT_TRUE(contains(r.out, "placement_value: 1\n"));
  EXPECT_TRUE(contains(r.out, "cop_placement: 1\n"));
  EXPECT_TRUE(contains(r.out, "\n4 (0,2,1) 3 3\n"));
  EXPECT_TRUE(contains(r.out, "\n18 terminal 0 0\n"));
}

TEST(CliSolve, CycleIsRobberWin) {
  const Result r = run_cli({"solve", data("c4.txt")});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(contains(r.out, "placement_value: infinity\n"));
}

TEST(CliSolve, OutputIsDeterministic) {
  TempDir dir;
  for (const char* fmt : {"text", "json"}) {
    ASSERT_EQ(run_cli({"solve", data("c4.txt"), "--format", fmt, "-o", dir.path("one")}).code, cli::kOk);
    ASSERT_EQ(run_cli({"solve", data("c4.txt"), "--format", fmt, "-o", dir.path("two")}).code, cli::kOk);
    EXPECT_EQ(slurp(dir.path("one")), slurp(dir.path("two")));
  }
  const GameFamily f = testing::c4();
  EXPECT_EQ(slurp(dir.path("two")), write_labels(f, vl_solve(f)));
}

TEST(CliSolve, VariantsAndFlags) {
  Result r = run_cli({"solve", data("p3.txt"), "--variant", "distance_k", "--k", "1"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(contains(r.out, "variant: distance_k\n"));
  EXPECT_TRUE(contains(r.out, "states: 19 (18 regular, 14 capture)\n"));

  r = run_cli({"solve", data("c4.txt"), "--variant", "k_cops", "--cops", "2"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(contains(r.out, "placement_value: 1\n"));

  r = run_cli({"solve", data("p3.txt"), "--directed"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  // With only arcs 0->1->2 the robber at 0 can never be reached from 2.
  EXPECT_TRUE(contains(r.out, "\n12 (2,0,1) infinity infinity\n"));
}

TEST(CliErrors, InputProblemsExitTwo) {
  TempDir dir;
  Result r = run_cli({"solve", dir.write("empty.txt", "")});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_TRUE(contains(r.err, "parse error at line 1"));

  r = run_cli({"solve", dir.write("range.txt", "3\n0 1\n1 7\n")});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_TRUE(contains(r.err, "range error at line 3"));

  EXPECT_EQ(run_cli({"solve", dir.path("missing.txt")}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"solve", data("p3.txt"), "--k", "1"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"solve", data("p3.txt"), "--variant", "warp"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"solve", data("p3.txt"), "--format", "yaml"}).code, cli::kInputError);

  // A family file breaking the movement rules is rejected with the rule name.
  r = run_cli({"solve", dir.write("bad.json", R"({"locations1": 1, "locations2": 1, "capture": [],
                                                 "edges": [[], [2], [2]]})")});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_TRUE(contains(r.err, "empty-successors: state 0"));
}

TEST(CliVerify, AllChecksPass) {
  const Result r = run_cli({"verify", data("p3.txt"), "--random-opponents", "3"});
  EXPECT_EQ(r.code, cli::kOk) << r.out;
  EXPECT_TRUE(contains(r.out, "[PASS] optimality-equations\n"));
  EXPECT_TRUE(contains(r.out, "[PASS] oracle-agreement\n"));
  EXPECT_TRUE(contains(r.out, "[PASS] random-opponents\n"));
  EXPECT_TRUE(contains(r.out, "5 checks passed, 0 failed, 0 skipped\n"));
}

TEST(CliVerify, OracleCapExitsThree) {
  const Result r = run_cli({"verify", data("c4.txt"), "--oracle-cap", "10"});
  EXPECT_EQ(r.code, cli::kOracleCap);
  EXPECT_TRUE(contains(r.out, "[SKIP] oracle-agreement"));
  EXPECT_TRUE(contains(r.out, "3 checks passed, 0 failed, 1 skipped\n"));
}

TEST(CliVerify, CorruptedLabelsNameTheState) {
  TempDir dir;
  const GameFamily f = testing::p3();
  LabelTable t = vl_solve(f);
  t.value[4] = Value(2);
  t.finitized_at[4] = Value(2);
  const Result r = run_cli({"verify", data("p3.txt"), "--labels", dir.write("bad.json", write_labels(f, t))});
  EXPECT_EQ(r.code, cli::kVerifyFailed);
  EXPECT_TRUE(contains(r.out, "[FAIL] optimality-equations"));
  EXPECT_TRUE(contains(r.out, "state 4 (0,2,1): expected 3, got 2"));

  // Wrong-sized label files are an input problem, not a verification failure.
  const Result k2 = run_cli({"verify", data("p3.txt"), "--labels", dir.write("k2.json", write_labels(testing::k2(), vl_solve(testing::k2())))});
  EXPECT_EQ(k2.code, cli::kInputError);
}

TEST(CliClassify, CountsAndLevels) {
  const Result r = run_cli({"classify", data("c4.txt")});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(contains(r.out, "converged_at: 1\n"));
  EXPECT_TRUE(contains(r.out, "\n4 (0,2,1) E-win -\n"));
  EXPECT_TRUE(contains(r.out, "\n2 (0,1,1) P-win 1\n"));
}

TEST(CliExport, FamilyDotAndHistory) {
  TempDir dir;
  Result r = run_cli({"export", data("p3.txt"), "--format", "family"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, write_family(testing::p3()));

  // The exported family file is accepted as input and solves identically.
  const std::string family_path = dir.write("p3.json", r.out);
  EXPECT_EQ(run_cli({"export", family_path}).out, run_cli({"export", data("p3.txt")}).out);

  r = run_cli({"export", data("p3.txt"), "--format", "dot"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(contains(r.out, "color=red"));

  r = run_cli({"export", data("p3.txt"), "--format", "history", "--start", "0,2,1"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(contains(r.out, "capture_time: 3\n"));

  // Default start is the placement: cop on 1, captured after one turn.
  r = run_cli({"export", data("p3.txt"), "--format", "history"});
  EXPECT_TRUE(contains(r.out, "capture_time: 1\n"));

  EXPECT_EQ(run_cli({"export", data("p3.txt"), "--format", "history", "--start", "18"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"export", data("p3.txt"), "--format", "history", "--start", "1,2"}).code, cli::kInputError);
}

TEST(CliPlay, HumanEvaderOnK2IsCapturedImmediately) {
  const Result r = run_cli({"play", data("k2.txt"), "--human-side", "2", "--start", "0,1,1"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(contains(r.out, "machine moves to (1,1,2)\n"));
  EXPECT_TRUE(contains(r.out, "captured at turn 1"));
}

TEST(CliPlay, StubbornPursuerOnC4CertifiesEvasion) {
  const Result r =
      run_cli({"play", data("c4.txt"), "--human-side", "1", "--start", "0,2,1", "--max-turns", "6"}, "0\n0\n0\n");
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(contains(r.out, "evasion certified: no capture in 6 turns\n"));
}

TEST(CliPlay, BadInputRepromptsAndEofStops) {
  const Result r = run_cli({"play", data("c4.txt"), "--human-side", "1", "--start", "0,2,1"}, "7\nx\n2\n");
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(contains(r.out, "illegal move '7', try again\n"));
  EXPECT_TRUE(contains(r.out, "illegal move 'x', try again\n"));
  // Vertex 2 is not adjacent to 0 on C4 either.
  EXPECT_TRUE(contains(r.out, "illegal move '2', try again\n"));
  EXPECT_TRUE(contains(r.out, "input closed\n"));
}

TEST(CliPlay, HumanCanWinOnP3) {
  const Result r = run_cli({"play", data("p3.txt"), "--human-side", "1", "--start", "0,2,1"}, "1\n2\n");
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(contains(r.out, "captured at turn 3"));
}

TEST(CliServe, BusyPortExitsFour) {
  gcr::GameService blocker_service(testing::k2(), std::nullopt, vl_solve(testing::k2()));
  gcr::HttpFrontend blocker(blocker_service);
  const int port = blocker.bind_any("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread listener([&] { blocker.run(); });
  blocker.wait_until_ready();
  const Result r = run_cli({"serve", data("k2.txt"), "--port", std::to_string(port)});
  blocker.stop();
  listener.join();
  EXPECT_EQ(r.code, cli::kEnvironmentError);
  EXPECT_TRUE(contains(r.err, "cannot bind"));
}

}  // namespace
}  // namespace gcr
