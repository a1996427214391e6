// Copyright 2026 The pdeglab Authors.
//
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pdeglab/cli/commands.hpp"
#include "pdeglab/error.hpp"

namespace pdeglab::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path tmp(const std::string& name) {
  return std::filesystem::path(PDEGLAB_TEST_TMPDIR) / name;
}

TEST(Cli, MissingRequiredOptionIsUsageError) {
  EXPECT_EQ(invoke({"orpoly", "--seed", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"orpoly", "--n", "4"}).code, kExitUsage);
  EXPECT_EQ(invoke({"nosuchcommand"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
}

TEST(Cli, HelpExitsCleanly) { EXPECT_EQ(invoke({"--help"}).code, kExitOk); }

TEST(Cli, BadValuesAreUsageErrors) {
  EXPECT_EQ(invoke({"orpoly", "--n", "4", "--eps", "2", "--seed", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"measure", "--function", "FOO:3", "--seed", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"orpoly", "--n", "4", "--scan", "sideways", "--seed", "1"}).code, kExitUsage);
}

TEST(Cli, OrpolyPassesAndReportsChecks) {
  const auto r = invoke({"orpoly", "--n", "4", "--trials", "2000", "--seed", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = load_report(r.out);
  EXPECT_EQ(j["command"], "orpoly");
  EXPECT_TRUE(j["passed"].get<bool>());
  for (const auto& c : j["checks"]) EXPECT_TRUE(c["passed"].get<bool>()) << c["name"];
}

TEST(Cli, ReportsAreDeterministicUpToTimestamp) {
  const std::vector<std::string> args = {"orredn", "--function", "MAJ:5", "--mode", "family",
                                         "--trials", "500", "--seed", "9"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(strip_volatile(load_report(a.out)), strip_volatile(load_report(b.out)));
  EXPECT_EQ(strip_volatile(load_report(a.out)).count("generated_at"), 0u);
}

TEST(Cli, JobsDoNotChangeResults) {
  const auto one = invoke({"orpoly", "--n", "5", "--trials", "600", "--seed", "4", "--jobs", "1"});
  const auto three = invoke({"orpoly", "--n", "5", "--trials", "600", "--seed", "4", "--jobs", "3"});
  auto a = strip_volatile(load_report(one.out));
  auto b = strip_volatile(load_report(three.out));
  a["config"].erase("jobs");
  b["config"].erase("jobs");
  EXPECT_EQ(a, b);
}

TEST(Cli, SchemaMismatchIsRejected) {
  EXPECT_THROW(load_report(R"({"schema": "0.0.1", "command": "orpoly"})"), PreconditionError);
  EXPECT_THROW(load_report("[1, 2]"), PreconditionError);
  const auto ok = load_report(R"({"schema": ")" + report_schema_version() + R"("})");
  EXPECT_EQ(ok["schema"], report_schema_version());
}

TEST(Cli, OutFileMatchesStdout) {
  const auto path = tmp("cli_out.json");
  const auto r = invoke({"measure", "--function", "ADDR:2", "--seed", "0", "--out", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto j = load_report(ss.str());
  EXPECT_EQ(j["result"]["sensitivity"], 3);
  EXPECT_EQ(j["result"]["decision_tree_depth"], 3);
}

TEST(Cli, FunctionFilesAndPointFiles) {
  const auto fpath = tmp("maj3.tt");
  {
    std::ofstream out(fpath);
    write_truth_table(out, majority_function(3));
  }
  EXPECT_EQ(load_function(fpath.string()), majority_function(3));
  EXPECT_EQ(load_function("OR:3"), or_function(3));

  const auto ppath = tmp("points.txt");
  {
    std::ofstream out(ppath);
    out << "000\n110\n011\n";
  }
  std::size_t m = 0;
  const auto pts = load_points(ppath.string(), m);
  EXPECT_EQ(m, 3u);
  EXPECT_EQ(pts, (std::vector<std::uint64_t>{0, 3, 6}));
  EXPECT_EQ(load_points("all:2", m).size(), 4u);
  EXPECT_EQ(m, 2u);
}

TEST(Cli, OracleModes) {
  const auto r = invoke({"oracle", "--points", "all:2", "--function", "OR:2", "--degree", "1",
                         "--seed", "0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(load_report(r.out)["result"]["agreement"]["k"], 3);
  const auto f = invoke({"oracle", "--points", "all:2", "--degree", "1", "--mode",
                         "fraction:500", "--seed", "0"});
  EXPECT_EQ(f.code, kExitOk) << f.err;
}

TEST(Cli, TableOutput) {
  const auto r = invoke({"measure", "--function", "OR:3", "--seed", "0", "--table"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("command: measure"), std::string::npos);
}

}  // namespace
}  // namespace pdeglab::cli
