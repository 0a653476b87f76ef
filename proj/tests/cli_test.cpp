// Copyright 2026 The digraph-le Authors
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

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(DLE_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  for (std::size_t got; (got = fread(buf.data(), 1, buf.size(), pipe)) > 0;) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

TEST(Cli, GenArclist) {
  const CliResult r = run("gen fnk:n=4,k=3,s=2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("DIGRAPH 4 9\n", 0), 0U);
}

TEST(Cli, GenFormats) {
  EXPECT_NE(run("gen bk:parts=4+1 --format dot").out.find("(V2)"), std::string::npos);
  const CliResult j = run("gen bk:parts=4+1 --format json");
  EXPECT_EQ(j.code, 0);
  EXPECT_NE(j.out.find("\"e\": 12"), std::string::npos);
  EXPECT_NE(j.out.find("\"family\": \"bk:parts=4+1\""), std::string::npos);
}

TEST(Cli, GenRejectsBadSpecs) {
  EXPECT_EQ(run("gen fnk:n=9,k=3,s=3").code, 2);
  EXPECT_EQ(run("gen nope:n=3").code, 2);
  EXPECT_EQ(run("gen tt:n=3 --format svg").code, 2);
}

TEST(Cli, MeasureSpecAndFile) {
  const CliResult r = run("measure --spec fnk:n=5,k=2,s=3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"le\": 44"), std::string::npos);
  EXPECT_NE(r.out.find("\"m1\": 40"), std::string::npos);
  const std::string path = temp_file("digon.txt", "DIGRAPH 2 2\n0 1\n1 0\n");
  EXPECT_NE(run("measure " + path).out.find("\"le\": 4"), std::string::npos);
  EXPECT_EQ(run("measure " + temp_file("bad.txt", "DIGRAPH 2 1\n0 0\n")).code, 2);
  EXPECT_EQ(run("measure /nonexistent/file").code, 2);
}

TEST(Cli, FreeExitCodes) {
  const CliResult cyc = run("free --spec kd:n=3 --len 3");
  EXPECT_EQ(cyc.code, 1);
  EXPECT_EQ(cyc.out.rfind("DIGRAPH 3 3\n", 0), 0U);
  const CliResult ok = run("free --spec fnk:n=5,k=3,s=2 --len 4");
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "free\n");
  EXPECT_EQ(run("free --spec kd:n=3 --len 4").code, 2);
}

TEST(Cli, Formula) {
  const CliResult r = run("formula --quantity ex_le --n 4 --k 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"value\": 33"), std::string::npos);
  EXPECT_NE(r.out.find("\"numerator\": 198"), std::string::npos);
  EXPECT_NE(run("formula --quantity ex_m1 --n 5").out.find("\"value\": 40"), std::string::npos);
  EXPECT_NE(run("formula --quantity ex_arcs --n 5 --k 3").out.find("\"value\": 14"), std::string::npos);
  EXPECT_EQ(run("formula --quantity ex_m1 --n 5 --k 3").code, 2);
  EXPECT_EQ(run("formula --quantity ex_le --n 5").code, 2);
  EXPECT_EQ(run("formula --quantity ex_le --n 0 --k 3").code, 2);
}

TEST(Cli, SearchIsDeterministic) {
  const CliResult one = run("search --n 4 --forbid-cycle 3 --objective le --jobs 1");
  const CliResult two = run("search --n 4 --forbid-cycle 3 --objective le --jobs 3");
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, two.out);
  EXPECT_NE(one.out.find("\"max_value\": 24"), std::string::npos);
  EXPECT_EQ(one.out.find("elapsed_ms"), std::string::npos);
  EXPECT_NE(run("search --n 3 --forbid-cycle 2 --timing").out.find("elapsed_ms"), std::string::npos);
}

TEST(Cli, SearchLimits) {
  EXPECT_EQ(run("search --n 6 --forbid-cycle 3").code, 2);
  EXPECT_EQ(run("search --n 4 --forbid-cycle 1").code, 2);
  EXPECT_EQ(run("search --n 4").code, 2);
}

TEST(Cli, Verify) {
  const CliResult r = run("verify thm1.5 --n-max 4 --oracle-max-n 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ALL PASS"), std::string::npos);
  EXPECT_EQ(run("verify lemma3.1 --n-max 12 --k-max 5").code, 0);
  EXPECT_EQ(run("verify thm0.0").code, 2);
}

TEST(Cli, Usage) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

}  // namespace
