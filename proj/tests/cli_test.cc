// Copyright 2026 The upoly Authors.
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
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "upoly/gen.h"
#include "upoly/poly.h"
#include "upoly/spoly_io.h"

namespace upoly {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("upoly_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // Runs the CLI; stdout is captured, stderr goes to err.txt.
  Result run(const std::string& args) const {
    const std::string cmd = std::string(UPOLY_CLI) + " " + args + " 2>" + path("err.txt");
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  std::string err() const { return slurp(path("err.txt")); }

  fs::path dir_;
};

TEST_F(CliTest, MulExample) {
  const auto f = write("f.sp", "spoly 1\n-1 0\n1 1\n");
  const auto g = write("g.sp", "spoly 1\n1 0\n1 1\n");
  for (const std::string algo : {"unbalanced", "schoolbook", "kronecker"}) {
    const Result r = run("mul --algo " + algo + " " + f + " " + g);
    EXPECT_EQ(r.code, 0) << err();
    EXPECT_EQ(r.out, "spoly 1\n-1 0\n1 2\n") << algo;
  }
}

TEST_F(CliTest, MulWritesFileAndStats) {
  Rng rf(1), rg(2);
  const SparsePoly f = generate({GenKind::kExtreme, 300, 1 << 16}, rf);
  const SparsePoly g = generate({GenKind::kUniform, 100, 1 << 16}, rg);
  save_spoly(path("f.sp"), f);
  save_spoly(path("g.sp"), g);
  const Result r = run("--seed 5 --stats " + path("s.json") + " mul --majority-reps 3 -o " + path("h.sp") +
                       " " + path("f.sp") + " " + path("g.sp"));
  ASSERT_EQ(r.code, 0) << err();
  EXPECT_EQ(load_spoly(path("h.sp")), schoolbook_mul(f, g));
  const auto j = nlohmann::json::parse(slurp(path("s.json")));
  EXPECT_TRUE(j.contains("evals"));
  EXPECT_TRUE(j.contains("wall_ns"));
  ASSERT_TRUE(j.contains("ladder"));
  EXPECT_FALSE(j["ladder"].empty());
}

TEST_F(CliTest, ParseErrorNamesLine) {
  const auto f = write("f.sp", "spoly 1\n1 0\n2 0\n");
  const auto g = write("g.sp", "spoly 1\n1 1\n");
  const Result r = run("mul " + f + " " + g);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(err().find("line 3"), std::string::npos) << err();
  const auto bad = write("bad.sp", "poly 1\n");
  EXPECT_EQ(run("mul " + bad + " " + g).code, 2);
  EXPECT_NE(err().find("line 1"), std::string::npos);
  EXPECT_EQ(run("mul " + path("missing.sp") + " " + g).code, 2);
}

TEST_F(CliTest, InterpSpolyRoundTrip) {
  Rng rng(3);
  const SparsePoly f = generate({GenKind::kGeometric, 200, 1 << 20}, rng);
  save_spoly(path("f.sp"), f);
  const Result r = run("interp --majority-reps 3 --s 200 --d 1048576 " + path("f.sp"));
  ASSERT_EQ(r.code, 0) << err();
  EXPECT_EQ(parse_spoly(r.out), f);
}

TEST_F(CliTest, InterpSlp) {
  const auto slp = write("p.slp", "slp 1\ninput\nconst 1\nadd 0 1\npow 2 4\n");
  const Result r = run("--stats " + path("s.json") + " interp --majority-reps 5 --s 24 --d 4 " + slp);
  ASSERT_EQ(r.code, 0) << err();
  EXPECT_EQ(r.out, "spoly 1\n1 0\n4 1\n6 2\n4 3\n1 4\n");
  EXPECT_FALSE(nlohmann::json::parse(slurp(path("s.json")))["warning"].get<bool>());
}

TEST_F(CliTest, InterpBoundTooSmall) {
  const auto slp = write("p.slp", "slp 1\ninput\nconst 1\nadd 0 1\npow 2 4\n");
  const Result r = run("--stats " + path("s.json") + " interp --majority-reps 5 --s 20 --d 4 " + slp);
  ASSERT_EQ(r.code, 0) << err();
  EXPECT_LE(bitlen_poly(parse_spoly(r.out)), 20u);
  EXPECT_TRUE(nlohmann::json::parse(slurp(path("s.json")))["warning"].get<bool>());
}

TEST_F(CliTest, VerifyExitCodes) {
  const auto x = write("x.sp", "spoly 1\n1 1\n");
  const auto x2 = write("x2.sp", "spoly 1\n1 2\n");
  const auto wrong = write("w.sp", "spoly 1\n1 0\n1 2\n");
  Result r = run("verify " + x + " " + x + " " + x2);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("accept p=", 0), 0u) << r.out;
  int rejects = 0;
  for (int seed = 0; seed < 20; ++seed) {
    r = run("--seed " + std::to_string(seed) + " verify " + x + " " + x + " " + wrong);
    EXPECT_TRUE(r.code == 0 || r.code == 1);
    rejects += r.code == 1;
    if (r.code == 1) EXPECT_EQ(r.out.rfind("reject p=", 0), 0u);
  }
  EXPECT_GE(rejects, 18);
  EXPECT_EQ(run("verify --eps 2 " + x + " " + x + " " + x2).code, 2);
}

TEST_F(CliTest, GenDeterministic) {
  const Result a = run("--seed 9 gen --profile extreme --s 512 --d 1048576");
  const Result b = run("--seed 9 gen --profile extreme --s 512 --d 1048576");
  const Result c = run("--seed 10 gen --profile extreme --s 512 --d 1048576");
  ASSERT_EQ(a.code, 0) << err();
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  const SparsePoly f = parse_spoly(a.out);
  EXPECT_LE(bitlen_poly(f), 512u);
  EXPECT_LE(f.degree(), 1u << 20);
  EXPECT_EQ(run("gen --profile dense --s 64 --d 10").code, 2);
}

TEST_F(CliTest, BenchCsv) {
  const Result r = run("bench --profile uniform --ladder 64,128,256 --algo interp,schoolbook --majority-reps 3");
  ASSERT_EQ(r.code, 0) << err();
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "s,algo,D,wall_ns,mdbb_calls,sum_k,max_p,max_logm,output_bitlen");
  int rows = 0, interp = 0;
  while (std::getline(in, line)) {
    ++rows;
    interp += line.find(",interp,") != std::string::npos;
  }
  EXPECT_EQ(rows, 6);
  EXPECT_EQ(interp, 3);
  EXPECT_EQ(run("bench --ladder 128,64").code, 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("interp --s 10").code, 2);
}

}  // namespace
}  // namespace upoly
