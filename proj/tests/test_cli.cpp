// Copyright 2026 The SPPT Toolkit Authors
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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sppt/cli.hpp"
#include "sppt/io.hpp"

namespace sppt {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run sppt_run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sppt_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, GenOrthogonallyInvariantWritesMatrixFile) {
  const auto r = sppt_run({"gen", "orthogonally-invariant", "--a", "0.4", "--b", "0.3", "--c",
                           "0.3", "-o", path("s.json")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto f = matrix_file_from_json(read_json_file(path("s.json")));
  EXPECT_EQ(f.dim_a, 2u);
  EXPECT_EQ(f.dim_b, 2u);
  EXPECT_EQ(f.entries.rows(), 4u);
  EXPECT_TRUE(f.normalized);
}

TEST_F(CliTest, GenWernerMaximallyMixed) {
  ASSERT_EQ(sppt_run({"gen", "werner", "--n", "2", "--maximally-mixed", "-o", path("w.json")}).code,
            cli::kOk);
  const auto f = matrix_file_from_json(read_json_file(path("w.json")));
  EXPECT_EQ(f.entries, 0.25 * ComplexMatrix::identity(4));
}

TEST_F(CliTest, GenParameterOutOfRange) {
  const auto r = sppt_run({"gen", "horodecki-2x4", "--b", "1.5"});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_NE(r.err.find("parameter out of range"), std::string::npos);
  EXPECT_EQ(r.err.find('\n'), r.err.size() - 1);
}

TEST_F(CliTest, GenUnknownFamilyAndMissingParams) {
  EXPECT_EQ(sppt_run({"gen", "nonsense"}).code, cli::kUsage);
  EXPECT_EQ(sppt_run({"gen", "werner", "--n", "2"}).code, cli::kUsage);
  EXPECT_EQ(sppt_run({}).code, cli::kUsage);
  EXPECT_EQ(sppt_run({"verdict"}).code, cli::kUsage);
}

TEST_F(CliTest, GenToStdout) {
  const auto r = sppt_run({"gen", "isotropic", "--n", "2", "--p", "0.2"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(Json::parse(r.out)["format"], "sppt-matrix/1");
}

TEST_F(CliTest, VerdictOrthogonallyInvariantEqualBc) {
  sppt_run({"gen", "orthogonally-invariant", "--a", "0.4", "--b", "0.3", "--c", "0.3", "-o",
            path("s.json")});
  const auto r = sppt_run({"verdict", path("s.json")});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(first_line(r.out).rfind("PPT: yes, SPPT: yes", 0), 0u) << r.out;
}

TEST_F(CliTest, VerdictHorodecki2x4) {
  sppt_run({"gen", "horodecki-2x4", "--b", "0.5", "-o", path("h.json")});
  const auto r = sppt_run({"verdict", path("h.json")});
  ASSERT_EQ(r.code, cli::kOk);
  // Realignment does not detect this PPT entangled state.
  EXPECT_EQ(first_line(r.out), "PPT: yes, SPPT: no, realignment: <=1");
}

TEST_F(CliTest, VerdictHorodecki3x3DetectedByRealignment) {
  sppt_run({"gen", "horodecki-3x3", "--a", "0.5", "-o", path("h.json")});
  const auto r = sppt_run({"verdict", path("h.json")});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(first_line(r.out), "PPT: yes, SPPT: no, realignment: >1");
}

TEST_F(CliTest, VerdictMaximallyMixed) {
  sppt_run({"gen", "maximally-mixed", "--m", "3", "--n", "2", "-o", path("m.json")});
  const auto r = sppt_run({"verdict", path("m.json")});
  EXPECT_EQ(first_line(r.out), "PPT: yes, SPPT: yes, realignment: <=1");
}

TEST_F(CliTest, VerdictParseErrors) {
  std::ofstream(path("bad.json")) << "{not json";
  EXPECT_EQ(sppt_run({"verdict", path("bad.json")}).code, cli::kUsage);
  std::ofstream(path("schema.json")) << R"({"format": "sppt-matrix/1"})";
  EXPECT_EQ(sppt_run({"verdict", path("schema.json")}).code, cli::kUsage);
  EXPECT_EQ(sppt_run({"verdict", path("missing.json")}).code, cli::kUsage);
}

TEST_F(CliTest, ChannelStatuses) {
  sppt_run({"gen", "maximally-entangled", "--n", "2", "-o", path("me.json")});
  const auto me = sppt_run({"channel", path("me.json")});
  ASSERT_EQ(me.code, cli::kOk);
  EXPECT_NE(me.out.find("EB: certified not"), std::string::npos);
  EXPECT_NE(me.out.find("Choi realignment: 2\n"), std::string::npos);

  sppt_run({"gen", "sppt-sample", "--m", "3", "--n", "3", "--seed", "4", "-o", path("s.json")});
  const auto s = sppt_run({"channel", path("s.json")});
  EXPECT_NE(s.out.find("EB: consistent"), std::string::npos) << s.out;
  EXPECT_NE(s.out.find("CP: yes"), std::string::npos);
}

TEST_F(CliTest, FactorizeRoundTripAndNotRepresentable) {
  sppt_run({"gen", "sppt-sample", "--m", "2", "--n", "3", "--sampler", "normal-2xN", "--seed",
            "2", "-o", path("s.json")});
  const auto ok = sppt_run({"factorize", path("s.json"), "-o", path("f.json")});
  ASSERT_EQ(ok.code, cli::kOk) << ok.err;
  const auto fj = read_json_file(path("f.json"));
  EXPECT_LE(fj["reconstruction_residual"].get<double>(), 1e-9);
  EXPECT_NO_THROW(factor_from_json(fj));

  sppt_run({"gen", "maximally-mixed", "--m", "2", "--n", "2", "-o", path("m.json")});
  ASSERT_EQ(sppt_run({"factorize", path("m.json"), "-o", path("mf.json")}).code, cli::kOk);
  const auto mixed = factor_from_json(read_json_file(path("mf.json")));
  EXPECT_EQ(mixed.s(1, 2), ComplexMatrix(2, 2));

  sppt_run({"gen", "maximally-entangled", "--n", "2", "-o", path("me.json")});
  const auto nr = sppt_run({"factorize", path("me.json")});
  EXPECT_EQ(nr.code, cli::kViolation);
  EXPECT_NE(nr.err.find("NotRepresentable: block (1,2)"), std::string::npos);
}

TEST_F(CliTest, ConjectureIsDeterministic) {
  const std::vector<std::string> base{"conjecture", "--m", "3", "--n", "3", "--count", "50",
                                      "--seed", "7"};
  auto a = base;
  a.insert(a.end(), {"-o", path("a.json"), "--threads", "1"});
  auto b = base;
  b.insert(b.end(), {"-o", path("b.json"), "--threads", "4"});
  ASSERT_EQ(sppt_run(a).code, cli::kOk);
  ASSERT_EQ(sppt_run(b).code, cli::kOk);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  const auto j = read_json_file(path("a.json"));
  EXPECT_EQ(j["aggregate"]["violations"], 0);
  EXPECT_EQ(j["sample_count"], 50);
}

TEST_F(CliTest, ConjectureHermitianDefects) {
  const auto r = sppt_run({"conjecture", "--m", "2", "--n", "4", "--count", "100", "--sampler",
                           "hermitian", "--seed", "1", "-o", path("h.json")});
  ASSERT_EQ(r.code, cli::kOk);
  for (const auto& rec : read_json_file(path("h.json"))["records"]) {
    EXPECT_LE(rec["sppt_defect"].get<double>(), 1e-10);
  }
}

TEST_F(CliTest, ConjectureRejectsBadInput) {
  EXPECT_EQ(sppt_run({"conjecture", "--sampler", "generic", "--count", "2"}).code, cli::kUsage);
  EXPECT_EQ(sppt_run({"conjecture", "--sampler", "bogus"}).code, cli::kUsage);
  EXPECT_EQ(sppt_run({"conjecture", "--m", "1", "--count", "2"}).code, cli::kUsage);
}

TEST_F(CliTest, BadToleranceEnvironment) {
  ::setenv("SPPT_TOL", "abc", 1);
  const auto r = sppt_run({"gen", "werner", "--n", "2", "--p", "0.1"});
  ::unsetenv("SPPT_TOL");
  EXPECT_EQ(r.code, cli::kUsage);
}

}  // namespace
}  // namespace sppt
