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

#include <filesystem>

#include "sppt/io.hpp"
#include "sppt/sampling.hpp"

namespace sppt {
namespace {

TEST(MatrixJson, RoundTripIsBitExact) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = random_gram_state(2 + seed % 2, 2 + seed % 3, seed);
    const auto text = dump(to_json(make_matrix_file(s)));
    const auto back = matrix_file_from_json(Json::parse(text));
    EXPECT_EQ(back.entries, s.matrix());
    EXPECT_EQ(back.dim_a, s.dim_a());
    EXPECT_EQ(back.dim_b, s.dim_b());
    EXPECT_TRUE(back.normalized);
  }
}

TEST(MatrixJson, LayoutAndKeyOrder) {
  const auto s = BipartiteState::from_matrix(ComplexMatrix::identity(4), 2, 2, true);
  const auto j = to_json(make_matrix_file(s, {{"family", "test"}}));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"format", "dims", "normalized", "entries",
                                            "metadata"}));
  EXPECT_EQ(j["format"], "sppt-matrix/1");
  EXPECT_EQ(j["entries"][0][0], Json::array({0.25, 0.0}));
  EXPECT_EQ(j["metadata"]["family"], "test");
}

Json valid_matrix_json() {
  return to_json(make_matrix_file(BipartiteState::from_matrix(ComplexMatrix::identity(4), 2, 2,
                                                              true)));
}

TEST(MatrixJson, SchemaViolations) {
  auto j = valid_matrix_json();
  j["format"] = "other/1";
  EXPECT_THROW(matrix_file_from_json(j), ParseError);

  j = valid_matrix_json();
  j.erase("dims");
  EXPECT_THROW(matrix_file_from_json(j), ParseError);

  j = valid_matrix_json();
  j["dims"] = {2, 3};
  EXPECT_THROW(matrix_file_from_json(j), ParseError);

  j = valid_matrix_json();
  j["entries"][1].erase(0);
  EXPECT_THROW(matrix_file_from_json(j), ParseError);

  j = valid_matrix_json();
  j["entries"][0][0] = Json::array({1.0});
  EXPECT_THROW(matrix_file_from_json(j), ParseError);

  j = valid_matrix_json();
  j["entries"][0][0] = Json::array({"x", 0.0});
  EXPECT_THROW(matrix_file_from_json(j), ParseError);

  j = valid_matrix_json();
  j["dims"] = {0, 4};
  EXPECT_THROW(matrix_file_from_json(j), ParseError);

  EXPECT_THROW(matrix_file_from_json(Json::array()), ParseError);
}

TEST(MatrixJson, InvalidStateIsRejectedOnConversion) {
  auto j = valid_matrix_json();
  j["entries"][0][0] = Json::array({-1.0, 0.0});
  const auto f = matrix_file_from_json(j);
  EXPECT_THROW(to_state(f), NotPsd);
}

TEST(FactorJson, RoundTripIsBitExact) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto f = sample_commuting_factor(3, 2, seed);
    const auto j = Json::parse(dump(factor_to_json(f, 1e-15)));
    const auto back = factor_from_json(j);
    EXPECT_EQ(back.x_blocks(), f.x_blocks());
    EXPECT_EQ(back.s_blocks(), f.s_blocks());
    EXPECT_EQ(j["reconstruction_residual"], 1e-15);
  }
}

TEST(FactorJson, RejectsMissingBlocks) {
  auto j = factor_to_json(sample_commuting_factor(3, 2, 1), 0.0);
  j["s_blocks"].erase(0);
  EXPECT_THROW(factor_from_json(j), ParseError);
}

TEST(Files, WriteReadRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "sppt_test_io";
  std::filesystem::create_directories(dir);
  const auto path = dir / "m.json";
  const auto j = valid_matrix_json();
  write_json_file(path, j);
  EXPECT_EQ(read_json_file(path), j);
  EXPECT_THROW(read_json_file(dir / "missing.json"), ParseError);
  std::filesystem::remove_all(dir);
}

TEST(ReportJson, KeyOrder) {
  HarnessConfig c;
  c.dim_a = 2;
  c.dim_b = 2;
  c.count = 3;
  c.master_seed = 7;
  c.threads = 1;
  const auto j = report_to_json(run_conjecture(c));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"format", "sample_count", "dims", "sampler_id",
                                            "master_seed", "tolerance", "records",
                                            "aggregate"}));
  std::vector<std::string> rec_keys;
  for (const auto& [k, v] : j["records"][0].items()) rec_keys.push_back(k);
  EXPECT_EQ(rec_keys, (std::vector<std::string>{"index", "seed", "min_eig_pt",
                                                "realignment_value", "sppt_defect", "is_sppt"}));
  std::vector<std::string> agg_keys;
  for (const auto& [k, v] : j["aggregate"].items()) agg_keys.push_back(k);
  EXPECT_EQ(agg_keys, (std::vector<std::string>{"max_realignment", "min_eigenvalue",
                                                "max_sppt_defect", "violations", "sppt_failures",
                                                "violation_seeds"}));
  EXPECT_EQ(j["sampler_id"], "commuting");
  EXPECT_EQ(j["records"].size(), 3u);
}

}  // namespace
}  // namespace sppt
