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

#include <algorithm>

#include "sppt/harness.hpp"

namespace sppt {
namespace {

HarnessConfig config_for(std::size_t m, std::size_t n, std::size_t count, Sampler s,
                         std::uint64_t seed, unsigned threads) {
  HarnessConfig c;
  c.dim_a = m;
  c.dim_b = n;
  c.count = count;
  c.sampler = s;
  c.master_seed = seed;
  c.threads = threads;
  return c;
}

TEST(Harness, ThreadCountDoesNotChangeRecords) {
  const auto one = run_conjecture(config_for(3, 3, 40, Sampler::kCommuting, 11, 1));
  const auto many = run_conjecture(config_for(3, 3, 40, Sampler::kCommuting, 11, 4));
  ASSERT_EQ(one.records.size(), many.records.size());
  for (std::size_t i = 0; i < one.records.size(); ++i) {
    EXPECT_EQ(one.records[i].index, i);
    EXPECT_EQ(one.records[i].seed, many.records[i].seed);
    EXPECT_EQ(one.records[i].realignment_value, many.records[i].realignment_value);
    EXPECT_EQ(one.records[i].min_eig_pt, many.records[i].min_eig_pt);
    EXPECT_EQ(one.records[i].sppt_defect, many.records[i].sppt_defect);
  }
  EXPECT_EQ(one.aggregate.max_realignment, many.aggregate.max_realignment);
}

TEST(Harness, RecordsMatchSingleEvaluation) {
  const auto cfg = config_for(2, 3, 10, Sampler::kHermitian, 3, 2);
  const auto report = run_conjecture(cfg);
  for (std::size_t i : {0, 4, 9}) {
    const auto rec = evaluate_sample(cfg, i);
    EXPECT_EQ(rec.seed, derive_seed(3, i));
    EXPECT_EQ(rec.realignment_value, report.records[i].realignment_value);
  }
}

TEST(Harness, AggregateSummarizesRecords) {
  const auto report = run_conjecture(config_for(2, 4, 30, Sampler::kHermitian, 5, 0));
  double max_r = 0.0;
  double min_e = 1.0;
  for (const auto& r : report.records) {
    max_r = std::max(max_r, r.realignment_value);
    min_e = std::min(min_e, r.min_eig_pt);
    EXPECT_TRUE(r.is_sppt);
    EXPECT_LE(r.sppt_defect, 1e-10);
  }
  EXPECT_EQ(report.aggregate.max_realignment, max_r);
  EXPECT_EQ(report.aggregate.min_eigenvalue, min_e);
  EXPECT_EQ(report.aggregate.violations, 0u);
  EXPECT_EQ(report.aggregate.sppt_failures, 0u);
  EXPECT_TRUE(report.aggregate.violation_indices.empty());
}

TEST(Harness, GenericSamplerCountsSpptFailures) {
  const auto report = run_conjecture(config_for(2, 2, 20, Sampler::kGeneric, 1, 2));
  EXPECT_EQ(report.aggregate.sppt_failures, 20u);
}

TEST(Harness, RejectsBadConfig) {
  EXPECT_THROW(run_conjecture(config_for(3, 3, 0, Sampler::kCommuting, 0, 1)), InvalidArgument);
  EXPECT_THROW(run_conjecture(config_for(3, 3, 5, Sampler::kNormal2xN, 0, 1)), InvalidArgument);
  EXPECT_THROW(run_conjecture(config_for(1, 3, 5, Sampler::kCommuting, 0, 1)), InvalidArgument);
}

}  // namespace
}  // namespace sppt
