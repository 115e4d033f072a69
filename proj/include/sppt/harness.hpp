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

// Randomized test of "SPPT implies separable" through necessary
// separability criteria (PPT and realignment).

#ifndef SPPT_HARNESS_HPP
#define SPPT_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sppt/matrix.hpp"
#include "sppt/sampling.hpp"

namespace sppt {

struct HarnessConfig {
  std::size_t dim_a = 3;
  std::size_t dim_b = 3;
  std::size_t count = 100;
  Sampler sampler = Sampler::kCommuting;
  std::uint64_t master_seed = 0;
  Tolerance tol{};
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct SampleRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  double min_eig_pt = 0.0;
  double realignment_value = 0.0;
  double sppt_defect = 0.0;
  bool is_sppt = false;
};

struct HarnessAggregate {
  double max_realignment = 0.0;
  double min_eigenvalue = 0.0;
  double max_sppt_defect = 0.0;
  /// Samples with realignment > 1 + residual_tol or min_eig_pt < -psd_tol.
  std::size_t violations = 0;
  /// Samples whose factor failed the SPPT check itself.
  std::size_t sppt_failures = 0;
  std::vector<std::size_t> violation_indices;
};

struct HarnessReport {
  HarnessConfig config;
  std::vector<SampleRecord> records;  // sorted by index
  HarnessAggregate aggregate;
};

SampleRecord evaluate_sample(const HarnessConfig& config, std::size_t index);

/// Samples are evaluated concurrently; the report is identical for any
/// thread count.
HarnessReport run_conjecture(const HarnessConfig& config);

}  // namespace sppt

#endif  // SPPT_HARNESS_HPP
