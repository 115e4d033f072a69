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

#include "sppt/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "sppt/bipartite.hpp"
#include "sppt/factor.hpp"

namespace sppt {

SampleRecord evaluate_sample(const HarnessConfig& config, std::size_t index) {
  SampleRecord rec;
  rec.index = index;
  rec.seed = derive_seed(config.master_seed, index);
  const SpptFactor f = sample_factor(config.sampler, config.dim_a, config.dim_b, rec.seed);
  const SpptVerdict verdict = sppt_verdict(f, config.tol);
  rec.sppt_defect = verdict.max_defect;
  rec.is_sppt = verdict.is_sppt;
  const BipartiteState rho = assemble_state(f, config.tol).normalized_copy();
  rec.min_eig_pt = is_ppt(rho, config.tol).min_eigenvalue;
  rec.realignment_value = realignment_value(rho, config.tol);
  return rec;
}

HarnessReport run_conjecture(const HarnessConfig& config) {
  if (config.count == 0) throw InvalidArgument("harness needs count >= 1");
  config.tol.validate();
  // Validate dims and sampler before spawning workers.
  (void)sample_factor(config.sampler, config.dim_a, config.dim_b, 0);

  HarnessReport report;
  report.config = config;
  report.records.resize(config.count);

  unsigned threads = config.threads == 0 ? std::thread::hardware_concurrency() : config.threads;
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(config.count));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < config.count; i = next++) {
      try {
        report.records[i] = evaluate_sample(config, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);

  auto& agg = report.aggregate;
  agg.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (const auto& rec : report.records) {
    agg.max_realignment = std::max(agg.max_realignment, rec.realignment_value);
    agg.min_eigenvalue = std::min(agg.min_eigenvalue, rec.min_eig_pt);
    agg.max_sppt_defect = std::max(agg.max_sppt_defect, rec.sppt_defect);
    if (!rec.is_sppt) ++agg.sppt_failures;
    if (rec.realignment_value > 1.0 + config.tol.residual_tol ||
        rec.min_eig_pt < -config.tol.psd_tol) {
      ++agg.violations;
      agg.violation_indices.push_back(rec.index);
    }
  }
  return report;
}

}  // namespace sppt
