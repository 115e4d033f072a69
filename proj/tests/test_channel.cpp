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

#include <random>

#include "sppt/channel.hpp"
#include "sppt/families.hpp"
#include "sppt/sampling.hpp"
#include "test_support.hpp"

namespace sppt {
namespace {

TEST(StateChannel, UnitInputsPickBlocks) {
  const auto s = random_gram_state(3, 2, 4);
  const StateChannel ch(s);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      ComplexMatrix e(3, 3);
      e(i, j) = 1.0;
      EXPECT_EQ(ch.apply(e), s.block(i + 1, j + 1));
    }
  }
  EXPECT_EQ(ch.apply(ComplexMatrix(3, 3)), ComplexMatrix(2, 2));
  EXPECT_THROW(ch.apply(ComplexMatrix::identity(2)), DimensionMismatch);
}

TEST(StateChannel, IdentityGivesReducedState) {
  const auto s = random_gram_state(2, 3, 5);
  const StateChannel ch(s);
  EXPECT_LE(max_abs_diff(ch.apply(ComplexMatrix::identity(2)), s.block(1, 1) + s.block(2, 2)),
            1e-15);
}

TEST(StateChannel, Linearity) {
  std::mt19937_64 gen(6);
  const StateChannel ch(random_gram_state(3, 3, 6));
  for (int t = 0; t < 20; ++t) {
    const auto a = testing::random_complex(3, 3, gen);
    const auto b = testing::random_complex(3, 3, gen);
    const Complex z(0.3, -1.2);
    EXPECT_LE(max_abs_diff(ch.apply(a + z * b), ch.apply(a) + z * ch.apply(b)), 1e-12);
  }
}

TEST(StateChannel, ChoiTimesMIsSource) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = random_gram_state(2 + seed % 3, 2 + seed % 2, seed);
    const StateChannel ch(s);
    const double m = static_cast<double>(s.dim_a());
    EXPECT_LE(max_abs_diff(m * ch.choi().matrix(), s.matrix()), 1e-12);
  }
  const StateChannel mixed(maximally_mixed(2, 3));
  EXPECT_LE(max_abs_diff(mixed.choi().matrix(), (1.0 / 12.0) * ComplexMatrix::identity(6)), 1e-15);
}

TEST(StateChannel, TpDefect) {
  EXPECT_NEAR(StateChannel(maximally_mixed(3, 2)).tp_defect(), 0.0, 1e-15);
  const auto unequal = BipartiteState::from_matrix(
      ComplexMatrix::diagonal({0.5, 0.2, 0.2, 0.1}), 2, 2, true);
  // Diagonal block traces 0.7 and 0.3 rescale to 1.4 and 0.6.
  EXPECT_NEAR(StateChannel(unequal).tp_defect(), 0.4, 1e-14);
  // P+ blocks are e_ij / N: traces delta_ij / N, so the map is trace preserving.
  EXPECT_NEAR(StateChannel(maximally_entangled(2)).tp_defect(), 0.0, 1e-15);
}

TEST(EbReport, MaximallyEntangledIsCertifiedNot) {
  const auto r = eb_report(StateChannel(maximally_entangled(2)));
  EXPECT_TRUE(r.cp);
  EXPECT_FALSE(r.choi_ppt);
  EXPECT_NEAR(r.choi_min_eigenvalue, -0.25, 1e-12);
  EXPECT_NEAR(r.choi_realignment, 2.0, 1e-8);
  EXPECT_TRUE(r.eb_certified_false);
  EXPECT_EQ(r.status, EbStatus::kCertifiedNot);
  EXPECT_EQ(to_string(r.status), "certified not");
}

TEST(EbReport, ProductAndSpptSourcesAreConsistent) {
  Rng rng(8);
  const auto product = BipartiteState::from_matrix(kron(rng.pure_state(2), rng.pure_state(3)), 2,
                                                   3, true);
  const auto p = eb_report(StateChannel(product));
  EXPECT_TRUE(p.cp);
  EXPECT_TRUE(p.choi_ppt);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = assemble_state(sample_commuting_factor(3, 3, seed)).normalized_copy();
    const auto r = eb_report(StateChannel(s));
    EXPECT_TRUE(r.choi_ppt);
    EXPECT_LE(r.choi_realignment, 1.0 + 1e-8);
    EXPECT_EQ(r.status, EbStatus::kConsistent);
  }
}

}  // namespace
}  // namespace sppt
