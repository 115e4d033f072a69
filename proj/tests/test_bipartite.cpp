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

#include <cmath>
#include <random>

#include "sppt/bipartite.hpp"
#include "sppt/families.hpp"
#include "sppt/linalg.hpp"
#include "sppt/sampling.hpp"
#include "test_support.hpp"

namespace sppt {
namespace {

using testing::naive_partial_transpose;
using testing::random_complex;

const std::size_t kDims[][2] = {{2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 3}, {4, 2}};

TEST(BipartiteState, FromMatrixValidates) {
  EXPECT_THROW(BipartiteState::from_matrix(ComplexMatrix::identity(4), 2, 3, false),
               DimensionMismatch);
  EXPECT_THROW(BipartiteState::from_matrix(ComplexMatrix{{1.0, 1.0}, {0.0, 1.0}}, 1, 2, false),
               NotHermitian);
  EXPECT_THROW(BipartiteState::from_matrix(ComplexMatrix::diagonal({1.0, -0.5}), 1, 2, false),
               NotPsd);
  EXPECT_THROW(BipartiteState::from_matrix(ComplexMatrix(4, 4), 2, 2, true), ZeroTrace);
}

TEST(BipartiteState, NormalizationFlag) {
  const auto raw = BipartiteState::from_matrix(ComplexMatrix::identity(4), 2, 2, false);
  EXPECT_FALSE(raw.normalized());
  const auto unit = BipartiteState::from_matrix(ComplexMatrix::identity(4), 2, 2, true);
  EXPECT_TRUE(unit.normalized());
  EXPECT_NEAR(unit.matrix().trace().real(), 1.0, 1e-15);
  EXPECT_EQ(raw.normalized_copy().matrix(), unit.matrix());
}

TEST(BipartiteState, BlocksAreHermitianPairs) {
  const auto s = random_gram_state(3, 2, 5);
  for (std::size_t i = 1; i <= 3; ++i) {
    for (std::size_t j = 1; j <= 3; ++j) {
      EXPECT_EQ(s.block(i, j), dagger(s.block(j, i)));
      EXPECT_EQ(s.block(i, j)(0, 1), s.matrix()((i - 1) * 2, (j - 1) * 2 + 1));
    }
  }
  EXPECT_THROW(s.block(0, 1), IndexOutOfRange);
  EXPECT_THROW(s.block(1, 4), IndexOutOfRange);
}

TEST(PartialTranspose, MatchesIndexFormula) {
  for (const auto& d : kDims) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto s = random_gram_state(d[0], d[1], seed);
      EXPECT_EQ(partial_transpose_a(s), naive_partial_transpose(s.matrix(), d[0], d[1]));
    }
  }
}

TEST(PartialTranspose, InvolutionPreservesTraceAndHermiticity) {
  // 6 shapes x 84 seeds = 504 states.
  for (const auto& d : kDims) {
    for (std::uint64_t seed = 0; seed < 84; ++seed) {
      const auto s = random_gram_state(d[0], d[1], 1000 + seed);
      const auto pt = partial_transpose_a(s);
      EXPECT_EQ(partial_transpose_a(pt, d[0], d[1]), s.matrix());
      EXPECT_NEAR(std::abs(pt.trace() - s.matrix().trace()), 0.0, 1e-15);
      EXPECT_TRUE(is_hermitian(pt, 1e-15));
    }
  }
}

TEST(PptVerdict, MaximallyEntangledIsNpt) {
  const auto v = is_ppt(maximally_entangled(2));
  EXPECT_FALSE(v.ppt);
  EXPECT_EQ(v.classification, PptClass::kNpt);
  EXPECT_NEAR(v.min_eigenvalue, -0.5, 1e-12);
  const auto v3 = is_ppt(maximally_entangled(3));
  EXPECT_NEAR(v3.min_eigenvalue, -1.0 / 3.0, 1e-12);
}

TEST(PptVerdict, MaximallyMixedAndMarginal) {
  const auto mixed = is_ppt(maximally_mixed(2, 3));
  EXPECT_TRUE(mixed.ppt);
  EXPECT_EQ(mixed.classification, PptClass::kPpt);
  EXPECT_NEAR(mixed.min_eigenvalue, 1.0 / 6.0, 1e-14);
  // Product of pure states: the partial transpose is a rank one projector.
  const auto pure = BipartiteState::from_matrix(ComplexMatrix::diagonal({1.0, 0.0, 0.0, 0.0}), 2,
                                                2, true);
  const auto v = is_ppt(pure);
  EXPECT_TRUE(v.ppt);
  EXPECT_EQ(v.classification, PptClass::kMarginal);
  EXPECT_EQ(to_string(PptClass::kMarginal), "marginal");
}

TEST(PptVerdict, SeparableStatesArePpt) {
  for (const auto& d : kDims) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      EXPECT_TRUE(is_ppt(random_separable_state(d[0], d[1], 6, seed)).ppt);
    }
  }
}

TEST(Realign, IndexConvention) {
  std::mt19937_64 gen(21);
  const std::size_t m = 2;
  const std::size_t n = 3;
  const auto g = random_complex(m * n, m * n, gen);
  const auto r = realign(g, m, n);
  ASSERT_EQ(r.rows(), m * m);
  ASSERT_EQ(r.cols(), n * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          EXPECT_EQ(r(i * m + j, k * n + l), g(i * n + k, j * n + l));
        }
      }
    }
  }
}

TEST(Realign, RoundTripIsExact) {
  for (const auto& d : kDims) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto s = random_gram_state(d[0], d[1], 77 + seed);
      EXPECT_EQ(unrealign(realign(s), d[0], d[1]), s.matrix());
    }
  }
}

TEST(Realign, ProductStateIsRankOneVec) {
  // rho = A (x) B realigns to vec(A) vec(B)^T.
  std::mt19937_64 gen(22);
  const auto a = random_complex(2, 2, gen);
  const auto b = random_complex(3, 3, gen);
  const auto r = realign(kron(a, b), 2, 3);
  for (std::size_t p = 0; p < 4; ++p) {
    for (std::size_t q = 0; q < 9; ++q) {
      EXPECT_NEAR(std::abs(r(p, q) - a(p / 2, p % 2) * b(q / 3, q % 3)), 0.0, 1e-14);
    }
  }
}

TEST(RealignmentValue, MaximallyMixedUsesFrobeniusOracle) {
  // R = vec(I_M) vec(I_N)^T / (MN) has rank one, so its trace norm is its
  // Frobenius norm sqrt(M) sqrt(N) / (MN).
  for (const auto& d : kDims) {
    const auto s = maximally_mixed(d[0], d[1]);
    EXPECT_NEAR(realignment_value(s), realign(s).frobenius_norm(), 1e-12);
    EXPECT_NEAR(realignment_value(s), 1.0 / std::sqrt(double(d[0] * d[1])), 1e-12);
  }
}

TEST(RealignmentValue, MaximallyEntangledIsN) {
  EXPECT_NEAR(realignment_value(maximally_entangled(2)), 2.0, 1e-10);
  EXPECT_NEAR(realignment_value(maximally_entangled(3)), 3.0, 1e-10);
}

TEST(RealignmentValue, PureProductIsOne) {
  Rng rng(5);
  const auto rho = kron(rng.pure_state(3), rng.pure_state(3));
  const auto s = BipartiteState::from_matrix(rho, 3, 3, true);
  EXPECT_NEAR(realignment_value(s), 1.0, 1e-10);
}

TEST(RealignmentValue, SeparableBoundedByOne) {
  for (const auto& d : kDims) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      EXPECT_LE(realignment_value(random_separable_state(d[0], d[1], 5, seed)), 1.0 + 1e-10);
    }
  }
}

TEST(RealignmentValue, ScaleInvariant) {
  const auto s = random_gram_state(2, 3, 9);
  const auto scaled = BipartiteState::from_matrix(7.0 * s.matrix(), 2, 3, false);
  EXPECT_NEAR(realignment_value(scaled), realignment_value(s), 1e-12);
}

}  // namespace
}  // namespace sppt
