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

#ifndef SPPT_SAMPLING_HPP
#define SPPT_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "sppt/bipartite.hpp"
#include "sppt/factor.hpp"
#include "sppt/matrix.hpp"

namespace sppt {

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of sample `index` under `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Seeded source of Gaussian matrices. Deterministic for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  Complex complex_normal();

  /// Entries i.i.d. complex normal with unit variance (real and imaginary
  /// parts N(0, 1/2)).
  ComplexMatrix ginibre(std::size_t rows, std::size_t cols);
  ComplexMatrix real_gaussian(std::size_t rows, std::size_t cols);
  /// Haar-distributed unitary from Gram-Schmidt on a Ginibre matrix.
  ComplexMatrix haar_unitary(std::size_t n);
  /// Ginibre / sqrt(n), shifted by (1 + |G|_F) I when nearly singular.
  ComplexMatrix invertible(std::size_t n);
  /// Unit-trace pure state |v><v| on C^n.
  ComplexMatrix pure_state(std::size_t n);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

enum class Sampler { kCommuting, kHermitian, kNormal2xN, kGeneric };

std::string_view to_string(Sampler s);
/// Accepts "commuting", "hermitian", "normal-2xN", "generic". Throws InvalidArgument.
Sampler parse_sampler(std::string_view name);

/// S_ij = U D_ij U^dagger for one Haar U and complex diagonal D_ij; random
/// invertible X_i. Satisfies the sufficient commutation condition.
SpptFactor sample_commuting_factor(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed);
/// As sample_commuting_factor with real D_ij, so every S_ij is Hermitian.
SpptFactor sample_hermitian_factor(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed);
/// M = 2 factor with a single normal S = U D U^dagger and random X_1, X_2.
SpptFactor sample_normal_2xn_factor(std::size_t dim_b, std::uint64_t seed);
/// Unconstrained Ginibre S_ij; generically not SPPT.
SpptFactor sample_generic_factor(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed);

SpptFactor sample_factor(Sampler sampler, std::size_t dim_a, std::size_t dim_b,
                         std::uint64_t seed);

/// G^dagger G for a Ginibre G, normalized.
BipartiteState random_gram_state(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed);
/// Convex sum of `terms` random pure product states, normalized.
BipartiteState random_separable_state(std::size_t dim_a, std::size_t dim_b, std::size_t terms,
                                      std::uint64_t seed);

}  // namespace sppt

#endif  // SPPT_SAMPLING_HPP
