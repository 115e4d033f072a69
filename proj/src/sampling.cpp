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

#include "sppt/sampling.hpp"

#include <cmath>
#include <string>

#include "sppt/linalg.hpp"

namespace sppt {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ (index * 0xD1B54A32D192ED03ULL + 1));
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * M_SQRT1_2, im * M_SQRT1_2};
}

ComplexMatrix Rng::ginibre(std::size_t rows, std::size_t cols) {
  ComplexMatrix g(rows, cols);
  for (auto& z : g.entries()) z = complex_normal();
  return g;
}

ComplexMatrix Rng::real_gaussian(std::size_t rows, std::size_t cols) {
  ComplexMatrix g(rows, cols);
  for (auto& z : g.entries()) z = normal();
  return g;
}

ComplexMatrix Rng::haar_unitary(std::size_t n) {
  ComplexMatrix q = ginibre(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t p = 0; p < k; ++p) {
      Complex overlap = 0.0;
      for (std::size_t i = 0; i < n; ++i) overlap += std::conj(q(i, p)) * q(i, k);
      for (std::size_t i = 0; i < n; ++i) q(i, k) -= overlap * q(i, p);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, k));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) q(i, k) /= norm;
  }
  return q;
}

ComplexMatrix Rng::invertible(std::size_t n) {
  ComplexMatrix x = (1.0 / std::sqrt(static_cast<double>(n))) * ginibre(n, n);
  const double sigma_min_sq = hermitian_eigenvalues(dagger(x) * x).front();
  if (sigma_min_sq < 1e-2) {
    // |eigenvalues of x| <= |x|_F < shift, so x + shift I is nonsingular.
    const double shift = 1.0 + x.frobenius_norm();
    x += shift * ComplexMatrix::identity(n);
  }
  return x;
}

ComplexMatrix Rng::pure_state(std::size_t n) {
  ComplexMatrix v = ginibre(n, 1);
  v *= 1.0 / v.frobenius_norm();
  return v * dagger(v);
}

std::string_view to_string(Sampler s) {
  switch (s) {
    case Sampler::kCommuting:
      return "commuting";
    case Sampler::kHermitian:
      return "hermitian";
    case Sampler::kNormal2xN:
      return "normal-2xN";
    case Sampler::kGeneric:
      return "generic";
  }
  return "unknown";
}

Sampler parse_sampler(std::string_view name) {
  if (name == "commuting") return Sampler::kCommuting;
  if (name == "hermitian") return Sampler::kHermitian;
  if (name == "normal-2xN" || name == "normal-2xn") return Sampler::kNormal2xN;
  if (name == "generic") return Sampler::kGeneric;
  throw InvalidArgument("unknown sampler '" + std::string(name) + "'");
}

namespace {

void require_dims(std::size_t dim_a, std::size_t dim_b) {
  if (dim_a < 2 || dim_b < 1) throw InvalidArgument("samplers need M >= 2 and N >= 1");
}

SpptFactor sample_diagonalizable(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed,
                                 bool real_spectrum) {
  require_dims(dim_a, dim_b);
  Rng rng(seed);
  const ComplexMatrix u = rng.haar_unitary(dim_b);
  const ComplexMatrix u_dag = dagger(u);
  std::vector<ComplexMatrix> xs;
  for (std::size_t i = 0; i < dim_a; ++i) xs.push_back(rng.invertible(dim_b));
  std::map<BlockPair, ComplexMatrix> ss;
  for (std::size_t i = 1; i <= dim_a; ++i) {
    for (std::size_t j = i + 1; j <= dim_a; ++j) {
      ComplexMatrix d(dim_b, dim_b);
      for (std::size_t k = 0; k < dim_b; ++k) {
        d(k, k) = real_spectrum ? Complex(rng.normal()) : rng.complex_normal();
      }
      ComplexMatrix s = u * d * u_dag;
      if (real_spectrum) {
        // exact Hermiticity; the product above is Hermitian only up to round-off
        s = 0.5 * (s + dagger(s));
      }
      ss.emplace(BlockPair{i, j}, std::move(s));
    }
  }
  return SpptFactor(std::move(xs), std::move(ss));
}

}  // namespace

SpptFactor sample_commuting_factor(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed) {
  return sample_diagonalizable(dim_a, dim_b, seed, false);
}

SpptFactor sample_hermitian_factor(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed) {
  return sample_diagonalizable(dim_a, dim_b, seed, true);
}

SpptFactor sample_normal_2xn_factor(std::size_t dim_b, std::uint64_t seed) {
  require_dims(2, dim_b);
  Rng rng(splitmix64(seed));
  const ComplexMatrix u = rng.haar_unitary(dim_b);
  ComplexMatrix d(dim_b, dim_b);
  for (std::size_t k = 0; k < dim_b; ++k) d(k, k) = rng.complex_normal();
  std::vector<ComplexMatrix> xs{rng.invertible(dim_b), rng.invertible(dim_b)};
  std::map<BlockPair, ComplexMatrix> ss;
  ss.emplace(BlockPair{1, 2}, u * d * dagger(u));
  return SpptFactor(std::move(xs), std::move(ss));
}

SpptFactor sample_generic_factor(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed) {
  require_dims(dim_a, dim_b);
  Rng rng(seed);
  std::vector<ComplexMatrix> xs;
  for (std::size_t i = 0; i < dim_a; ++i) xs.push_back(rng.invertible(dim_b));
  std::map<BlockPair, ComplexMatrix> ss;
  for (std::size_t i = 1; i <= dim_a; ++i) {
    for (std::size_t j = i + 1; j <= dim_a; ++j) ss.emplace(BlockPair{i, j}, rng.ginibre(dim_b, dim_b));
  }
  return SpptFactor(std::move(xs), std::move(ss));
}

SpptFactor sample_factor(Sampler sampler, std::size_t dim_a, std::size_t dim_b,
                         std::uint64_t seed) {
  switch (sampler) {
    case Sampler::kCommuting:
      return sample_commuting_factor(dim_a, dim_b, seed);
    case Sampler::kHermitian:
      return sample_hermitian_factor(dim_a, dim_b, seed);
    case Sampler::kNormal2xN:
      if (dim_a != 2) throw InvalidArgument("normal-2xN sampler requires M = 2");
      return sample_normal_2xn_factor(dim_b, seed);
    case Sampler::kGeneric:
      return sample_generic_factor(dim_a, dim_b, seed);
  }
  throw InvalidArgument("unknown sampler");
}

BipartiteState random_gram_state(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed) {
  Rng rng(seed);
  const ComplexMatrix g = rng.ginibre(dim_a * dim_b, dim_a * dim_b);
  return BipartiteState::from_matrix(dagger(g) * g, dim_a, dim_b, true);
}

BipartiteState random_separable_state(std::size_t dim_a, std::size_t dim_b, std::size_t terms,
                                      std::uint64_t seed) {
  if (terms == 0) throw InvalidArgument("separable state needs at least one term");
  Rng rng(seed);
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  std::mt19937_64 weight_engine(splitmix64(seed));
  ComplexMatrix rho(dim_a * dim_b, dim_a * dim_b);
  for (std::size_t t = 0; t < terms; ++t) {
    const double w = weight(weight_engine);
    rho += w * kron(rng.pure_state(dim_a), rng.pure_state(dim_b));
  }
  return BipartiteState::from_matrix(std::move(rho), dim_a, dim_b, true);
}

}  // namespace sppt
