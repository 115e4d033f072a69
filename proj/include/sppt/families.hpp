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

// Named bipartite state families and their closed-form PPT / SPPT rules.

#ifndef SPPT_FAMILIES_HPP
#define SPPT_FAMILIES_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sppt/bipartite.hpp"
#include "sppt/matrix.hpp"

namespace sppt {

/// rho = (1 - p) I / N^2 + p P_anti / d_anti on C^N (x) C^N, where P_anti
/// projects onto the antisymmetric subspace of dimension N (N - 1) / 2.
/// Valid for p in [-d_anti / d_sym, 1]; p = 0 is maximally mixed, p = 1 the
/// normalized antisymmetric projector.
struct WernerParams {
  std::size_t n = 2;
  double p = 0.0;
};

/// rho = (1 - p) I / N^2 + p |phi+><phi+|, p in [-1 / (N^2 - 1), 1].
struct IsotropicParams {
  std::size_t n = 2;
  double p = 0.0;
};

/// 2 (x) 2 circulant state: a lives on span{|00>, |11>}, b on span{|01>, |10>}.
struct Circulant2x2Params {
  ComplexMatrix a;
  ComplexMatrix b;
};

/// U (x) U invariant two-qubit state for real U; a, b, c >= 0, a + b + c = 1.
struct OrthogonallyInvariantParams {
  double a = 1.0 / 3.0;
  double b = 1.0 / 3.0;
  double c = 1.0 / 3.0;
};

/// Horodecki 2 (x) 4 PPT family, b in [0, 1].
struct Horodecki2x4Params {
  double b = 0.0;
};

/// Horodecki 3 (x) 3 PPT family, a in [0, 1].
struct Horodecki3x3Params {
  double a = 0.0;
};

/// rho = sum_ij a_ij |ii><jj| + sum_{i != j} b_ij |ij><ij|. `b` is N x N
/// with real positive off-diagonal entries; its diagonal is ignored.
struct DiagonalClassParams {
  std::size_t n = 3;
  ComplexMatrix a;
  ComplexMatrix b;
};

/// N (x) N circulant state: blocks[k] is an N x N PSD matrix on
/// span{|i, i + k mod N>}. Supported for N = 2 and odd N.
struct CirculantParams {
  std::size_t n = 3;
  std::vector<ComplexMatrix> blocks;
};

using FamilySpec =
    std::variant<WernerParams, IsotropicParams, Circulant2x2Params, OrthogonallyInvariantParams,
                 Horodecki2x4Params, Horodecki3x3Params, DiagonalClassParams, CirculantParams>;

/// "werner", "isotropic", "circulant2x2", "orthogonally_invariant",
/// "horodecki_2x4", "horodecki_3x3", "diagonal_class", "circulant_NxN".
std::string_view family_id(const FamilySpec& spec);
std::pair<std::size_t, std::size_t> family_dims(const FamilySpec& spec);

struct FamilyVerdictClaim {
  bool claimed_ppt = false;
  bool claimed_sppt = false;
  std::string source;
};

BipartiteState werner(std::size_t n, double p);
/// Parameter bounds for werner(n, .).
std::pair<double, double> werner_range(std::size_t n);
BipartiteState isotropic(std::size_t n, double p);
std::pair<double, double> isotropic_range(std::size_t n);
BipartiteState circulant_2x2(const ComplexMatrix& a, const ComplexMatrix& b);
BipartiteState orthogonally_invariant(double a, double b, double c);
BipartiteState horodecki_2x4(double b);
BipartiteState horodecki_3x3(double a);
BipartiteState diagonal_class(std::size_t n, const ComplexMatrix& a, const ComplexMatrix& b);
BipartiteState circulant(std::size_t n, const std::vector<ComplexMatrix>& blocks);

/// Partial-transpose sectors of a circulant state: for each s, the N x N
/// matrix on span{|m, s - m mod N>} that rho^{T_A} restricts to.
std::vector<ComplexMatrix> circulant_transposed_sectors(std::size_t n,
                                                        const std::vector<ComplexMatrix>& blocks);

BipartiteState generate(const FamilySpec& spec);
FamilyVerdictClaim claims(const FamilySpec& spec);

BipartiteState maximally_mixed(std::size_t dim_a, std::size_t dim_b);
/// |phi+><phi+| on C^N (x) C^N.
BipartiteState maximally_entangled(std::size_t n);

}  // namespace sppt

#endif  // SPPT_FAMILIES_HPP
