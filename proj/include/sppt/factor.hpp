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

// Block upper-triangular factors X of bipartite states rho = X^dagger X.
//
// X is an M x M array of N x N blocks with X_ii = X_i, X_ij = S_ij X_i for
// i < j and zeros below the diagonal. The canonical partner Y is the same
// array with every S_ij replaced by S_ij^dagger. A factor is strongly PPT
// when the partial transpose of X^dagger X equals Y^dagger Y.

#ifndef SPPT_FACTOR_HPP
#define SPPT_FACTOR_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "sppt/bipartite.hpp"
#include "sppt/matrix.hpp"

namespace sppt {

/// 1-based block pair (i, j) with i < j.
using BlockPair = std::pair<std::size_t, std::size_t>;

class SpptFactor {
 public:
  /// Throws InvalidArgument unless there are M >= 1 diagonal blocks, exactly
  /// one S block per pair 1 <= i < j <= M, and every block is N x N.
  SpptFactor(std::vector<ComplexMatrix> x_blocks, std::map<BlockPair, ComplexMatrix> s_blocks);

  std::size_t dim_a() const { return x_blocks_.size(); }
  std::size_t dim_b() const { return dim_b_; }

  /// X_i, 1-based.
  const ComplexMatrix& x(std::size_t i) const;
  /// S_ij, 1-based, i < j.
  const ComplexMatrix& s(std::size_t i, std::size_t j) const;

  const std::vector<ComplexMatrix>& x_blocks() const { return x_blocks_; }
  const std::map<BlockPair, ComplexMatrix>& s_blocks() const { return s_blocks_; }

  /// Same X_i, every S_ij replaced by its adjoint.
  SpptFactor with_adjoint_s() const;

 private:
  std::vector<ComplexMatrix> x_blocks_;
  std::map<BlockPair, ComplexMatrix> s_blocks_;
  std::size_t dim_b_ = 0;
};

ComplexMatrix assemble_x(const SpptFactor& f);

/// rho = X^dagger X, unnormalized.
BipartiteState assemble_state(const SpptFactor& f, const Tolerance& tol = {});

/// rho assembled block by block from the closed-form expressions
///   rho_jj = sum_{k<j} X_k^dagger S_kj^dagger S_kj X_k + X_j^dagger X_j
///   rho_ij = sum_{k<i} X_k^dagger S_ki^dagger S_kj X_k + X_i^dagger S_ij X_i   (i < j)
/// and rho_ji = rho_ij^dagger. Independent of the dense product route.
ComplexMatrix assemble_state_by_blocks(const SpptFactor& f);

/// Y: assemble_x with S_ij -> S_ij^dagger.
ComplexMatrix canonical_partner(const SpptFactor& f);

struct ConditionResidual {
  std::size_t i = 0;  // i == j: diagonal condition for block column j
  std::size_t j = 0;
  double residual = 0.0;
};

struct SpptVerdict {
  bool is_sppt = false;
  /// max |rho^{T_A} - Y^dagger Y|.
  double max_defect = 0.0;
  /// residual_tol (1 + |rho|_max); both verdict routes compare against it.
  double threshold = 0.0;
  /// One entry per (j, j), j = 2..M, followed by (i, j), 2 <= i < j <= M.
  std::vector<ConditionResidual> conditions;
  bool conditions_hold = false;
  bool sufficient_commutation = false;
};

SpptVerdict sppt_verdict(const SpptFactor& f, const Tolerance& tol = {});

/// max over k < i <= j of |S_ki S_kj^dagger - S_kj^dagger S_ki|.
double commutation_defect(const SpptFactor& f);
bool satisfies_sufficient_commutation(const SpptFactor& f, const Tolerance& tol = {});

/// The canonical block Cholesky factor has an off-diagonal block that is not
/// of the form S X_i.
struct NotRepresentable {
  std::size_t i = 0;
  std::size_t j = 0;
  double residual = 0.0;
};

using FactorizeResult = std::variant<SpptFactor, NotRepresentable>;

/// Semidefinite Cholesky U of rho in the product basis, then X_i = U_ii and
/// S_ij = minimum-norm solution of S X_i = U_ij.
FactorizeResult canonical_factorize(const BipartiteState& s, const Tolerance& tol = {});

using StateVerdict = std::variant<SpptVerdict, NotRepresentable>;

/// SPPT along the canonical factorization.
StateVerdict is_sppt_state(const BipartiteState& s, const Tolerance& tol = {});

/// True for a verdict that is representable and SPPT.
bool is_sppt(const StateVerdict& v);

}  // namespace sppt

#endif  // SPPT_FACTOR_HPP
