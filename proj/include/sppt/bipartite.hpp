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

#ifndef SPPT_BIPARTITE_HPP
#define SPPT_BIPARTITE_HPP

#include <cstddef>
#include <string_view>

#include "sppt/matrix.hpp"

namespace sppt {

/// Density matrix on C^M (x) C^N viewed as an M x M array of N x N blocks.
///
/// Instances are validated on construction: Hermitian within eq_tol, PSD
/// within psd_tol, and trace one when normalized() is true.
class BipartiteState {
 public:
  /// Validates A as an (M N) x (M N) state. With require_normalized the
  /// matrix is first rescaled by 1 / trace (ZeroTrace if trace <= psd_tol).
  static BipartiteState from_matrix(ComplexMatrix a, std::size_t dim_a, std::size_t dim_b,
                                    bool require_normalized, const Tolerance& tol = {});

  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  bool normalized() const { return normalized_; }

  /// Block rho_ij; indices are 1-based, 1 <= i, j <= M.
  ComplexMatrix block(std::size_t i, std::size_t j) const;

  /// Copy rescaled to unit trace.
  BipartiteState normalized_copy() const;

 private:
  BipartiteState(ComplexMatrix m, std::size_t dim_a, std::size_t dim_b, bool normalized)
      : matrix_(std::move(m)), dim_a_(dim_a), dim_b_(dim_b), normalized_(normalized) {}

  ComplexMatrix matrix_;
  std::size_t dim_a_ = 0;
  std::size_t dim_b_ = 0;
  bool normalized_ = false;
};

/// Block (i, j) of a square (M N) x (M N) matrix, 1-based.
ComplexMatrix block_of(const ComplexMatrix& m, std::size_t dim_b, std::size_t i, std::size_t j);

/// Transposition on subsystem A: block (i, j) <- block (j, i).
ComplexMatrix partial_transpose_a(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b);
ComplexMatrix partial_transpose_a(const BipartiteState& s);

enum class PptClass { kPpt, kNpt, kMarginal };

std::string_view to_string(PptClass c);

struct PptVerdict {
  bool ppt = false;  // marginal counts as PPT
  PptClass classification = PptClass::kNpt;
  double min_eigenvalue = 0.0;
};

PptVerdict is_ppt(const BipartiteState& s, const Tolerance& tol = {});

/// Realigned M^2 x N^2 matrix R with R[(i, j), (k, l)] = <i k| rho |j l>,
/// row index i M + j and column index k N + l (0-based).
ComplexMatrix realign(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b);
ComplexMatrix realign(const BipartiteState& s);
/// Inverse of realign.
ComplexMatrix unrealign(const ComplexMatrix& r, std::size_t dim_a, std::size_t dim_b);

/// Trace norm of the realigned unit-trace state. Values above 1 certify
/// entanglement; values <= 1 are inconclusive.
double realignment_value(const BipartiteState& s, const Tolerance& tol = {});

}  // namespace sppt

#endif  // SPPT_BIPARTITE_HPP
