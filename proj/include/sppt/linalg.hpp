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

#ifndef SPPT_LINALG_HPP
#define SPPT_LINALG_HPP

#include <vector>

#include "sppt/matrix.hpp"

namespace sppt {

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// The input is symmetrized as (A + A^dagger)/2 before rotating, so the
/// result is exactly the decomposition of a Hermitian matrix even when A
/// carries round-off asymmetry below eq_tol.
///
/// Throws NotHermitian if hermiticity_defect(A) > eq_tol and NoConvergence
/// if the off-diagonal mass has not vanished after max_sweeps sweeps.
EigenDecomposition hermitian_eigen(const ComplexMatrix& a, const Tolerance& tol = {},
                                   int max_sweeps = 100);

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, const Tolerance& tol = {});

struct PsdCheck {
  bool psd = false;
  double min_eigenvalue = 0.0;
};

/// psd is true iff the smallest eigenvalue is >= -psd_tol.
PsdCheck is_psd(const ComplexMatrix& a, const Tolerance& tol = {});

/// Upper-triangular U with A = U^dagger U, no pivoting.
///
/// Semidefinite rule: a Schur pivot <= psd_tol zeroes its entire row of U;
/// a pivot < -psd_tol throws NotPsd.
ComplexMatrix cholesky_psd(const ComplexMatrix& a, const Tolerance& tol = {});

struct RightSolve {
  ComplexMatrix solution;
  bool exact = false;
  double residual = 0.0;  // max |S A - B|
};

/// Minimum-norm least-squares S with S A ~ B, via the pseudo-inverse of A
/// built from the eigendecomposition of A A^dagger. Singular values
/// <= psd_tol are discarded. exact iff residual <= residual_tol (1 + |B|_max).
RightSolve solve_right(const ComplexMatrix& b, const ComplexMatrix& a, const Tolerance& tol = {});

/// Singular values, descending. Computed from the Hermitian dilation
/// [[0, A], [A^dagger, 0]] whose spectrum is {+-sigma_i} plus zeros.
std::vector<double> singular_values(const ComplexMatrix& a, const Tolerance& tol = {});

/// Sum of singular values.
double trace_norm(const ComplexMatrix& a, const Tolerance& tol = {});

/// U diag(f(lambda)) U^dagger for Hermitian A.
template <typename Fn>
ComplexMatrix hermitian_function(const ComplexMatrix& a, Fn&& fn, const Tolerance& tol = {}) {
  const auto eig = hermitian_eigen(a, tol);
  const std::size_t n = a.rows();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex fk = fn(eig.values[k]);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = eig.vectors(i, k) * fk;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.vectors(j, k));
    }
  }
  return out;
}

}  // namespace sppt

#endif  // SPPT_LINALG_HPP
