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

#include "sppt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace sppt {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double off_diagonal_mass(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return s;
}

void require_hermitian(const ComplexMatrix& a, const Tolerance& tol, const char* who) {
  if (!a.is_square()) {
    throw DimensionMismatch(std::string(who) + ": matrix is not square");
  }
  const double defect = hermiticity_defect(a);
  if (defect > tol.eq_tol) {
    std::ostringstream msg;
    msg << who << ": matrix is not Hermitian (defect " << defect << ")";
    throw NotHermitian(msg.str());
  }
}

// One complex Jacobi rotation annihilating a(p, q). The rotation is
// J = diag(1, d) * [[c, s], [-s, c]] restricted to rows/cols p, q, where d
// removes the phase of a(p, q) so the remaining 2x2 problem is real.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  const Complex d = std::conj(apq) / g;
  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = a.rows();

  const double new_pp = a(p, p).real() - t * g;
  const double new_qq = a(q, q).real() + t * g;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * d * akq;
    a(k, q) = s * akp + c * d * akq;
  }
  const Complex dc = std::conj(d);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * dc * aqk;
    a(q, k) = s * apk + c * dc * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = new_pp;
  a(q, q) = new_qq;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * d * vkq;
    v(k, q) = s * vkp + c * d * vkq;
  }
}

}  // namespace

EigenDecomposition hermitian_eigen(const ComplexMatrix& input, const Tolerance& tol,
                                   int max_sweeps) {
  require_hermitian(input, tol, "hermitian_eigen");
  const std::size_t n = input.rows();

  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = input(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex h = 0.5 * (input(i, j) + std::conj(input(j, i)));
      a(i, j) = h;
      a(j, i) = std::conj(h);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = a.frobenius_norm();
  const double target = std::pow(static_cast<double>(n) * kEps * scale, 2);
  bool converged = scale == 0.0;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    if (off_diagonal_mass(a) <= target) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double g = std::abs(a(p, q));
        if (g == 0.0) continue;
        // Entries that no longer perturb either diagonal are dropped.
        if (sweep > 3 && std::abs(a(p, p).real()) + 100.0 * g == std::abs(a(p, p).real()) &&
            std::abs(a(q, q).real()) + 100.0 * g == std::abs(a(q, q).real())) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        rotate(a, v, p, q);
      }
    }
  }
  if (!converged && off_diagonal_mass(a) > target) {
    throw NoConvergence("hermitian_eigen: Jacobi sweep budget exhausted");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });
  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, const Tolerance& tol) {
  return hermitian_eigen(a, tol).values;
}

PsdCheck is_psd(const ComplexMatrix& a, const Tolerance& tol) {
  const auto values = hermitian_eigenvalues(a, tol);
  const double min_eig = values.empty() ? 0.0 : values.front();
  return {min_eig >= -tol.psd_tol, min_eig};
}

ComplexMatrix cholesky_psd(const ComplexMatrix& a, const Tolerance& tol) {
  require_hermitian(a, tol, "cholesky_psd");
  const std::size_t n = a.rows();
  ComplexMatrix u(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    double pivot = a(k, k).real();
    for (std::size_t m = 0; m < k; ++m) pivot -= std::norm(u(m, k));
    if (pivot < -tol.psd_tol) {
      std::ostringstream msg;
      msg << "cholesky_psd: negative pivot " << pivot << " at index " << k;
      throw NotPsd(msg.str());
    }
    if (pivot <= tol.psd_tol) continue;  // row k stays zero
    const double ukk = std::sqrt(pivot);
    u(k, k) = ukk;
    for (std::size_t j = k + 1; j < n; ++j) {
      Complex s = a(k, j);
      for (std::size_t m = 0; m < k; ++m) s -= std::conj(u(m, k)) * u(m, j);
      u(k, j) = s / ukk;
    }
  }
  return u;
}

RightSolve solve_right(const ComplexMatrix& b, const ComplexMatrix& a, const Tolerance& tol) {
  if (b.cols() != a.cols()) {
    throw DimensionMismatch("solve_right: B and A must have the same column count");
  }
  const ComplexMatrix a_dag = dagger(a);
  const auto eig = hermitian_eigen(a * a_dag, tol);
  const double lambda_max = eig.values.empty() ? 0.0 : std::max(0.0, eig.values.back());
  // sigma <= psd_tol, or indistinguishable from round-off in A A^dagger.
  const double cutoff = std::max(tol.psd_tol * tol.psd_tol,
                                 static_cast<double>(a.rows()) * kEps * lambda_max);

  const std::size_t m = a.rows();
  ComplexMatrix gram_pinv(m, m);
  for (std::size_t k = 0; k < m; ++k) {
    if (eig.values[k] <= cutoff) continue;
    const double inv = 1.0 / eig.values[k];
    for (std::size_t i = 0; i < m; ++i) {
      const Complex vik = eig.vectors(i, k) * inv;
      for (std::size_t j = 0; j < m; ++j) gram_pinv(i, j) += vik * std::conj(eig.vectors(j, k));
    }
  }
  RightSolve out;
  out.solution = b * a_dag * gram_pinv;
  out.residual = max_abs_diff(out.solution * a, b);
  out.exact = out.residual <= tol.residual_tol * (1.0 + b.max_abs());
  return out;
}

std::vector<double> singular_values(const ComplexMatrix& a, const Tolerance& tol) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  ComplexMatrix dilation(m + n, m + n);
  dilation.set_submatrix(0, m, a);
  dilation.set_submatrix(m, 0, dagger(a));
  auto values = hermitian_eigenvalues(dilation, tol);
  const std::size_t k = std::min(m, n);
  std::vector<double> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(std::max(0.0, values[values.size() - 1 - i]));
  return out;
}

double trace_norm(const ComplexMatrix& a, const Tolerance& tol) {
  const auto sv = singular_values(a, tol);
  return std::accumulate(sv.begin(), sv.end(), 0.0);
}

}  // namespace sppt
