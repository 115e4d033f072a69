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

#include "sppt/bipartite.hpp"

#include <cmath>
#include <sstream>

#include "sppt/linalg.hpp"

namespace sppt {

BipartiteState BipartiteState::from_matrix(ComplexMatrix a, std::size_t dim_a,
                                           std::size_t dim_b, bool require_normalized,
                                           const Tolerance& tol) {
  tol.validate();
  if (dim_a == 0 || dim_b == 0 || a.rows() != dim_a * dim_b || a.cols() != dim_a * dim_b) {
    std::ostringstream msg;
    msg << "state of shape " << a.rows() << "x" << a.cols() << " does not match " << dim_a
        << "x" << dim_b;
    throw DimensionMismatch(msg.str());
  }
  const double herm = hermiticity_defect(a);
  if (herm > tol.eq_tol) {
    std::ostringstream msg;
    msg << "state is not Hermitian (defect " << herm << ")";
    throw NotHermitian(msg.str());
  }
  if (require_normalized) {
    const double tr = a.trace().real();
    if (!(tr > tol.psd_tol)) throw ZeroTrace("state trace is not positive");
    a *= 1.0 / tr;
  }
  const auto psd = is_psd(a, tol);
  if (!psd.psd) {
    std::ostringstream msg;
    msg << "state is not positive semidefinite (min eigenvalue " << psd.min_eigenvalue << ")";
    throw NotPsd(msg.str());
  }
  const bool unit_trace = std::abs(a.trace() - 1.0) <= tol.eq_tol;
  return BipartiteState(std::move(a), dim_a, dim_b, unit_trace);
}

ComplexMatrix BipartiteState::block(std::size_t i, std::size_t j) const {
  if (i < 1 || j < 1 || i > dim_a_ || j > dim_a_) {
    std::ostringstream msg;
    msg << "block index (" << i << ", " << j << ") outside 1.." << dim_a_;
    throw IndexOutOfRange(msg.str());
  }
  return block_of(matrix_, dim_b_, i, j);
}

BipartiteState BipartiteState::normalized_copy() const {
  if (normalized_) return *this;
  const double tr = matrix_.trace().real();
  if (!(tr > 0.0)) throw ZeroTrace("state trace is not positive");
  return BipartiteState((1.0 / tr) * matrix_, dim_a_, dim_b_, true);
}

ComplexMatrix block_of(const ComplexMatrix& m, std::size_t dim_b, std::size_t i, std::size_t j) {
  return m.submatrix((i - 1) * dim_b, (j - 1) * dim_b, dim_b, dim_b);
}

ComplexMatrix partial_transpose_a(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b) {
  if (m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b) {
    throw DimensionMismatch("partial_transpose_a: matrix does not match dimensions");
  }
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < dim_a; ++i) {
    for (std::size_t j = 0; j < dim_a; ++j) {
      for (std::size_t k = 0; k < dim_b; ++k) {
        for (std::size_t l = 0; l < dim_b; ++l) {
          out(i * dim_b + k, j * dim_b + l) = m(j * dim_b + k, i * dim_b + l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_transpose_a(const BipartiteState& s) {
  return partial_transpose_a(s.matrix(), s.dim_a(), s.dim_b());
}

std::string_view to_string(PptClass c) {
  switch (c) {
    case PptClass::kPpt:
      return "PPT";
    case PptClass::kNpt:
      return "NPT";
    case PptClass::kMarginal:
      return "marginal";
  }
  return "unknown";
}

PptVerdict is_ppt(const BipartiteState& s, const Tolerance& tol) {
  const auto check = is_psd(partial_transpose_a(s), tol);
  PptVerdict v;
  v.min_eigenvalue = check.min_eigenvalue;
  v.ppt = check.psd;
  if (std::abs(check.min_eigenvalue) <= tol.psd_tol) {
    v.classification = PptClass::kMarginal;
  } else {
    v.classification = check.psd ? PptClass::kPpt : PptClass::kNpt;
  }
  return v;
}

ComplexMatrix realign(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b) {
  if (m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b) {
    throw DimensionMismatch("realign: matrix does not match dimensions");
  }
  ComplexMatrix r(dim_a * dim_a, dim_b * dim_b);
  for (std::size_t i = 0; i < dim_a; ++i) {
    for (std::size_t j = 0; j < dim_a; ++j) {
      for (std::size_t k = 0; k < dim_b; ++k) {
        for (std::size_t l = 0; l < dim_b; ++l) {
          r(i * dim_a + j, k * dim_b + l) = m(i * dim_b + k, j * dim_b + l);
        }
      }
    }
  }
  return r;
}

ComplexMatrix realign(const BipartiteState& s) { return realign(s.matrix(), s.dim_a(), s.dim_b()); }

ComplexMatrix unrealign(const ComplexMatrix& r, std::size_t dim_a, std::size_t dim_b) {
  if (r.rows() != dim_a * dim_a || r.cols() != dim_b * dim_b) {
    throw DimensionMismatch("unrealign: matrix does not match dimensions");
  }
  ComplexMatrix m(dim_a * dim_b, dim_a * dim_b);
  for (std::size_t i = 0; i < dim_a; ++i) {
    for (std::size_t j = 0; j < dim_a; ++j) {
      for (std::size_t k = 0; k < dim_b; ++k) {
        for (std::size_t l = 0; l < dim_b; ++l) {
          m(i * dim_b + k, j * dim_b + l) = r(i * dim_a + j, k * dim_b + l);
        }
      }
    }
  }
  return m;
}

double realignment_value(const BipartiteState& s, const Tolerance& tol) {
  return trace_norm(realign(s.normalized_copy()), tol);
}

}  // namespace sppt
