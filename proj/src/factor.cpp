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

#include "sppt/factor.hpp"

#include <algorithm>
#include <sstream>

#include "sppt/linalg.hpp"

namespace sppt {

SpptFactor::SpptFactor(std::vector<ComplexMatrix> x_blocks,
                       std::map<BlockPair, ComplexMatrix> s_blocks)
    : x_blocks_(std::move(x_blocks)), s_blocks_(std::move(s_blocks)) {
  const std::size_t m = x_blocks_.size();
  if (m == 0) throw InvalidArgument("factor needs at least one diagonal block");
  dim_b_ = x_blocks_.front().rows();
  if (dim_b_ == 0) throw InvalidArgument("factor blocks must be non-empty");
  const auto check_block = [&](const ComplexMatrix& b) {
    if (b.rows() != dim_b_ || b.cols() != dim_b_) {
      throw InvalidArgument("all factor blocks must be N x N");
    }
  };
  for (const auto& x : x_blocks_) check_block(x);
  if (s_blocks_.size() != m * (m - 1) / 2) {
    std::ostringstream msg;
    msg << "expected " << m * (m - 1) / 2 << " S blocks, got " << s_blocks_.size();
    throw InvalidArgument(msg.str());
  }
  for (const auto& [key, block] : s_blocks_) {
    const auto [i, j] = key;
    if (i < 1 || i >= j || j > m) {
      std::ostringstream msg;
      msg << "S block index (" << i << ", " << j << ") is not a pair 1 <= i < j <= " << m;
      throw InvalidArgument(msg.str());
    }
    check_block(block);
  }
}

const ComplexMatrix& SpptFactor::x(std::size_t i) const {
  if (i < 1 || i > x_blocks_.size()) throw IndexOutOfRange("X block index out of range");
  return x_blocks_[i - 1];
}

const ComplexMatrix& SpptFactor::s(std::size_t i, std::size_t j) const {
  const auto it = s_blocks_.find({i, j});
  if (it == s_blocks_.end()) throw IndexOutOfRange("S block index out of range");
  return it->second;
}

SpptFactor SpptFactor::with_adjoint_s() const {
  std::map<BlockPair, ComplexMatrix> adj;
  for (const auto& [key, block] : s_blocks_) adj.emplace(key, dagger(block));
  return SpptFactor(x_blocks_, std::move(adj));
}

ComplexMatrix assemble_x(const SpptFactor& f) {
  const std::size_t m = f.dim_a();
  const std::size_t n = f.dim_b();
  ComplexMatrix x(m * n, m * n);
  for (std::size_t i = 1; i <= m; ++i) {
    x.set_submatrix((i - 1) * n, (i - 1) * n, f.x(i));
    for (std::size_t j = i + 1; j <= m; ++j) {
      x.set_submatrix((i - 1) * n, (j - 1) * n, f.s(i, j) * f.x(i));
    }
  }
  return x;
}

BipartiteState assemble_state(const SpptFactor& f, const Tolerance& tol) {
  const ComplexMatrix x = assemble_x(f);
  return BipartiteState::from_matrix(dagger(x) * x, f.dim_a(), f.dim_b(), false, tol);
}

ComplexMatrix assemble_state_by_blocks(const SpptFactor& f) {
  const std::size_t m = f.dim_a();
  const std::size_t n = f.dim_b();
  ComplexMatrix rho(m * n, m * n);
  for (std::size_t i = 1; i <= m; ++i) {
    const ComplexMatrix xi_dag = dagger(f.x(i));
    for (std::size_t j = i; j <= m; ++j) {
      ComplexMatrix block = (i == j) ? xi_dag * f.x(i) : xi_dag * f.s(i, j) * f.x(i);
      for (std::size_t k = 1; k < i; ++k) {
        block += dagger(f.x(k)) * dagger(f.s(k, i)) * f.s(k, j) * f.x(k);
      }
      rho.set_submatrix((i - 1) * n, (j - 1) * n, block);
      if (i != j) rho.set_submatrix((j - 1) * n, (i - 1) * n, dagger(block));
    }
  }
  return rho;
}

ComplexMatrix canonical_partner(const SpptFactor& f) { return assemble_x(f.with_adjoint_s()); }

namespace {

// sum_{k<i} X_k^dagger (S_kj^dagger S_ki - S_ki S_kj^dagger) X_k, for i <= j.
ComplexMatrix condition_difference(const SpptFactor& f, std::size_t i, std::size_t j) {
  const std::size_t n = f.dim_b();
  ComplexMatrix diff(n, n);
  for (std::size_t k = 1; k < i; ++k) {
    const ComplexMatrix& ski = f.s(k, i);
    const ComplexMatrix skj_dag = dagger(f.s(k, j));
    diff += dagger(f.x(k)) * (skj_dag * ski - ski * skj_dag) * f.x(k);
  }
  return diff;
}

}  // namespace

SpptVerdict sppt_verdict(const SpptFactor& f, const Tolerance& tol) {
  const std::size_t m = f.dim_a();
  const ComplexMatrix x = assemble_x(f);
  const ComplexMatrix rho = dagger(x) * x;
  const ComplexMatrix y = canonical_partner(f);

  SpptVerdict v;
  v.threshold = tol.residual_tol * (1.0 + rho.max_abs());
  v.max_defect = max_abs_diff(partial_transpose_a(rho, m, f.dim_b()), dagger(y) * y);
  v.is_sppt = v.max_defect <= v.threshold;

  for (std::size_t j = 2; j <= m; ++j) {
    v.conditions.push_back({j, j, condition_difference(f, j, j).max_abs()});
  }
  for (std::size_t i = 2; i <= m; ++i) {
    for (std::size_t j = i + 1; j <= m; ++j) {
      v.conditions.push_back({i, j, condition_difference(f, i, j).max_abs()});
    }
  }
  v.conditions_hold = std::all_of(v.conditions.begin(), v.conditions.end(),
                                  [&](const auto& c) { return c.residual <= v.threshold; });
  v.sufficient_commutation = satisfies_sufficient_commutation(f, tol);
  return v;
}

double commutation_defect(const SpptFactor& f) {
  const std::size_t m = f.dim_a();
  double worst = 0.0;
  for (std::size_t k = 1; k <= m; ++k) {
    for (std::size_t i = k + 1; i <= m; ++i) {
      for (std::size_t j = i; j <= m; ++j) {
        const ComplexMatrix& ski = f.s(k, i);
        const ComplexMatrix skj_dag = dagger(f.s(k, j));
        worst = std::max(worst, max_abs_diff(ski * skj_dag, skj_dag * ski));
      }
    }
  }
  return worst;
}

bool satisfies_sufficient_commutation(const SpptFactor& f, const Tolerance& tol) {
  return commutation_defect(f) <= tol.residual_tol;
}

FactorizeResult canonical_factorize(const BipartiteState& s, const Tolerance& tol) {
  const std::size_t m = s.dim_a();
  const std::size_t n = s.dim_b();
  const ComplexMatrix u = cholesky_psd(s.matrix(), tol);

  std::vector<ComplexMatrix> xs;
  xs.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) xs.push_back(block_of(u, n, i, i));

  std::map<BlockPair, ComplexMatrix> ss;
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = i + 1; j <= m; ++j) {
      auto solved = solve_right(block_of(u, n, i, j), xs[i - 1], tol);
      if (!solved.exact) return NotRepresentable{i, j, solved.residual};
      ss.emplace(BlockPair{i, j}, std::move(solved.solution));
    }
  }
  return SpptFactor(std::move(xs), std::move(ss));
}

StateVerdict is_sppt_state(const BipartiteState& s, const Tolerance& tol) {
  auto factored = canonical_factorize(s, tol);
  if (const auto* failure = std::get_if<NotRepresentable>(&factored)) return *failure;
  return sppt_verdict(std::get<SpptFactor>(factored), tol);
}

bool is_sppt(const StateVerdict& v) {
  const auto* verdict = std::get_if<SpptVerdict>(&v);
  return verdict != nullptr && verdict->is_sppt;
}

}  // namespace sppt
