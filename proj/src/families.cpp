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

#include "sppt/families.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sppt/linalg.hpp"

namespace sppt {

namespace {

// Slack on parameter domains and closed-form rule boundaries.
constexpr double kParamSlack = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_range(double value, double lo, double hi, const char* what) {
  if (!std::isfinite(value) || value < lo - kParamSlack || value > hi + kParamSlack) {
    std::ostringstream msg;
    msg << "parameter out of range: " << what << " = " << value << " not in [" << lo << ", "
        << hi << "]";
    throw ParamOutOfRange(msg.str());
  }
}

void require_psd_input(const ComplexMatrix& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n) {
    std::ostringstream msg;
    msg << what << " must be " << n << "x" << n;
    throw DimensionMismatch(msg.str());
  }
  if (!is_hermitian(m, Tolerance{}.eq_tol) || !is_psd(m).psd) {
    throw NotPsd(std::string(what) + " must be Hermitian positive semidefinite");
  }
}

// Closed-form 2x2 positivity: [[p, z], [conj(z), q]] >= 0.
bool psd_2x2(double p, double q, Complex z) {
  return p >= -kParamSlack && q >= -kParamSlack && p * q - std::norm(z) >= -kParamSlack;
}

ComplexMatrix swap_operator(std::size_t n) {
  ComplexMatrix f(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) f(i * n + j, j * n + i) = 1.0;
  }
  return f;
}

ComplexMatrix phi_plus_projector(std::size_t n) {
  ComplexMatrix p(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) p(i * n + i, j * n + j) = 1.0 / static_cast<double>(n);
  }
  return p;
}

BipartiteState normalized_state(ComplexMatrix m, std::size_t dim_a, std::size_t dim_b) {
  return BipartiteState::from_matrix(std::move(m), dim_a, dim_b, true);
}

bool is_diagonal(const ComplexMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j && std::abs(m(i, j)) > Tolerance{}.eq_tol) return false;
    }
  }
  return true;
}

ComplexMatrix orthogonally_invariant_block(double diag, double off) {
  return {{diag / 4.0, off / 4.0}, {off / 4.0, diag / 4.0}};
}

}  // namespace

std::pair<double, double> werner_range(std::size_t n) {
  const double d_anti = n * (n - 1) / 2.0;
  const double d_sym = n * (n + 1) / 2.0;
  return {-d_anti / d_sym, 1.0};
}

BipartiteState werner(std::size_t n, double p) {
  if (n < 2) throw ParamOutOfRange("parameter out of range: werner needs N >= 2");
  const auto [lo, hi] = werner_range(n);
  require_range(p, lo, hi, "werner p");
  const double dim = static_cast<double>(n * n);
  const double d_anti = n * (n - 1) / 2.0;
  const ComplexMatrix id = ComplexMatrix::identity(n * n);
  const ComplexMatrix anti = 0.5 * (id - swap_operator(n));
  return normalized_state(((1.0 - p) / dim) * id + (p / d_anti) * anti, n, n);
}

std::pair<double, double> isotropic_range(std::size_t n) {
  return {-1.0 / (static_cast<double>(n * n) - 1.0), 1.0};
}

BipartiteState isotropic(std::size_t n, double p) {
  if (n < 2) throw ParamOutOfRange("parameter out of range: isotropic needs N >= 2");
  const auto [lo, hi] = isotropic_range(n);
  require_range(p, lo, hi, "isotropic p");
  const double dim = static_cast<double>(n * n);
  return normalized_state(((1.0 - p) / dim) * ComplexMatrix::identity(n * n) +
                              p * phi_plus_projector(n),
                          n, n);
}

BipartiteState circulant_2x2(const ComplexMatrix& a, const ComplexMatrix& b) {
  return circulant(2, {a, b});
}

BipartiteState circulant(std::size_t n, const std::vector<ComplexMatrix>& blocks) {
  if (n < 2 || (n % 2 == 0 && n != 2)) {
    throw ParamOutOfRange("parameter out of range: circulant states need N = 2 or odd N");
  }
  if (blocks.size() != n) throw DimensionMismatch("circulant state needs N blocks");
  for (const auto& blk : blocks) require_psd_input(blk, n, "circulant block");
  ComplexMatrix rho(n * n, n * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        rho(i * n + (i + k) % n, j * n + (j + k) % n) = blocks[k](i, j);
      }
    }
  }
  return normalized_state(std::move(rho), n, n);
}

std::vector<ComplexMatrix> circulant_transposed_sectors(std::size_t n,
                                                        const std::vector<ComplexMatrix>& blocks) {
  std::vector<ComplexMatrix> sectors(n, ComplexMatrix(n, n));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t k = (s + 2 * n - r - c) % n;
        sectors[s](r, c) = blocks[k](c, r);
      }
    }
  }
  return sectors;
}

BipartiteState orthogonally_invariant(double a, double b, double c) {
  require_range(a, 0.0, 1.0, "a");
  require_range(b, 0.0, 1.0, "b");
  require_range(c, 0.0, 1.0, "c");
  if (std::abs(a + b + c - 1.0) > Tolerance{}.eq_tol) {
    throw ParamOutOfRange("parameter out of range: a + b + c must equal 1");
  }
  return circulant_2x2(orthogonally_invariant_block(a + 2 * b, 2 * b - a),
                       orthogonally_invariant_block(a + 2 * c, a - 2 * c));
}

BipartiteState horodecki_2x4(double b) {
  require_range(b, 0.0, 1.0, "horodecki_2x4 b");
  b = std::clamp(b, 0.0, 1.0);
  ComplexMatrix rho(8, 8);
  for (std::size_t k = 0; k < 8; ++k) rho(k, k) = b;
  for (std::size_t k = 0; k < 3; ++k) {
    rho(k, k + 5) = b;
    rho(k + 5, k) = b;
  }
  const double diag = (1.0 + b) / 2.0;
  const double off = std::sqrt(1.0 - b * b) / 2.0;
  rho(4, 4) = diag;
  rho(7, 7) = diag;
  rho(4, 7) = off;
  rho(7, 4) = off;
  return normalized_state((1.0 / (7.0 * b + 1.0)) * rho, 2, 4);
}

BipartiteState horodecki_3x3(double a) {
  require_range(a, 0.0, 1.0, "horodecki_3x3 a");
  a = std::clamp(a, 0.0, 1.0);
  ComplexMatrix rho(9, 9);
  for (std::size_t k = 0; k < 9; ++k) rho(k, k) = a;
  for (std::size_t x : {0, 4, 8}) {
    for (std::size_t y : {0, 4, 8}) rho(x, y) = a;
  }
  const double diag = (1.0 + a) / 2.0;
  const double off = std::sqrt(1.0 - a * a) / 2.0;
  rho(6, 6) = diag;
  rho(8, 8) = diag;
  rho(6, 8) = off;
  rho(8, 6) = off;
  return normalized_state((1.0 / (8.0 * a + 1.0)) * rho, 3, 3);
}

BipartiteState diagonal_class(std::size_t n, const ComplexMatrix& a, const ComplexMatrix& b) {
  if (n < 2) throw ParamOutOfRange("parameter out of range: diagonal class needs N >= 2");
  require_psd_input(a, n, "diagonal class matrix a");
  if (b.rows() != n || b.cols() != n) throw DimensionMismatch("diagonal class b must be N x N");
  ComplexMatrix rho(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rho(i * n + i, j * n + j) = a(i, j);
      if (i == j) continue;
      const Complex bij = b(i, j);
      if (std::abs(bij.imag()) > kParamSlack || !(bij.real() > 0.0)) {
        throw ParamOutOfRange("parameter out of range: b_ij must be positive");
      }
      rho(i * n + j, i * n + j) = bij.real();
    }
  }
  return normalized_state(std::move(rho), n, n);
}

std::string_view family_id(const FamilySpec& spec) {
  return std::visit(Overloaded{
                        [](const WernerParams&) { return std::string_view("werner"); },
                        [](const IsotropicParams&) { return std::string_view("isotropic"); },
                        [](const Circulant2x2Params&) { return std::string_view("circulant2x2"); },
                        [](const OrthogonallyInvariantParams&) {
                          return std::string_view("orthogonally_invariant");
                        },
                        [](const Horodecki2x4Params&) { return std::string_view("horodecki_2x4"); },
                        [](const Horodecki3x3Params&) { return std::string_view("horodecki_3x3"); },
                        [](const DiagonalClassParams&) { return std::string_view("diagonal_class"); },
                        [](const CirculantParams&) { return std::string_view("circulant_NxN"); },
                    },
                    spec);
}

std::pair<std::size_t, std::size_t> family_dims(const FamilySpec& spec) {
  using Dims = std::pair<std::size_t, std::size_t>;
  return std::visit(Overloaded{
                        [](const WernerParams& p) { return Dims{p.n, p.n}; },
                        [](const IsotropicParams& p) { return Dims{p.n, p.n}; },
                        [](const Circulant2x2Params&) { return Dims{2, 2}; },
                        [](const OrthogonallyInvariantParams&) { return Dims{2, 2}; },
                        [](const Horodecki2x4Params&) { return Dims{2, 4}; },
                        [](const Horodecki3x3Params&) { return Dims{3, 3}; },
                        [](const DiagonalClassParams& p) { return Dims{p.n, p.n}; },
                        [](const CirculantParams& p) { return Dims{p.n, p.n}; },
                    },
                    spec);
}

BipartiteState generate(const FamilySpec& spec) {
  return std::visit(
      Overloaded{
          [](const WernerParams& p) { return werner(p.n, p.p); },
          [](const IsotropicParams& p) { return isotropic(p.n, p.p); },
          [](const Circulant2x2Params& p) { return circulant_2x2(p.a, p.b); },
          [](const OrthogonallyInvariantParams& p) { return orthogonally_invariant(p.a, p.b, p.c); },
          [](const Horodecki2x4Params& p) { return horodecki_2x4(p.b); },
          [](const Horodecki3x3Params& p) { return horodecki_3x3(p.a); },
          [](const DiagonalClassParams& p) { return diagonal_class(p.n, p.a, p.b); },
          [](const CirculantParams& p) { return circulant(p.n, p.blocks); },
      },
      spec);
}

namespace {

FamilyVerdictClaim circulant_2x2_claim(const ComplexMatrix& a, const ComplexMatrix& b) {
  // rho^{T_A} is circulant with a~ = (a11, b21; b12, a22), b~ = (b11, a21; a12, b22).
  const bool ppt = psd_2x2(a(0, 0).real(), a(1, 1).real(), b(1, 0)) &&
                   psd_2x2(b(0, 0).real(), b(1, 1).real(), a(1, 0));
  const bool equal_moduli = std::abs(std::abs(a(0, 1)) - std::abs(b(0, 1))) <= kParamSlack;
  return {ppt, ppt && equal_moduli, "circulant 2x2: PPT iff a~, b~ >= 0; SPPT iff PPT and |a12| = |b12|"};
}

}  // namespace

FamilyVerdictClaim claims(const FamilySpec& spec) {
  return std::visit(
      Overloaded{
          [](const WernerParams& p) {
            const double edge = 1.0 / (static_cast<double>(p.n) + 1.0);
            return FamilyVerdictClaim{p.p <= edge + kParamSlack, std::abs(p.p) <= kParamSlack,
                                      "werner: PPT iff p <= 1/(N+1); SPPT iff maximally mixed"};
          },
          [](const IsotropicParams& p) {
            const double edge = 1.0 / (static_cast<double>(p.n) + 1.0);
            return FamilyVerdictClaim{p.p <= edge + kParamSlack, std::abs(p.p) <= kParamSlack,
                                      "isotropic: PPT iff p <= 1/(N+1); SPPT iff maximally mixed"};
          },
          [](const Circulant2x2Params& p) { return circulant_2x2_claim(p.a, p.b); },
          [](const OrthogonallyInvariantParams& p) {
            // Circulant rule with a12 = (2b - a)/4, b12 = (a - 2c)/4. Equal
            // moduli means b = c, or a = 1/2 where rho^{T_A} = rho.
            const bool ppt = p.b <= 0.5 + kParamSlack && p.c <= 0.5 + kParamSlack;
            const bool moduli =
                std::abs(std::abs(2 * p.b - p.a) - std::abs(p.a - 2 * p.c)) <= kParamSlack;
            return FamilyVerdictClaim{
                ppt, ppt && moduli,
                "orthogonally invariant: PPT iff b, c <= 1/2; SPPT iff PPT and |2b - a| = |a - 2c| "
                "(b = c, or a = 1/2)"};
          },
          [](const Horodecki2x4Params& p) {
            return FamilyVerdictClaim{true, p.b <= kParamSlack, "horodecki 2x4: PPT; SPPT iff b = 0"};
          },
          [](const Horodecki3x3Params& p) {
            return FamilyVerdictClaim{true, p.a <= kParamSlack, "horodecki 3x3: PPT; SPPT iff a = 0"};
          },
          [](const DiagonalClassParams& p) {
            bool ppt = true;
            bool off_diagonal_zero = true;
            for (std::size_t i = 0; i < p.n; ++i) {
              for (std::size_t j = 0; j < p.n; ++j) {
                if (i == j) continue;
                // 2x2 sector on span{|ij>, |ji>} of rho^{T_A}.
                ppt = ppt && psd_2x2(p.b(i, j).real(), p.b(j, i).real(), p.a(i, j));
                off_diagonal_zero = off_diagonal_zero && std::abs(p.a(i, j)) <= kParamSlack;
              }
            }
            return FamilyVerdictClaim{
                ppt, ppt && off_diagonal_zero,
                "diagonal class: PPT iff |a_ij a_ji| <= b_ij b_ji; SPPT iff a_ij = 0 for i != j"};
          },
          [](const CirculantParams& p) {
            if (p.n == 2) return circulant_2x2_claim(p.blocks.at(0), p.blocks.at(1));
            bool ppt = true;
            for (const auto& sector : circulant_transposed_sectors(p.n, p.blocks)) {
              ppt = ppt && is_psd(sector).psd;
            }
            bool diagonal = true;
            for (const auto& blk : p.blocks) diagonal = diagonal && is_diagonal(blk);
            return FamilyVerdictClaim{
                ppt, ppt && diagonal,
                "circulant, odd N: PPT iff every transposed sector >= 0; SPPT iff PPT and diagonal"};
          },
      },
      spec);
}

BipartiteState maximally_mixed(std::size_t dim_a, std::size_t dim_b) {
  return normalized_state(ComplexMatrix::identity(dim_a * dim_b), dim_a, dim_b);
}

BipartiteState maximally_entangled(std::size_t n) {
  return BipartiteState::from_matrix(phi_plus_projector(n), n, n, true);
}

}  // namespace sppt
