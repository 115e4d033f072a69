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

#include "sppt/channel.hpp"

#include <algorithm>
#include <cmath>

#include "sppt/linalg.hpp"

namespace sppt {

ComplexMatrix StateChannel::apply(const ComplexMatrix& a) const {
  const std::size_t m = input_dim();
  if (a.rows() != m || a.cols() != m) {
    throw DimensionMismatch("channel input must be M x M");
  }
  ComplexMatrix out(output_dim(), output_dim());
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const Complex aij = a(i - 1, j - 1);
      if (aij == Complex{}) continue;
      out += aij * source_.block(i, j);
    }
  }
  return out;
}

BipartiteState StateChannel::choi() const {
  const std::size_t m = input_dim();
  const std::size_t n = output_dim();
  ComplexMatrix c(m * n, m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      ComplexMatrix unit(m, m);
      unit(i, j) = 1.0;
      c += kron(unit, apply(unit));
    }
  }
  c *= 1.0 / static_cast<double>(m);
  return BipartiteState::from_matrix(std::move(c), m, n, false);
}

double StateChannel::tp_defect() const {
  const std::size_t m = input_dim();
  double diag_trace = 0.0;
  for (std::size_t i = 1; i <= m; ++i) diag_trace += source_.block(i, i).trace().real();
  if (!(diag_trace > 0.0)) return 1.0;
  const double scale = static_cast<double>(m) / diag_trace;
  double worst = 0.0;
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const Complex t = scale * source_.block(i, j).trace();
      worst = std::max(worst, std::abs(t - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

std::string_view to_string(EbStatus s) {
  switch (s) {
    case EbStatus::kCertifiedNot:
      return "certified not";
    case EbStatus::kConsistent:
      return "consistent";
    case EbStatus::kUnknown:
      return "unknown";
  }
  return "unknown";
}

EbReport eb_report(const StateChannel& ch, const Tolerance& tol) {
  EbReport r;
  const BipartiteState c = ch.choi();
  r.cp = is_psd(c.matrix(), tol).psd;
  r.tp_defect = ch.tp_defect();
  const auto ppt = is_ppt(c, tol);
  r.choi_ppt = ppt.ppt;
  r.choi_min_eigenvalue = ppt.min_eigenvalue;
  r.choi_realignment = realignment_value(c, tol);
  r.eb_certified_false = !r.choi_ppt || r.choi_realignment > 1.0 + tol.residual_tol;
  if (!r.cp) {
    r.status = EbStatus::kUnknown;
  } else {
    r.status = r.eb_certified_false ? EbStatus::kCertifiedNot : EbStatus::kConsistent;
  }
  return r;
}

}  // namespace sppt
