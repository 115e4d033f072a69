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

#ifndef SPPT_CHANNEL_HPP
#define SPPT_CHANNEL_HPP

#include <string_view>

#include "sppt/bipartite.hpp"
#include "sppt/matrix.hpp"

namespace sppt {

/// Linear map Phi: M_M -> M_N with Phi(e_ij) = rho_ij, the (i, j) block of
/// the source state. The source normalization is kept as is.
class StateChannel {
 public:
  explicit StateChannel(BipartiteState source) : source_(std::move(source)) {}

  const BipartiteState& source() const { return source_; }
  std::size_t input_dim() const { return source_.dim_a(); }
  std::size_t output_dim() const { return source_.dim_b(); }

  /// sum_ij A_ij rho_ij. Throws DimensionMismatch unless A is M x M.
  ComplexMatrix apply(const ComplexMatrix& a) const;

  /// (1/M) sum_ij e_ij (x) Phi(e_ij), i.e. (id (x) Phi) applied to the
  /// maximally entangled projector on C^M (x) C^M.
  BipartiteState choi() const;

  /// max_ij |tr(rho_ij) - delta_ij| after rescaling so that
  /// tr(sum_i rho_ii) = M. Zero iff Phi is trace preserving.
  double tp_defect() const;

 private:
  BipartiteState source_;
};

enum class EbStatus { kCertifiedNot, kConsistent, kUnknown };

std::string_view to_string(EbStatus s);

struct EbReport {
  bool cp = false;
  double tp_defect = 0.0;
  bool choi_ppt = false;
  double choi_min_eigenvalue = 0.0;
  double choi_realignment = 0.0;
  /// Choi fails PPT or realignment, so Phi is not entanglement breaking.
  bool eb_certified_false = false;
  /// kCertifiedNot when eb_certified_false; kConsistent when both necessary
  /// criteria pass. Necessary criteria never certify EB itself.
  EbStatus status = EbStatus::kUnknown;
};

EbReport eb_report(const StateChannel& ch, const Tolerance& tol = {});

}  // namespace sppt

#endif  // SPPT_CHANNEL_HPP
