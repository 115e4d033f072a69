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

// JSON file formats. Complex numbers are [re, im] pairs; doubles are
// written in shortest round-trip form, so parse(serialize(x)) is bit exact.
//
// Matrix file:
//   {"format": "sppt-matrix/1", "dims": [M, N], "normalized": bool,
//    "entries": [[[re, im], ...], ...], "metadata": {...}}
// Factor file:
//   {"format": "sppt-factor/1", "dims": [M, N],
//    "x_blocks": [matrix, ...], "s_blocks": [{"i": i, "j": j, "matrix": matrix}, ...],
//    "reconstruction_residual": r, "metadata": {...}}
// Harness report: see report_to_json.

#ifndef SPPT_IO_HPP
#define SPPT_IO_HPP

#include <filesystem>
#include <string>

#include "json.hpp"
#include "sppt/bipartite.hpp"
#include "sppt/factor.hpp"
#include "sppt/harness.hpp"
#include "sppt/matrix.hpp"

namespace sppt {

using Json = nlohmann::ordered_json;

struct MatrixFile {
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  bool normalized = false;
  ComplexMatrix entries;
  Json metadata = Json::object();
};

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json to_json(const MatrixFile& f);
/// Throws ParseError on schema violations.
MatrixFile matrix_file_from_json(const Json& j);

MatrixFile make_matrix_file(const BipartiteState& s, Json metadata = Json::object());
/// Validates the file contents as a state (not renormalized).
BipartiteState to_state(const MatrixFile& f, const Tolerance& tol = {});

Json factor_to_json(const SpptFactor& f, double reconstruction_residual,
                    Json metadata = Json::object());
SpptFactor factor_from_json(const Json& j);

Json report_to_json(const HarnessReport& r);

/// Serialized text: two-space indent, trailing newline.
std::string dump(const Json& j);
void write_json_file(const std::filesystem::path& path, const Json& j);
/// Throws ParseError if unreadable or not JSON.
Json read_json_file(const std::filesystem::path& path);

}  // namespace sppt

#endif  // SPPT_IO_HPP
