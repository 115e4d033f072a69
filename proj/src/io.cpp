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

#include "sppt/io.hpp"

#include <fstream>
#include <sstream>

namespace sppt {

namespace {

constexpr const char* kMatrixFormat = "sppt-matrix/1";
constexpr const char* kFactorFormat = "sppt-factor/1";
constexpr const char* kReportFormat = "sppt-harness-report/1";

[[noreturn]] void parse_fail(const std::string& what) { throw ParseError("parse error: " + what); }

const Json& require_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t require_count(const Json& j, const char* what) {
  if (!j.is_number_unsigned() || j.get<std::size_t>() == 0) {
    parse_fail(std::string(what) + " must be a positive integer");
  }
  return j.get<std::size_t>();
}

void require_format(const Json& j, const char* format) {
  const Json& f = require_field(j, "format");
  if (!f.is_string() || f.get<std::string>() != format) {
    parse_fail(std::string("expected format '") + format + "'");
  }
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) parse_fail("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  if (cols == 0) parse_fail("matrix rows must be non-empty arrays");
  std::vector<Complex> data;
  data.reserve(rows * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) parse_fail("matrix rows must have equal length");
    for (const auto& z : row) {
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        parse_fail("complex entries must be [re, im] number pairs");
      }
      data.emplace_back(z[0].get<double>(), z[1].get<double>());
    }
  }
  try {
    return ComplexMatrix(rows, cols, std::move(data));
  } catch (const Error& e) {
    parse_fail(e.what());
  }
}

Json to_json(const MatrixFile& f) {
  Json j = Json::object();
  j["format"] = kMatrixFormat;
  j["dims"] = {f.dim_a, f.dim_b};
  j["normalized"] = f.normalized;
  j["entries"] = matrix_to_json(f.entries);
  j["metadata"] = f.metadata;
  return j;
}

MatrixFile matrix_file_from_json(const Json& j) {
  require_format(j, kMatrixFormat);
  const Json& dims = require_field(j, "dims");
  if (!dims.is_array() || dims.size() != 2) parse_fail("dims must be [M, N]");
  MatrixFile f;
  f.dim_a = require_count(dims[0], "M");
  f.dim_b = require_count(dims[1], "N");
  const Json& normalized = require_field(j, "normalized");
  if (!normalized.is_boolean()) parse_fail("normalized must be a boolean");
  f.normalized = normalized.get<bool>();
  f.entries = matrix_from_json(require_field(j, "entries"));
  const std::size_t dim = f.dim_a * f.dim_b;
  if (f.entries.rows() != dim || f.entries.cols() != dim) {
    parse_fail("entries must be an MN x MN array");
  }
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) parse_fail("metadata must be an object");
    f.metadata = j["metadata"];
  }
  return f;
}

MatrixFile make_matrix_file(const BipartiteState& s, Json metadata) {
  return {s.dim_a(), s.dim_b(), s.normalized(), s.matrix(), std::move(metadata)};
}

BipartiteState to_state(const MatrixFile& f, const Tolerance& tol) {
  return BipartiteState::from_matrix(f.entries, f.dim_a, f.dim_b, false, tol);
}

Json factor_to_json(const SpptFactor& f, double reconstruction_residual, Json metadata) {
  Json j = Json::object();
  j["format"] = kFactorFormat;
  j["dims"] = {f.dim_a(), f.dim_b()};
  Json xs = Json::array();
  for (const auto& x : f.x_blocks()) xs.push_back(matrix_to_json(x));
  j["x_blocks"] = std::move(xs);
  Json ss = Json::array();
  for (const auto& [key, block] : f.s_blocks()) {
    Json entry = Json::object();
    entry["i"] = key.first;
    entry["j"] = key.second;
    entry["matrix"] = matrix_to_json(block);
    ss.push_back(std::move(entry));
  }
  j["s_blocks"] = std::move(ss);
  j["reconstruction_residual"] = reconstruction_residual;
  j["metadata"] = std::move(metadata);
  return j;
}

SpptFactor factor_from_json(const Json& j) {
  require_format(j, kFactorFormat);
  const Json& xs = require_field(j, "x_blocks");
  const Json& ss = require_field(j, "s_blocks");
  if (!xs.is_array() || !ss.is_array()) parse_fail("x_blocks and s_blocks must be arrays");
  std::vector<ComplexMatrix> x_blocks;
  for (const auto& x : xs) x_blocks.push_back(matrix_from_json(x));
  std::map<BlockPair, ComplexMatrix> s_blocks;
  for (const auto& s : ss) {
    const std::size_t i = require_count(require_field(s, "i"), "i");
    const std::size_t jj = require_count(require_field(s, "j"), "j");
    s_blocks.emplace(BlockPair{i, jj}, matrix_from_json(require_field(s, "matrix")));
  }
  try {
    return SpptFactor(std::move(x_blocks), std::move(s_blocks));
  } catch (const Error& e) {
    parse_fail(e.what());
  }
}

Json report_to_json(const HarnessReport& r) {
  Json j = Json::object();
  j["format"] = kReportFormat;
  j["sample_count"] = r.config.count;
  j["dims"] = {r.config.dim_a, r.config.dim_b};
  j["sampler_id"] = std::string(to_string(r.config.sampler));
  j["master_seed"] = r.config.master_seed;
  j["tolerance"] = {{"eq_tol", r.config.tol.eq_tol},
                    {"psd_tol", r.config.tol.psd_tol},
                    {"residual_tol", r.config.tol.residual_tol}};
  Json records = Json::array();
  for (const auto& rec : r.records) {
    Json e = Json::object();
    e["index"] = rec.index;
    e["seed"] = rec.seed;
    e["min_eig_pt"] = rec.min_eig_pt;
    e["realignment_value"] = rec.realignment_value;
    e["sppt_defect"] = rec.sppt_defect;
    e["is_sppt"] = rec.is_sppt;
    records.push_back(std::move(e));
  }
  j["records"] = std::move(records);
  const auto& a = r.aggregate;
  Json agg = Json::object();
  agg["max_realignment"] = a.max_realignment;
  agg["min_eigenvalue"] = a.min_eigenvalue;
  agg["max_sppt_defect"] = a.max_sppt_defect;
  agg["violations"] = a.violations;
  agg["sppt_failures"] = a.sppt_failures;
  Json seeds = Json::array();
  for (std::size_t idx : a.violation_indices) {
    seeds.push_back({{"index", idx}, {"seed", r.records[idx].seed}});
  }
  agg["violation_seeds"] = std::move(seeds);
  j["aggregate"] = std::move(agg);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << dump(j);
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("invalid JSON in '") + path.string() + "': " + e.what());
  }
}

}  // namespace sppt
