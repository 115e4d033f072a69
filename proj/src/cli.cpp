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

#include "sppt/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "sppt/channel.hpp"
#include "sppt/factor.hpp"
#include "sppt/families.hpp"
#include "sppt/harness.hpp"
#include "sppt/io.hpp"
#include "sppt/sampling.hpp"

namespace sppt::cli {

namespace {

struct GenOptions {
  std::string family;
  std::string out;
  std::optional<std::size_t> m;
  std::optional<std::size_t> n;
  std::optional<double> p;
  bool maximally_mixed = false;
  std::optional<double> a;
  std::optional<double> b;
  std::optional<double> c;
  std::string a_matrix;
  std::string b_matrix;
  std::string blocks;
  std::string sampler = "commuting";
  std::uint64_t seed = 0;
};

struct ConjectureOptions {
  std::size_t m = 3;
  std::size_t n = 3;
  std::size_t count = 100;
  std::string sampler = "commuting";
  std::uint64_t seed = 0;
  std::string out;
  unsigned threads = 0;
};

std::string canonical_family(std::string name) {
  std::replace(name.begin(), name.end(), '_', '-');
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) {
    return static_cast<char>(std::tolower(ch));
  });
  if (name == "circulant2x2") return "circulant-2x2";
  if (name == "circulant-nxn") return "circulant";
  return name;
}

// Accepts [[x, ...], ...] with real entries or [re, im] pairs.
ComplexMatrix parse_matrix_arg(const std::string& text, const char* flag) {
  if (text.empty()) throw InvalidArgument(std::string("missing ") + flag);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception&) {
    throw InvalidArgument(std::string(flag) + " is not a JSON matrix");
  }
  if (!j.is_array() || j.empty() || !j.front().is_array()) {
    throw InvalidArgument(std::string(flag) + " must be an array of rows");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j.front().size();
  std::vector<Complex> data;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) {
      throw InvalidArgument(std::string(flag) + " rows must have equal length");
    }
    for (const auto& z : row) {
      if (z.is_number()) {
        data.emplace_back(z.get<double>(), 0.0);
      } else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number()) {
        data.emplace_back(z[0].get<double>(), z[1].get<double>());
      } else {
        throw InvalidArgument(std::string(flag) + " entries must be numbers or [re, im]");
      }
    }
  }
  return ComplexMatrix(rows, cols, std::move(data));
}

template <typename T>
T need(const std::optional<T>& v, const char* flag) {
  if (!v) throw InvalidArgument(std::string("missing ") + flag);
  return *v;
}

// Builds the requested state and its provenance record.
std::pair<BipartiteState, Json> build_state(const GenOptions& o) {
  const std::string family = canonical_family(o.family);
  Json meta = Json::object();
  meta["family"] = family;
  Json params = Json::object();

  auto spec_state = [&](const FamilySpec& spec) {
    const auto claim = claims(spec);
    meta["claims"] = {{"ppt", claim.claimed_ppt}, {"sppt", claim.claimed_sppt}, {"source", claim.source}};
    return generate(spec);
  };

  std::optional<BipartiteState> state;
  if (family == "werner" || family == "isotropic") {
    const std::size_t n = o.n.value_or(2);
    const double p = o.maximally_mixed ? 0.0 : need(o.p, "--p");
    params["n"] = n;
    params["p"] = p;
    state = family == "werner" ? spec_state(WernerParams{n, p}) : spec_state(IsotropicParams{n, p});
  } else if (family == "orthogonally-invariant") {
    const double a = need(o.a, "--a");
    const double b = need(o.b, "--b");
    const double c = need(o.c, "--c");
    params["a"] = a;
    params["b"] = b;
    params["c"] = c;
    state = spec_state(OrthogonallyInvariantParams{a, b, c});
  } else if (family == "horodecki-2x4") {
    const double b = need(o.b, "--b");
    params["b"] = b;
    state = spec_state(Horodecki2x4Params{b});
  } else if (family == "horodecki-3x3") {
    const double a = need(o.a, "--a");
    params["a"] = a;
    state = spec_state(Horodecki3x3Params{a});
  } else if (family == "circulant-2x2") {
    Circulant2x2Params spec{parse_matrix_arg(o.a_matrix, "--a-matrix"),
                            parse_matrix_arg(o.b_matrix, "--b-matrix")};
    params["a"] = matrix_to_json(spec.a);
    params["b"] = matrix_to_json(spec.b);
    state = spec_state(spec);
  } else if (family == "diagonal-class") {
    DiagonalClassParams spec{need(o.n, "--n"), parse_matrix_arg(o.a_matrix, "--a-matrix"),
                             parse_matrix_arg(o.b_matrix, "--b-matrix")};
    params["n"] = spec.n;
    params["a"] = matrix_to_json(spec.a);
    params["b"] = matrix_to_json(spec.b);
    state = spec_state(spec);
  } else if (family == "circulant") {
    CirculantParams spec;
    spec.n = need(o.n, "--n");
    Json blocks;
    try {
      blocks = Json::parse(o.blocks.empty() ? "null" : o.blocks);
    } catch (const nlohmann::json::exception&) {
      throw InvalidArgument("--blocks is not JSON");
    }
    if (!blocks.is_array()) throw InvalidArgument("--blocks must be an array of matrices");
    for (const auto& blk : blocks) spec.blocks.push_back(parse_matrix_arg(blk.dump(), "--blocks"));
    params["n"] = spec.n;
    params["blocks"] = blocks;
    state = spec_state(spec);
  } else if (family == "maximally-mixed") {
    const std::size_t m = o.m.value_or(o.n.value_or(2));
    const std::size_t n = o.n.value_or(2);
    params["m"] = m;
    params["n"] = n;
    state = maximally_mixed(m, n);
  } else if (family == "maximally-entangled") {
    const std::size_t n = o.n.value_or(2);
    params["n"] = n;
    state = maximally_entangled(n);
  } else if (family == "sppt-sample") {
    const std::size_t m = need(o.m, "--m");
    const std::size_t n = need(o.n, "--n");
    const Sampler sampler = parse_sampler(o.sampler);
    params["m"] = m;
    params["n"] = n;
    params["sampler"] = std::string(to_string(sampler));
    params["seed"] = o.seed;
    state = assemble_state(sample_factor(sampler, m, n, o.seed)).normalized_copy();
  } else {
    throw InvalidArgument("unknown family '" + o.family + "'");
  }
  meta["params"] = std::move(params);
  return {std::move(*state), std::move(meta)};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << x;
  return s.str();
}

int cmd_gen(const GenOptions& o, std::ostream& out) {
  auto [state, meta] = build_state(o);
  const Json j = to_json(make_matrix_file(state, std::move(meta)));
  if (o.out.empty()) {
    out << dump(j);
  } else {
    write_json_file(o.out, j);
    out << "wrote " << state.dim_a() << "x" << state.dim_b() << " state to " << o.out << "\n";
  }
  return kOk;
}

void print_conditions(const SpptVerdict& v, std::ostream& out) {
  for (const auto& c : v.conditions) {
    out << "  condition (" << c.i << "," << c.j << "): residual " << fmt(c.residual) << "\n";
  }
}

int cmd_verdict(const std::string& in, const Tolerance& tol, std::ostream& out) {
  const BipartiteState s = to_state(matrix_file_from_json(read_json_file(in)), tol);
  const PptVerdict ppt = is_ppt(s, tol);
  const StateVerdict sppt = is_sppt_state(s, tol);
  const double realign = realignment_value(s, tol);
  const bool entangled = realign > 1.0 + tol.residual_tol;

  out << "PPT: " << yes_no(ppt.ppt) << ", SPPT: " << yes_no(is_sppt(sppt))
      << ", realignment: " << (entangled ? ">1" : "<=1") << "\n";
  out << "dims: " << s.dim_a() << "x" << s.dim_b() << "\n";
  out << "ppt: " << to_string(ppt.classification)
      << " (min eigenvalue of partial transpose " << fmt(ppt.min_eigenvalue) << ")\n";
  if (const auto* nr = std::get_if<NotRepresentable>(&sppt)) {
    out << "sppt: not representable along canonical factorization at block (" << nr->i << ","
        << nr->j << "), residual " << fmt(nr->residual) << "\n";
  } else {
    const auto& v = std::get<SpptVerdict>(sppt);
    out << "sppt: " << yes_no(v.is_sppt) << " along canonical factorization (max defect "
        << fmt(v.max_defect) << ", threshold " << fmt(v.threshold) << ", conditions "
        << (v.conditions_hold ? "hold" : "fail") << ", sufficient commutation "
        << yes_no(v.sufficient_commutation) << ")\n";
    print_conditions(v, out);
  }
  out << "realignment: " << std::setprecision(12) << realign
      << (entangled ? " (entangled)" : " (inconclusive)") << "\n";
  return kOk;
}

int cmd_conjecture(const ConjectureOptions& o, const Tolerance& tol, std::ostream& out,
                   std::ostream& err) {
  HarnessConfig config;
  config.dim_a = o.m;
  config.dim_b = o.n;
  config.count = o.count;
  config.sampler = parse_sampler(o.sampler);
  if (config.sampler == Sampler::kGeneric) {
    throw InvalidArgument("conjecture harness needs an SPPT sampler");
  }
  config.master_seed = o.seed;
  config.tol = tol;
  config.threads = o.threads;
  const HarnessReport report = run_conjecture(config);
  const Json j = report_to_json(report);
  if (o.out.empty()) {
    out << dump(j);
  } else {
    write_json_file(o.out, j);
  }
  const auto& agg = report.aggregate;
  std::ostream& summary = o.out.empty() ? err : out;
  summary << "samples: " << o.count << ", sampler: " << to_string(config.sampler)
          << ", dims: " << o.m << "x" << o.n << "\n"
          << "max realignment: " << std::setprecision(12) << agg.max_realignment
          << ", min eigenvalue of partial transpose: " << agg.min_eigenvalue
          << ", max SPPT defect: " << agg.max_sppt_defect << "\n"
          << "violations: " << agg.violations << ", SPPT failures: " << agg.sppt_failures << "\n";
  for (std::size_t idx : agg.violation_indices) {
    summary << "  violation at index " << idx << " seed " << report.records[idx].seed << "\n";
  }
  return agg.violations > 0 ? kViolation : kOk;
}

int cmd_channel(const std::string& in, const Tolerance& tol, std::ostream& out) {
  const StateChannel ch(to_state(matrix_file_from_json(read_json_file(in)), tol));
  const EbReport r = eb_report(ch, tol);
  out << "CP: " << yes_no(r.cp) << "\n"
      << "TP defect: " << fmt(r.tp_defect) << "\n"
      << "Choi PPT: " << yes_no(r.choi_ppt) << " (min eigenvalue " << fmt(r.choi_min_eigenvalue)
      << ")\n"
      << "Choi realignment: " << std::setprecision(12) << r.choi_realignment << "\n"
      << "EB: " << to_string(r.status) << "\n";
  if (r.status == EbStatus::kConsistent) {
    out << "note: PPT and realignment are necessary criteria; entanglement breaking is not "
           "certified\n";
  }
  return kOk;
}

int cmd_factorize(const std::string& in, const std::string& out_path, const Tolerance& tol,
                  std::ostream& out, std::ostream& err) {
  const MatrixFile file = matrix_file_from_json(read_json_file(in));
  const BipartiteState s = to_state(file, tol);
  auto result = canonical_factorize(s, tol);
  if (const auto* nr = std::get_if<NotRepresentable>(&result)) {
    err << "NotRepresentable: block (" << nr->i << "," << nr->j << ") residual "
        << fmt(nr->residual) << "\n";
    return kViolation;
  }
  const auto& f = std::get<SpptFactor>(result);
  const double residual = max_abs_diff(assemble_state(f, tol).matrix(), s.matrix());
  Json meta = Json::object();
  meta["source"] = in;
  if (!file.metadata.empty()) meta["source_metadata"] = file.metadata;
  const Json j = factor_to_json(f, residual, std::move(meta));
  if (out_path.empty()) {
    out << dump(j);
  } else {
    write_json_file(out_path, j);
    out << "wrote factor to " << out_path << " (reconstruction residual " << fmt(residual)
        << ")\n";
  }
  return kOk;
}

}  // namespace

Tolerance tolerance_from_env() {
  Tolerance tol;
  if (const char* env = std::getenv("SPPT_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
      throw InvalidArgument("SPPT_TOL must be a positive decimal");
    }
    tol.residual_tol = v;
  }
  return tol;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strong PPT states: generation, verdicts and conjecture harness", "sppt"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a family state as a matrix file");
  gen_cmd->add_option("family", gen.family,
                      "werner | isotropic | circulant-2x2 | orthogonally-invariant | "
                      "horodecki-2x4 | horodecki-3x3 | diagonal-class | circulant | "
                      "maximally-mixed | maximally-entangled | sppt-sample")
      ->required();
  gen_cmd->add_option("-o,--out", gen.out, "output file (stdout if omitted)");
  gen_cmd->add_option("--m", gen.m, "subsystem A dimension");
  gen_cmd->add_option("--n", gen.n, "subsystem B dimension");
  gen_cmd->add_option("--p", gen.p, "werner / isotropic mixing parameter");
  gen_cmd->add_flag("--maximally-mixed", gen.maximally_mixed, "use p = 0");
  gen_cmd->add_option("--a", gen.a, "parameter a");
  gen_cmd->add_option("--b", gen.b, "parameter b");
  gen_cmd->add_option("--c", gen.c, "parameter c");
  gen_cmd->add_option("--a-matrix", gen.a_matrix, "JSON matrix a");
  gen_cmd->add_option("--b-matrix", gen.b_matrix, "JSON matrix b");
  gen_cmd->add_option("--blocks", gen.blocks, "JSON array of circulant blocks");
  gen_cmd->add_option("--sampler", gen.sampler, "sppt-sample sampler");
  gen_cmd->add_option("--seed", gen.seed, "sppt-sample seed");

  std::string verdict_in;
  auto* verdict_cmd = app.add_subcommand("verdict", "PPT, SPPT and realignment verdicts");
  verdict_cmd->add_option("input", verdict_in, "matrix file")->required();

  ConjectureOptions conj;
  auto* conj_cmd = app.add_subcommand("conjecture", "randomized SPPT separability harness");
  conj_cmd->add_option("--m", conj.m, "subsystem A dimension");
  conj_cmd->add_option("--n", conj.n, "subsystem B dimension");
  conj_cmd->add_option("--count", conj.count, "number of samples");
  conj_cmd->add_option("--sampler", conj.sampler, "commuting | hermitian | normal-2xN");
  conj_cmd->add_option("--seed", conj.seed, "master seed");
  conj_cmd->add_option("-o,--out", conj.out, "report file (stdout if omitted)");
  conj_cmd->add_option("--threads", conj.threads, "worker threads (0 = all cores)");

  std::string channel_in;
  auto* channel_cmd = app.add_subcommand("channel", "entanglement-breaking diagnostics");
  channel_cmd->add_option("input", channel_in, "matrix file")->required();

  std::string factor_in;
  std::string factor_out;
  auto* factor_cmd = app.add_subcommand("factorize", "canonical block factorization");
  factor_cmd->add_option("input", factor_in, "matrix file")->required();
  factor_cmd->add_option("-o,--out", factor_out, "factor file (stdout if omitted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Tolerance tol = tolerance_from_env();
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*verdict_cmd) return cmd_verdict(verdict_in, tol, out);
    if (*conj_cmd) return cmd_conjecture(conj, tol, out, err);
    if (*channel_cmd) return cmd_channel(channel_in, tol, out);
    if (*factor_cmd) return cmd_factorize(factor_in, factor_out, tol, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace sppt::cli
