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

// Python bindings. Matrices cross the boundary as complex128 numpy arrays.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sppt/bipartite.hpp"
#include "sppt/channel.hpp"
#include "sppt/cli.hpp"
#include "sppt/factor.hpp"
#include "sppt/families.hpp"
#include "sppt/harness.hpp"
#include "sppt/io.hpp"
#include "sppt/linalg.hpp"
#include "sppt/sampling.hpp"

namespace py = pybind11;
using namespace sppt;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& a) {
  if (a.ndim() != 2) throw DimensionMismatch("expected a 2-D array");
  const auto rows = static_cast<std::size_t>(a.shape(0));
  const auto cols = static_cast<std::size_t>(a.shape(1));
  std::vector<Complex> data(a.data(), a.data() + rows * cols);
  return ComplexMatrix(rows, cols, std::move(data));
}

CArray to_array(const ComplexMatrix& m) {
  CArray out({m.rows(), m.cols()});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

Tolerance make_tol(double eq_tol, double psd_tol, double residual_tol) {
  Tolerance t{eq_tol, psd_tol, residual_tol};
  t.validate();
  return t;
}

std::map<BlockPair, ComplexMatrix> to_s_blocks(const std::map<BlockPair, CArray>& in) {
  std::map<BlockPair, ComplexMatrix> out;
  for (const auto& [key, a] : in) out.emplace(key, to_matrix(a));
  return out;
}

py::object factorize_result(FactorizeResult r) {
  if (auto* nr = std::get_if<NotRepresentable>(&r)) return py::cast(*nr);
  return py::cast(std::get<SpptFactor>(std::move(r)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "SPPT bipartite state toolkit";

  auto base = py::register_exception<Error>(m, "SpptError", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base);
  py::register_exception<IndexOutOfRange>(m, "IndexOutOfRange", base);
  py::register_exception<NotHermitian>(m, "NotHermitian", base);
  py::register_exception<NotPsd>(m, "NotPsd", base);
  py::register_exception<ZeroTrace>(m, "ZeroTrace", base);
  py::register_exception<NoConvergence>(m, "NoConvergence", base);
  py::register_exception<ParamOutOfRange>(m, "ParamOutOfRange", base);
  py::register_exception<ParseError>(m, "ParseError", base);

  py::class_<Tolerance>(m, "Tolerance")
      .def(py::init(&make_tol), py::arg("eq_tol") = 1e-10, py::arg("psd_tol") = 1e-10,
           py::arg("residual_tol") = 1e-8)
      .def_readonly("eq_tol", &Tolerance::eq_tol)
      .def_readonly("psd_tol", &Tolerance::psd_tol)
      .def_readonly("residual_tol", &Tolerance::residual_tol);

  // Linear algebra kernels.
  m.def("hermitian_eigenvalues",
        [](const CArray& a, const Tolerance& tol) { return hermitian_eigenvalues(to_matrix(a), tol); },
        py::arg("a"), py::arg("tol") = Tolerance{});
  m.def("cholesky_psd",
        [](const CArray& a, const Tolerance& tol) { return to_array(cholesky_psd(to_matrix(a), tol)); },
        py::arg("a"), py::arg("tol") = Tolerance{});
  m.def(
      "solve_right",
      [](const CArray& b, const CArray& a, const Tolerance& tol) {
        const auto r = solve_right(to_matrix(b), to_matrix(a), tol);
        return py::make_tuple(to_array(r.solution), r.exact, r.residual);
      },
      py::arg("b"), py::arg("a"), py::arg("tol") = Tolerance{},
      "Minimum-norm S with S a = b; returns (S, exact, residual).");
  m.def("trace_norm", [](const CArray& a) { return trace_norm(to_matrix(a)); });
  m.def("singular_values", [](const CArray& a) { return singular_values(to_matrix(a)); });

  // States.
  py::class_<BipartiteState>(m, "BipartiteState")
      .def_static(
          "from_matrix",
          [](const CArray& a, std::size_t dim_a, std::size_t dim_b, bool require_normalized,
             const Tolerance& tol) {
            return BipartiteState::from_matrix(to_matrix(a), dim_a, dim_b, require_normalized, tol);
          },
          py::arg("a"), py::arg("dim_a"), py::arg("dim_b"), py::arg("require_normalized") = true,
          py::arg("tol") = Tolerance{})
      .def_property_readonly("dim_a", &BipartiteState::dim_a)
      .def_property_readonly("dim_b", &BipartiteState::dim_b)
      .def_property_readonly("normalized", &BipartiteState::normalized)
      .def_property_readonly("matrix", [](const BipartiteState& s) { return to_array(s.matrix()); })
      .def("block", [](const BipartiteState& s, std::size_t i, std::size_t j) {
        return to_array(s.block(i, j));
      })
      .def("normalized_copy", &BipartiteState::normalized_copy)
      .def("__repr__", [](const BipartiteState& s) {
        std::ostringstream os;
        os << "BipartiteState(" << s.dim_a() << "x" << s.dim_b()
           << (s.normalized() ? ", normalized)" : ")");
        return os.str();
      });

  m.def("partial_transpose_a",
        [](const BipartiteState& s) { return to_array(partial_transpose_a(s)); });
  m.def("realign", [](const BipartiteState& s) { return to_array(realign(s)); });
  m.def("unrealign", [](const CArray& r, std::size_t dim_a, std::size_t dim_b) {
    return to_array(unrealign(to_matrix(r), dim_a, dim_b));
  });
  m.def("realignment_value", &realignment_value, py::arg("state"), py::arg("tol") = Tolerance{});

  py::class_<PptVerdict>(m, "PptVerdict")
      .def_readonly("ppt", &PptVerdict::ppt)
      .def_readonly("min_eigenvalue", &PptVerdict::min_eigenvalue)
      .def_property_readonly("classification", [](const PptVerdict& v) {
        return std::string(to_string(v.classification));
      });
  m.def("is_ppt", &is_ppt, py::arg("state"), py::arg("tol") = Tolerance{});

  // Factors.
  py::class_<SpptFactor>(m, "SpptFactor")
      .def(py::init([](const std::vector<CArray>& xs, const std::map<BlockPair, CArray>& ss) {
             std::vector<ComplexMatrix> x_blocks;
             for (const auto& x : xs) x_blocks.push_back(to_matrix(x));
             return SpptFactor(std::move(x_blocks), to_s_blocks(ss));
           }),
           py::arg("x_blocks"), py::arg("s_blocks"))
      .def_property_readonly("dim_a", &SpptFactor::dim_a)
      .def_property_readonly("dim_b", &SpptFactor::dim_b)
      .def("x", [](const SpptFactor& f, std::size_t i) { return to_array(f.x(i)); })
      .def("s", [](const SpptFactor& f, std::size_t i, std::size_t j) { return to_array(f.s(i, j)); });

  py::class_<ConditionResidual>(m, "ConditionResidual")
      .def_readonly("i", &ConditionResidual::i)
      .def_readonly("j", &ConditionResidual::j)
      .def_readonly("residual", &ConditionResidual::residual);
  py::class_<SpptVerdict>(m, "SpptVerdict")
      .def_readonly("is_sppt", &SpptVerdict::is_sppt)
      .def_readonly("max_defect", &SpptVerdict::max_defect)
      .def_readonly("threshold", &SpptVerdict::threshold)
      .def_readonly("conditions", &SpptVerdict::conditions)
      .def_readonly("conditions_hold", &SpptVerdict::conditions_hold)
      .def_readonly("sufficient_commutation", &SpptVerdict::sufficient_commutation);
  py::class_<NotRepresentable>(m, "NotRepresentable")
      .def_readonly("i", &NotRepresentable::i)
      .def_readonly("j", &NotRepresentable::j)
      .def_readonly("residual", &NotRepresentable::residual)
      .def("__repr__", [](const NotRepresentable& nr) {
        std::ostringstream os;
        os << "NotRepresentable(block (" << nr.i << "," << nr.j << "), residual " << nr.residual
           << ")";
        return os.str();
      });

  m.def("assemble_x", [](const SpptFactor& f) { return to_array(assemble_x(f)); });
  m.def("assemble_state", &assemble_state, py::arg("factor"), py::arg("tol") = Tolerance{});
  m.def("canonical_partner", [](const SpptFactor& f) { return to_array(canonical_partner(f)); });
  m.def("sppt_verdict", &sppt_verdict, py::arg("factor"), py::arg("tol") = Tolerance{});
  m.def("commutation_defect", &commutation_defect);
  m.def(
      "canonical_factorize",
      [](const BipartiteState& s, const Tolerance& tol) {
        return factorize_result(canonical_factorize(s, tol));
      },
      py::arg("state"), py::arg("tol") = Tolerance{},
      "SpptFactor, or NotRepresentable when an off-diagonal block is not of the form S X_i.");
  m.def(
      "is_sppt_state",
      [](const BipartiteState& s, const Tolerance& tol) -> py::object {
        auto v = is_sppt_state(s, tol);
        if (auto* nr = std::get_if<NotRepresentable>(&v)) return py::cast(*nr);
        return py::cast(std::get<SpptVerdict>(v));
      },
      py::arg("state"), py::arg("tol") = Tolerance{});

  // Sampling.
  m.def(
      "sample_factor",
      [](const std::string& sampler, std::size_t dim_a, std::size_t dim_b, std::uint64_t seed) {
        return sample_factor(parse_sampler(sampler), dim_a, dim_b, seed);
      },
      py::arg("sampler"), py::arg("dim_a"), py::arg("dim_b"), py::arg("seed"));
  m.def("random_gram_state", &random_gram_state, py::arg("dim_a"), py::arg("dim_b"),
        py::arg("seed"));
  m.def("random_separable_state", &random_separable_state, py::arg("dim_a"), py::arg("dim_b"),
        py::arg("terms"), py::arg("seed"));
  m.def("derive_seed", &derive_seed);

  // Families.
  m.def("werner", &werner, py::arg("n"), py::arg("p"));
  m.def("isotropic", &isotropic, py::arg("n"), py::arg("p"));
  m.def("circulant_2x2", [](const CArray& a, const CArray& b) {
    return circulant_2x2(to_matrix(a), to_matrix(b));
  });
  m.def("orthogonally_invariant", &orthogonally_invariant, py::arg("a"), py::arg("b"),
        py::arg("c"));
  m.def("horodecki_2x4", &horodecki_2x4, py::arg("b"));
  m.def("horodecki_3x3", &horodecki_3x3, py::arg("a"));
  m.def("diagonal_class", [](std::size_t n, const CArray& a, const CArray& b) {
    return diagonal_class(n, to_matrix(a), to_matrix(b));
  });
  m.def("circulant", [](std::size_t n, const std::vector<CArray>& blocks) {
    std::vector<ComplexMatrix> bs;
    for (const auto& b : blocks) bs.push_back(to_matrix(b));
    return circulant(n, bs);
  });
  m.def("maximally_mixed", &maximally_mixed);
  m.def("maximally_entangled", &maximally_entangled);

  // Channels.
  py::class_<EbReport>(m, "EbReport")
      .def_readonly("cp", &EbReport::cp)
      .def_readonly("tp_defect", &EbReport::tp_defect)
      .def_readonly("choi_ppt", &EbReport::choi_ppt)
      .def_readonly("choi_min_eigenvalue", &EbReport::choi_min_eigenvalue)
      .def_readonly("choi_realignment", &EbReport::choi_realignment)
      .def_readonly("eb_certified_false", &EbReport::eb_certified_false)
      .def_property_readonly("status",
                             [](const EbReport& r) { return std::string(to_string(r.status)); });
  py::class_<StateChannel>(m, "StateChannel")
      .def(py::init<BipartiteState>())
      .def("apply", [](const StateChannel& c, const CArray& a) { return to_array(c.apply(to_matrix(a))); })
      .def("choi", &StateChannel::choi)
      .def("tp_defect", &StateChannel::tp_defect)
      .def("eb_report", [](const StateChannel& c, const Tolerance& tol) { return eb_report(c, tol); },
           py::arg("tol") = Tolerance{});

  // Harness and CLI.
  m.def(
      "conjecture_report_json",
      [](std::size_t dim_a, std::size_t dim_b, std::size_t count, const std::string& sampler,
         std::uint64_t seed, unsigned threads) {
        HarnessConfig c;
        c.dim_a = dim_a;
        c.dim_b = dim_b;
        c.count = count;
        c.sampler = parse_sampler(sampler);
        c.master_seed = seed;
        c.threads = threads;
        HarnessReport r;
        {
          py::gil_scoped_release release;
          r = run_conjecture(c);
        }
        return dump(report_to_json(r));
      },
      py::arg("dim_a") = 3, py::arg("dim_b") = 3, py::arg("count") = 100,
      py::arg("sampler") = "commuting", py::arg("seed") = 0, py::arg("threads") = 0);
  m.def(
      "cli_run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the sppt command line; returns (exit_code, stdout, stderr).");
}
