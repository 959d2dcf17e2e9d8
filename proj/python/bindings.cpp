// Copyright 2026 The qdeg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qdeg/capacity.hpp"
#include "qdeg/degradability.hpp"
#include "qdeg/errors.hpp"
#include "qdeg/io.hpp"
#include "qdeg/zoo.hpp"

namespace py = pybind11;
using namespace qdeg;

namespace {

py::dict capacity_dict(const CapacityResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["input_state"] = r.input_state.matrix();
  d["method"] = std::string(to_string(r.method));
  d["status"] = std::string(to_string(r.status));
  return d;
}

}  // namespace

PYBIND11_MODULE(_qdeg, m) {
  m.doc() = "Degradability decisions and capacities for low-dimensional quantum channels.";

  py::register_exception<Error>(m, "QdegError", PyExc_ValueError);

  py::class_<Tolerance>(m, "Tolerance")
      .def(py::init<>())
      .def(py::init([](double rank, double psd, double residual) {
             Tolerance t{rank, psd, residual};
             t.validate();
             return t;
           }),
           py::arg("rank_tol"), py::arg("psd_tol"), py::arg("residual_tol"))
      .def_static("from_profile", &Tolerance::from_profile)
      .def_readwrite("rank_tol", &Tolerance::rank_tol)
      .def_readwrite("psd_tol", &Tolerance::psd_tol)
      .def_readwrite("residual_tol", &Tolerance::residual_tol);

  py::class_<Channel>(m, "Channel")
      .def(py::init([](std::vector<ComplexMatrix> kraus, std::string label) {
             return Channel(KrausSet(std::move(kraus)), std::move(label));
           }),
           py::arg("kraus"), py::arg("label") = "")
      .def_static(
          "from_choi",
          [](int d_in, int d_out, ComplexMatrix r, const Tolerance& tol) {
            return Channel::from_choi(ChoiMatrix(d_in, d_out, std::move(r)), tol);
          },
          py::arg("d_in"), py::arg("d_out"), py::arg("choi"), py::arg("tol") = Tolerance{})
      .def_property_readonly("d_in", &Channel::d_in)
      .def_property_readonly("d_out", &Channel::d_out)
      .def_property_readonly("label", &Channel::label)
      .def_property_readonly("kraus",
                             [](const Channel& c) { return c.kraus().operators(); })
      .def_property_readonly("choi", [](const Channel& c) { return c.choi().matrix(); })
      .def_property_readonly("superop", [](const Channel& c) { return c.superop().matrix(); })
      .def("__call__", [](const Channel& c, const ComplexMatrix& rho) { return c(rho); })
      .def("__repr__", [](const Channel& c) {
        return "<Channel '" + c.label() + "' " + std::to_string(c.d_in()) + "->" +
               std::to_string(c.d_out()) + ">";
      });

  m.def("parse_channel", &parse_channel_spec, py::arg("spec"), py::arg("tol") = Tolerance{});
  m.def("td_channel", [](int d, double t) { return td_channel(TDParams(d, t)); },
        py::arg("d"), py::arg("t"));
  m.def("depolarizing", [](int d, double s) { return depolarizing(DepolParams(d, s)); },
        py::arg("d"), py::arg("s"));
  m.def("td_complement_qubit", &td_complement_qubit, py::arg("t"),
        py::arg("tol") = Tolerance{});
  m.def("complement", py::overload_cast<const Channel&, const Tolerance&>(&complement),
        py::arg("channel"), py::arg("tol") = Tolerance{});
  m.def("is_ppt", [](const Channel& c, const Tolerance& tol) { return is_ppt(c.choi(), tol); },
        py::arg("channel"), py::arg("tol") = Tolerance{});

  py::class_<Verdict>(m, "Verdict")
      .def_property_readonly("status", [](const Verdict& v) { return std::string(to_string(v.status)); })
      .def_property_readonly("mode", [](const Verdict& v) { return std::string(to_string(v.mode)); })
      .def_property_readonly("candidate", [](const Verdict& v) { return v.candidate.matrix(); })
      .def_readonly("candidate_choi_eigs", &Verdict::candidate_choi_eigs)
      .def_readonly("unique", &Verdict::unique)
      .def_readonly("kernel_dim", &Verdict::kernel_dim)
      .def_readonly("residual", &Verdict::residual)
      .def_readonly("consistent", &Verdict::consistent)
      .def_readonly("reason", &Verdict::reason)
      .def_property_readonly("certificate",
                             [](const Verdict& v) -> std::optional<ComplexMatrix> {
                               if (!v.certificate) return std::nullopt;
                               return v.certificate->matrix();
                             })
      .def("to_json", [](const Verdict& v) { return verdict_to_json(v).dump(); });

  m.def(
      "decide",
      [](const Channel& c, const std::string& mode, bool search, std::optional<std::uint64_t> seed,
         int restarts, int max_iters, std::optional<Channel> env, const Tolerance& tol) {
        if (search && !seed) throw ParseError("search requires an explicit seed");
        SearchConfig cfg;
        cfg.enabled = search;
        cfg.seed = seed.value_or(0);
        cfg.restarts = restarts;
        cfg.max_iters = max_iters;
        cfg.tol = tol;
        return decide(Query{c, parse_mode(mode), std::move(env)}, cfg);
      },
      py::arg("channel"), py::arg("mode") = "degradable", py::arg("search") = false,
      py::arg("seed") = py::none(), py::arg("restarts") = 32, py::arg("max_iters") = 2000,
      py::arg("complement") = py::none(), py::arg("tol") = Tolerance{});

  m.def(
      "ecd_screen",
      [](const Channel& c, const Tolerance& tol) {
        const ScreenReport r = ecd_screen(c, tol);
        py::dict d;
        d["hopeless"] = r.hopeless;
        d["reasons"] = r.reasons;
        d["complement_ppt"] = r.complement_ppt;
        d["complement_choi_rank"] = r.complement_choi_rank;
        d["d_a"] = r.d_a;
        d["d_b"] = r.d_b;
        d["d_e"] = r.d_e;
        return d;
      },
      py::arg("channel"), py::arg("tol") = Tolerance{});

  m.def(
      "von_neumann_entropy",
      [](const ComplexMatrix& rho, double base) {
        return von_neumann_entropy(DensityMatrix::from_matrix(rho), base);
      },
      py::arg("rho"), py::arg("base") = 2.0);
  m.def(
      "coherent_information",
      [](const Channel& c, const ComplexMatrix& rho, double base) {
        return coherent_information(c, DensityMatrix::from_matrix(rho), base);
      },
      py::arg("channel"), py::arg("rho"), py::arg("base") = 2.0);
  m.def("td_complement_capacity",
        [](int d, double t) { return capacity_dict(td_complement_capacity(d, t)); },
        py::arg("d"), py::arg("t"));
  m.def("covariant_capacity",
        [](const Channel& c, double base) { return capacity_dict(covariant_capacity(c, base)); },
        py::arg("channel"), py::arg("base") = 2.0);
  m.def(
      "one_shot_optimize",
      [](const Channel& c, std::uint64_t seed, int restarts, int max_iters, double base) {
        return capacity_dict(one_shot_optimize(c, OptimizerConfig{restarts, max_iters, seed}, base));
      },
      py::arg("channel"), py::arg("seed"), py::arg("restarts") = 16, py::arg("max_iters") = 400,
      py::arg("base") = 2.0);
}
