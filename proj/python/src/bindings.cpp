// Copyright 2026 The noetherlab Authors
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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/stl.h>

#include "noetherlab/io.hpp"
#include "noetherlab/mcoracle.hpp"
#include "noetherlab/verify.hpp"

namespace py = pybind11;
using namespace noetherlab;

PYBIND11_MODULE(_core, m) {
    m.doc() = "noetherlab core: covariant channels, unitarity and conservation-law deviation";

    py::register_exception<ChannelError>(m, "ChannelError", PyExc_ValueError);

    py::class_<QuantumChannel>(m, "QuantumChannel")
        .def_static("from_kraus", [](std::vector<CMat> ks) { return QuantumChannel::from_kraus(std::move(ks)); })
        .def_static("from_liouville",
                    [](const CMat& L, int d_in, int d_out) { return QuantumChannel::from_liouville(L, d_in, d_out); })
        .def_static("from_jamiolkowski", [](const CMat& J, int d_in,
                                            int d_out) { return QuantumChannel::from_jamiolkowski(J, d_in, d_out); })
        .def_static("from_stinespring", [](const CMat& V, int d_in,
                                           int d_out) { return QuantumChannel::from_stinespring(V, d_in, d_out); })
        .def_property_readonly("d_in", &QuantumChannel::d_in)
        .def_property_readonly("d_out", &QuantumChannel::d_out)
        .def_property_readonly("representation", [](const QuantumChannel& E) { return repr_name(E.representation()); })
        .def("kraus", &QuantumChannel::kraus)
        .def("jamiolkowski", &QuantumChannel::jamiolkowski)
        .def("liouville", &QuantumChannel::liouville)
        .def("stinespring", &QuantumChannel::stinespring)
        .def("apply", &QuantumChannel::apply, py::arg("rho"))
        .def("apply_adjoint", &QuantumChannel::apply_adjoint, py::arg("Y"))
        .def("to_json", [](const QuantumChannel& E, const std::string& repr) {
            return channel_to_json(E, parse_repr(repr)).dump();
        }, py::arg("repr") = "kraus")
        .def_static("from_json", [](const std::string& s) { return channel_from_json(json::parse(s)); });

    m.def("complementary", &complementary);
    m.def("compose", &compose);
    m.def("identity_channel", &identity_channel);
    m.def("depolarizing_channel", &depolarizing_channel, py::arg("d"), py::arg("p") = 1.0);
    m.def("random_channel", [](int d_in, int d_out, int rank, std::uint64_t seed) {
        Rng rng(seed);
        return random_channel(d_in, d_out, rank, rng);
    }, py::arg("d_in"), py::arg("d_out"), py::arg("kraus_rank"), py::arg("seed"));

    m.def("vectorize", &vectorize);
    m.def("reshuffle", &reshuffle);
    m.def("partial_trace", [](const CMat& M, int dB, int dA, const std::string& keep) {
        return partial_trace(M, dB, dA, keep == "A" ? Keep::A : Keep::B);
    }, py::arg("M"), py::arg("dB"), py::arg("dA"), py::arg("keep"));
    m.def("purity", &purity);
    m.def("fidelity", &fidelity);

    m.def("clebsch_gordan", &cg, "<j1 m1; j2 m2 | J M> with every argument twice its value",
          py::arg("two_j1"), py::arg("two_m1"), py::arg("two_j2"), py::arg("two_m2"), py::arg("two_J"),
          py::arg("two_M"));
    m.def("spin_operators", [](int two_j) {
        SpinOps s = spin_operators(SpinJ(two_j));
        return py::make_tuple(s.x, s.y, s.z);
    });

    m.def("extremal_channel", [](int a, int b, int tL) { return extremal_channel(SpinJ(a), SpinJ(b), tL); },
          py::arg("two_jA"), py::arg("two_jB"), py::arg("two_L"));
    m.def("mixture_channel", [](int a, int b, std::vector<double> p) {
        return mixture_channel(CovariantMixture(SpinJ(a), SpinJ(b), std::move(p)));
    }, py::arg("two_jA"), py::arg("two_jB"), py::arg("p"));
    m.def("decompose", [](const QuantumChannel& E, int a, int b) { return decompose(E, SpinJ(a), SpinJ(b)).p; });
    m.def("twirl", [](const QuantumChannel& E, int a, int b) { return twirl(E, SpinJ(a), SpinJ(b)); });
    m.def("scaling_vector", [](int a, int b, std::vector<double> p) {
        return scaling_vector(CovariantMixture(SpinJ(a), SpinJ(b), std::move(p))).f;
    });
    m.def("f1_explicit", [](int a, int b, int tL) { return f1_explicit(SpinJ(a), SpinJ(b), tL); });
    m.def("kappa_extrema", [](int a, int b) {
        KappaReport k = kappa_extrema(SpinJ(a), SpinJ(b));
        py::dict d;
        d["kappa_minus"] = k.kappa_minus;
        d["kappa_plus"] = k.kappa_plus;
        d["two_L_minus"] = k.two_L_minus;
        d["two_L_plus"] = k.two_L_plus;
        d["kappa_minus_exact"] = k.kappa_minus_exact;
        d["kappa_plus_exact"] = k.kappa_plus_exact;
        return d;
    });
    m.def("time_reversal_fidelity", [](int tj) { return time_reversal_fidelity(SpinJ(tj)); });
    m.def("time_reversal_fidelity_direct", [](int tj) { return time_reversal_fidelity_direct(SpinJ(tj)); });

    m.def("unitarity", &unitarity_jamiolkowski);
    m.def("unitarity_complementary", &unitarity_complementary);
    m.def("unitarity_su2_closed", [](int tj, std::vector<double> p) {
        return unitarity_su2_closed(CovariantMixture(SpinJ(tj), SpinJ(tj), std::move(p)));
    });
    m.def("deviation_su2_closed", [](int tj, std::vector<double> p) {
        return deviation_su2_closed(CovariantMixture(SpinJ(tj), SpinJ(tj), std::move(p)));
    });
    m.def("deviation_spin", [](const QuantumChannel& E, int a, int b) {
        return deviation_avg(E, spin_generators(SpinJ(a), SpinJ(b))).delta;
    }, py::arg("E"), py::arg("two_jA"), py::arg("two_jB"));
    m.def("deviation_energy", [](const QuantumChannel& E, std::vector<int> levels) {
        return deviation_avg(E, energy_generators(EnergySpectrum(std::move(levels)))).delta;
    });

    m.def("u1_extremal", [](std::vector<int> levels, const RMat& gamma) {
        return build_extremal(EnergySpectrum(std::move(levels)), gamma).channel();
    });
    m.def("u1_dephasing", [](std::vector<int> levels, double p) {
        return build_dephasing(EnergySpectrum(std::move(levels)), p).channel();
    });
    m.def("optimal_unitarity_for_population", [](std::vector<int> levels, const RMat& P) {
        return optimal_unitarity_for_population(EnergySpectrum(std::move(levels)), P);
    });

    m.def("su2_bounds", [](int tj, std::vector<double> p) {
        Su2Bounds b = su2_bounds(CovariantMixture(SpinJ(tj), SpinJ(tj), std::move(p)));
        return py::make_tuple(py::make_tuple(b.lower.lhs, b.lower.rhs, b.lower.satisfied),
                              py::make_tuple(b.upper.lhs, b.upper.rhs, b.upper.satisfied));
    });

    m.def("mc_unitarity", [](const QuantumChannel& E, std::uint64_t n, std::uint64_t seed) {
        McEstimate e = mc_unitarity(E, n, seed);
        return py::make_tuple(e.mean, e.std_error);
    }, py::arg("E"), py::arg("samples"), py::arg("seed"));

    m.def("su2_tradeoff_json", [](int tj, double step) {
        return records_to_json(su2_tradeoff(SpinJ(tj), step), {{"command", "su2 tradeoff"}, {"two_j", tj}, {"grid", step}})
            .dump();
    });
    m.def("u1_tradeoff_json", [](std::vector<int> levels, double step) {
        auto recs = u1_tradeoff(EnergySpectrum(levels), step);
        return records_to_json(recs, {{"command", "u1 tradeoff"}, {"levels", levels}, {"grid", step}}).dump();
    });
    m.def("verify_all", [](std::uint64_t seed, std::uint64_t samples) {
        VerifyOptions o;
        o.seed = seed;
        o.samples = samples;
        return verify_report(o, verify_all(o)).dump();
    }, py::arg("seed") = 42, py::arg("samples") = 20000);
}
