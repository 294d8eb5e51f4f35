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

#include "noetherlab/verify.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "noetherlab/mcoracle.hpp"

namespace noetherlab {

namespace {

CMat action_liouville(const QuantumChannel& E, const CMat& X) {
    return unvectorize(E.liouville() * vectorize(X), E.d_out(), E.d_out());
}

CMat action_jamiolkowski(const QuantumChannel& E, const CMat& X) {
    const int dB = E.d_out(), dA = E.d_in();
    CMat M = E.jamiolkowski() * kron(CMat::Identity(dB, dB), X.transpose());
    return double(dA) * partial_trace(M, dB, dA, Keep::B);
}

CMat action_stinespring(const QuantumChannel& E, const CMat& X) {
    const CMat& V = E.stinespring();
    return partial_trace(V * X * V.adjoint(), E.d_out(), E.d_env(), Keep::B);
}

double max_rep_disagreement(const QuantumChannel& E) {
    double worst = 0;
    const int d = E.d_in();
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            CMat X = CMat::Zero(d, d);
            X(i, k) = 1.0;
            CMat ref = E.apply(X);
            worst = std::max(worst, (action_liouville(E, X) - ref).cwiseAbs().maxCoeff());
            worst = std::max(worst, (action_jamiolkowski(E, X) - ref).cwiseAbs().maxCoeff());
            worst = std::max(worst, (action_stinespring(E, X) - ref).cwiseAbs().maxCoeff());
        }
    return worst;
}

std::string num(double x) { return format_double(x); }

CheckResult run(const std::string& name, const std::function<CheckResult()>& body) {
    try {
        CheckResult r = body();
        r.name = name;
        return r;
    } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
}

CheckResult pass_if(bool ok, std::string detail) { return {"", ok, std::move(detail)}; }

}  // namespace

std::vector<CheckResult> verify_all(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    const std::uint64_t seed = opt.seed;
    const std::uint64_t samples = opt.samples;
    constexpr double kSigma = 4.0;

    out.push_back(run("representation_roundtrip", [&] {
        Rng rng(derive_seed(seed, 1));
        double worst = 0;
        for (int t = 0; t < 30; ++t) {
            const int dA = 1 + int(rng() % 4), dB = 1 + int(rng() % 4);
            const int r = std::max(1, (dA + dB - 1) / dB) + int(rng() % 3);
            QuantumChannel E = random_channel(dA, dB, r, rng);
            worst = std::max(worst, max_rep_disagreement(E));
            QuantumChannel F = to_liouville(E);
            worst = std::max(worst, max_rep_disagreement(F));
        }
        return pass_if(worst < 1e-9, "max disagreement " + num(worst));
    }));

    out.push_back(run("cp_tp_detection", [&] {
        Rng rng(derive_seed(seed, 2));
        QuantumChannel E = random_channel(2, 2, 2, rng);
        Eigen::SelfAdjointEigenSolver<CMat> es(E.jamiolkowski());
        CMat J = E.jamiolkowski() - (es.eigenvalues()(0) + 1e-6) * es.eigenvectors().col(0) *
                                        es.eigenvectors().col(0).adjoint();
        bool cp_caught = false, tp_caught = false;
        try {
            QuantumChannel::from_jamiolkowski(J, 2, 2);
        } catch (const ChannelError&) {
            cp_caught = true;
        }
        try {
            QuantumChannel::from_jamiolkowski(1.01 * E.jamiolkowski(), 2, 2);
        } catch (const ChannelError&) {
            tp_caught = true;
        }
        return pass_if(cp_caught && tp_caught, std::string("cp ") + (cp_caught ? "caught" : "missed") + ", tp " +
                                                   (tp_caught ? "caught" : "missed"));
    }));

    out.push_back(run("unitarity_dual_route", [&] {
        Rng rng(derive_seed(seed, 3));
        double worst = 0;
        for (int t = 0; t < 30; ++t) {
            const int dA = 2 + int(rng() % 3), dB = 1 + int(rng() % 4);
            const int r = std::max(1, (dA + dB - 1) / dB) + int(rng() % 3);
            QuantumChannel E = random_channel(dA, dB, r, rng);
            worst = std::max(worst, std::abs(unitarity_jamiolkowski(E) - unitarity_complementary(E)));
        }
        return pass_if(worst < 1e-10, "max |u_J - u_C| " + num(worst));
    }));

    out.push_back(run("unitarity_monte_carlo", [&] {
        Rng rng(derive_seed(seed, 4));
        double worst = 0;
        for (int t = 0; t < 5; ++t) {
            const int dA = 2 + int(rng() % 3), dB = 2 + int(rng() % 3);
            QuantumChannel E = random_channel(dA, dB, 1 + int(rng() % 3), rng);
            McEstimate mc = mc_unitarity(E, samples, derive_seed(seed, 100 + t));
            const double z = z_score(mc, unitarity_jamiolkowski(E));
            worst = std::max(worst, z);
        }
        return pass_if(worst < kSigma, "max z " + num(worst));
    }));

    out.push_back(run("deviation_monte_carlo", [&] {
        const SpinJ h(1);
        QuantumChannel E = extremal_channel(h, h, 2);
        McEstimate mc = mc_deviation(E, spin_generators(h, h), samples, derive_seed(seed, 5));
        const double z = z_score(mc, 4.0 / 9.0);
        return pass_if(z < kSigma, "estimate " + num(mc.mean) + " z " + num(z));
    }));

    out.push_back(run("universal_not_factor", [&] {
        const SpinJ h(1);
        QuantumChannel E = extremal_channel(h, h, 2);
        SpinOps s = spin_operators(h);
        double worst = 0;
        for (int k = 0; k < 3; ++k) worst = std::max(worst, (E.apply_adjoint(s[k]) + s[k] / 3.0).cwiseAbs().maxCoeff());
        return pass_if(worst < 1e-12, "residual " + num(worst));
    }));

    out.push_back(run("f1_closed_form", [&] {
        double worst = 0;
        for (int a = 1; a <= 8; ++a)
            for (int b = 1; b <= 8; ++b)
                for (int tL = std::abs(a - b); tL <= a + b; tL += 2)
                    worst = std::max(worst, std::abs(f_extremal(SpinJ(a), SpinJ(b), tL, 1) -
                                                     f1_explicit(SpinJ(a), SpinJ(b), tL)));
        return pass_if(worst < 1e-12, "max residual " + num(worst));
    }));

    out.push_back(run("kappa_plus_branches", [&] {
        int bad = 0;
        for (int a = 1; a <= 8; ++a)
            for (int b = 0; b <= 8; ++b) {
                KappaReport k = kappa_extrema(SpinJ(a), SpinJ(b));
                const double expect = a >= b ? double(b) / a : (b + 2.0) / (a + 2.0);
                if (std::abs(k.kappa_plus - expect) > 1e-12 || k.two_L_plus != std::abs(a - b)) ++bad;
            }
        return pass_if(bad == 0, std::to_string(bad) + " mismatches");
    }));

    out.push_back(run("time_reversal_fidelity", [&] {
        double worst = 0;
        for (int t = 1; t <= 8; ++t)
            worst = std::max(worst, std::abs(time_reversal_fidelity_direct(SpinJ(t)) - time_reversal_fidelity(SpinJ(t))));
        return pass_if(worst < 1e-10, "max residual " + num(worst));
    }));

    out.push_back(run("qubit_identity", [&] {
        double worst = 0;
        for (int i = 0; i <= 1000; ++i) {
            const double p0 = i / 1000.0;
            CovariantMixture m(SpinJ(1), SpinJ(1), {p0, 1 - p0});
            const double sd = std::sqrt(deviation_su2_closed(m));
            worst = std::max(worst, std::abs(unitarity_su2_closed(m) - (1 - 4 * sd * (1 - sd))));
        }
        return pass_if(worst < 1e-10, "max residual " + num(worst));
    }));

    out.push_back(run("su2_envelope_grid", [&] {
        std::size_t n = 0, bad = 0;
        for (int t = 1; t <= 4; ++t) {
            auto recs = su2_tradeoff(SpinJ(t), 0.05);
            n += recs.size();
            for (const auto& r : recs) bad += !r.ok;
        }
        return pass_if(bad == 0, std::to_string(bad) + " violations in " + std::to_string(n) + " records");
    }));

    out.push_back(run("general_bounds_random", [&] {
        Rng rng(derive_seed(seed, 6));
        int bad = 0, total = 0;
        for (int t = 1; t <= 3; ++t) {
            const SpinJ j(t);
            const GeneratorSet gens = spin_generators(j, j);
            const auto ftab = su2_f_table(j);
            for (int s = 0; s < 40; ++s) {
                CovariantMixture m(j, j, random_simplex(t + 1, rng));
                QuantumChannel E = mixture_channel(m);
                bad += !upper_bound_general(E, gens).satisfied;
                bad += !lower_bound_multiplicity_free(E, gens, ftab).satisfied;
                total += 2;
            }
        }
        return pass_if(bad == 0, std::to_string(bad) + " violations in " + std::to_string(total) + " checks");
    }));

    out.push_back(run("u1_envelope_grid", [&] {
        std::size_t n = 0, bad = 0;
        for (auto [levels, step] : {std::pair<std::vector<int>, double>{{0, 1}, 0.02},
                                    std::pair<std::vector<int>, double>{{0, 1, 2}, 0.1},
                                    std::pair<std::vector<int>, double>{{0, 1, 3}, 0.1}}) {
            auto recs = u1_tradeoff(EnergySpectrum(levels), step);
            n += recs.size();
            for (const auto& r : recs) bad += !r.ok;
        }
        return pass_if(bad == 0, std::to_string(bad) + " violations in " + std::to_string(n) + " records");
    }));

    out.push_back(run("dephasing_endpoints", [&] {
        double worst = 0;
        for (int d = 2; d <= 5; ++d) {
            std::vector<int> lv(d);
            for (int i = 0; i < d; ++i) lv[i] = i * i;
            EnergySpectrum s(lv);
            worst = std::max(worst, std::abs(unitarity_jamiolkowski(build_dephasing(s, 1).channel()) - 1.0 / (d + 1)));
            worst = std::max(worst, std::abs(unitarity_jamiolkowski(build_dephasing(s, 0).channel()) - 1.0));
        }
        return pass_if(worst < 1e-12, "max residual " + num(worst));
    }));

    out.push_back(run("conservation_split", [&] {
        Rng rng(derive_seed(seed, 7));
        const SpinJ j(2);
        double worst = 0;
        for (int tL = 0; tL <= 4; tL += 2) {
            QuantumChannel E = extremal_channel(j, j, tL);
            QuantumChannel C = complementary(E);
            for (int t = 0; t < 10; ++t) {
                CMat rho = random_density(3, rng);
                Eigen::Vector3d lhs = polarisation(rho, j);
                Eigen::Vector3d rhs = polarisation(E.apply(rho), j) + polarisation(C.apply(rho), SpinJ(tL));
                worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
            }
        }
        return pass_if(worst < 1e-9, "max residual " + num(worst));
    }));

    if (opt.fixture) {
        out.push_back(run("fixture_channel_valid", [&] {
            QuantumChannel E = read_channel_file(*opt.fixture);
            const Validity& v = E.validity();
            return pass_if(v.cp && v.tp, "min eigenvalue " + num(v.min_eigenvalue) + ", tp residual " +
                                             num(v.tp_residual));
        }));
    }
    return out;
}

json verify_report(const VerifyOptions& opt, const std::vector<CheckResult>& checks) {
    json rep;
    rep["seed"] = opt.seed;
    rep["samples"] = opt.samples;
    json arr = json::array();
    int failed = 0;
    for (const auto& c : checks) {
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        failed += !c.pass;
    }
    rep["checks"] = std::move(arr);
    rep["failed"] = failed;
    rep["passed"] = failed == 0;
    return rep;
}

}  // namespace noetherlab
