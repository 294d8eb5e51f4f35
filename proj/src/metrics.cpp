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

#include "noetherlab/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace noetherlab {

GeneratorSet::GeneratorSet(std::vector<CMat> gin, std::vector<CMat> gout, const Tolerances& tol)
    : in(std::move(gin)), out(std::move(gout)) {
    if (in.empty() || in.size() != out.size()) throw std::invalid_argument("generators: count mismatch");
    auto check = [&](const CMat& G) {
        if (!is_hermitian(G, tol.eq)) throw std::invalid_argument("generator is not Hermitian");
        if (std::abs(G.trace()) > tol.eq * G.rows()) throw std::invalid_argument("generator is not traceless");
    };
    for (std::size_t k = 0; k < in.size(); ++k) {
        check(in[k]);
        check(out[k]);
        if (in[k].rows() != in[0].rows() || out[k].rows() != out[0].rows())
            throw std::invalid_argument("generators: inconsistent dimensions");
    }
}

double GeneratorSet::norm_in() const {
    double s = 0;
    for (const auto& G : in) s += (G * G).trace().real();
    return std::sqrt(s);
}

GeneratorSet spin_generators(SpinJ ja, SpinJ jb) {
    SpinOps a = spin_operators(ja), b = spin_operators(jb);
    return GeneratorSet({a.x, a.y, a.z}, {b.x, b.y, b.z});
}

GeneratorSet energy_generators(const EnergySpectrum& s) {
    CMat H = s.hamiltonian();
    H -= (H.trace() / double(s.dim())) * CMat::Identity(s.dim(), s.dim());
    return GeneratorSet({H}, {H});
}

double unitarity_jamiolkowski(const QuantumChannel& E) {
    const int dA = E.d_in();
    if (dA < 2) throw std::invalid_argument("unitarity needs d_in >= 2");
    const double gj = purity(E.jamiolkowski());
    const double gm = purity(E.apply(CMat::Identity(dA, dA) / double(dA)));
    return double(dA) / (dA * dA - 1.0) * (dA * gj - gm);
}

double unitarity_complementary(const QuantumChannel& E) {
    const int dA = E.d_in();
    if (dA < 2) throw std::invalid_argument("unitarity needs d_in >= 2");
    CMat mixed = CMat::Identity(dA, dA) / double(dA);
    const double ge = purity(complementary(E).apply(mixed));
    const double gm = purity(E.apply(mixed));
    return double(dA) / (dA * dA - 1.0) * (dA * ge - gm);
}

double unitarity_su2_closed(const CovariantMixture& mix) {
    const double dA = mix.j_in.dim(), dB = mix.j_out.dim();
    if (dA < 2) throw std::invalid_argument("unitarity needs d_in >= 2");
    double s = 0;
    for (std::size_t i = 0; i < mix.size(); ++i) s += mix.p[i] * mix.p[i] / double(mix.two_L(i) + 1);
    return (dA * dA * s - dA / dB) / (dA * dA - 1);
}

bool upper_bound_applicable(const QuantumChannel& E) {
    const int dA = E.d_in();
    if (dA >= E.d_out()) return true;
    return purity(E.apply(CMat::Identity(dA, dA) / double(dA))) >= 1.0 / dA - kTol.eq;
}

std::vector<CMat> deviation_operators(const QuantumChannel& E, const GeneratorSet& gens) {
    if (gens.d_in() != E.d_in() || gens.d_out() != E.d_out())
        throw std::invalid_argument("deviation: generator dimensions do not match the channel");
    std::vector<CMat> dj;
    for (std::size_t k = 0; k < gens.size(); ++k) dj.push_back(E.apply_adjoint(gens.out[k]) - gens.in[k]);
    return dj;
}

DeviationReport deviation_avg(const QuantumChannel& E, const GeneratorSet& gens) {
    const double dA = E.d_in();
    DeviationReport r;
    for (const auto& D : deviation_operators(E, gens)) {
        r.trace_squared.push_back(std::norm(D.trace()));
        r.trace_of_square.push_back((D.adjoint() * D).trace().real());
        r.delta += r.trace_squared.back() + r.trace_of_square.back();
    }
    r.delta /= dA * (dA + 1);
    return r;
}

double deviation_su2_closed(const CovariantMixture& mix) {
    if (mix.j_in.two_j == 0) throw std::invalid_argument("deviation needs j_in > 0");
    const double a = mix.j_in.casimir();
    const double beta = mix.j_out.casimir() - a;
    double s = 0;
    for (std::size_t i = 0; i < mix.size(); ++i) {
        const double tL = mix.two_L(i);
        s += mix.p[i] * 0.25 * tL * (tL + 2);
    }
    const double x = beta - s;
    return x * x / (8 * mix.j_in.value() * (mix.j_in.value() + 1) * (mix.j_in.value() + 1));
}

}  // namespace noetherlab
