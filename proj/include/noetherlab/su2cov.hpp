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

#pragma once

#include <string>
#include <vector>

#include "noetherlab/chan.hpp"
#include "noetherlab/su2rep.hpp"

namespace noetherlab {

// Weights over the extremal channels E^L, L = |jA - jB|, ..., jA + jB.
struct CovariantMixture {
    SpinJ j_in, j_out;
    std::vector<double> p;

    CovariantMixture() = default;
    CovariantMixture(SpinJ a, SpinJ b, std::vector<double> w);
    static CovariantMixture vertex(SpinJ a, SpinJ b, int two_L);

    int two_L_min() const { return std::abs(j_in.two_j - j_out.two_j); }
    int two_L(std::size_t i) const { return two_L_min() + 2 * int(i); }
    std::size_t size() const { return p.size(); }
    double weight(int two_L) const;
};

std::size_t ladder_size(SpinJ a, SpinJ b);
bool admissible_L(SpinJ a, SpinJ b, int two_L);

// Projector onto the L-irrep of H_B (x) H_A under U_B (x) conj(U_A).
CMat irrep_projector(SpinJ j_in, SpinJ j_out, int two_L);
// Same projector from the spectral decomposition of the Casimir of J_B (x) 1 - 1 (x) conj(J_A).
CMat irrep_projector_casimir(SpinJ j_in, SpinJ j_out, int two_L);

// Kraus operators K_k = sum_n <jB, n-k; L, k | jA, n> |jB, n-k><jA, n|, k = L, ..., -L.
QuantumChannel extremal_channel(SpinJ j_in, SpinJ j_out, int two_L);
QuantumChannel mixture_channel(const CovariantMixture& mix);

// f_l(E^L) from Clebsch-Gordan sums; l >= 1 integer.
double f_extremal(SpinJ j_in, SpinJ j_out, int two_L, int l);
double f1_explicit(SpinJ j_in, SpinJ j_out, int two_L);
// kappa(L) = (|J_B| / |J_A|) f1(E^L), as an exact rational.
Rational kappa_exact(SpinJ j_in, SpinJ j_out, int two_L);

struct ScalingVector {
    std::vector<double> f;  // l = 0 .. 2 min(jA, jB); f[0] == 1
};

ScalingVector scaling_vector(const CovariantMixture& mix);
// f_l read off a channel through the ITO bases of input and output.
double scaling_factor_numeric(const QuantumChannel& E, SpinJ j_in, SpinJ j_out, int l);

double covariance_residual(const QuantumChannel& E, SpinJ j_in, SpinJ j_out);
CovariantMixture decompose(const QuantumChannel& E, SpinJ j_in, SpinJ j_out, const Tolerances& tol = kTol);
QuantumChannel twirl(const QuantumChannel& E, SpinJ j_in, SpinJ j_out);

struct KappaReport {
    double kappa_minus = 0, kappa_plus = 0;
    int two_L_minus = 0, two_L_plus = 0;
    std::string kappa_minus_exact, kappa_plus_exact;
};

KappaReport kappa_extrema(SpinJ j_in, SpinJ j_out);

double time_reversal_fidelity(SpinJ j);
// <j,-j| E^{2j}(|j,j><j,j|) |j,-j> evaluated on the constructed channel.
double time_reversal_fidelity_direct(SpinJ j);

// Expectation vector (tr J_x rho, tr J_y rho, tr J_z rho).
Eigen::Vector3d polarisation(const CMat& rho, SpinJ j);

}  // namespace noetherlab
