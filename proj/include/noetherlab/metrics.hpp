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

#include <vector>

#include "noetherlab/chan.hpp"
#include "noetherlab/su2cov.hpp"
#include "noetherlab/u1cov.hpp"

namespace noetherlab {

// Conserved-charge generators on input and output, Hermitian and traceless.
struct GeneratorSet {
    std::vector<CMat> in, out;

    GeneratorSet() = default;
    GeneratorSet(std::vector<CMat> gin, std::vector<CMat> gout, const Tolerances& tol = kTol);
    std::size_t size() const { return in.size(); }
    int d_in() const { return int(in.front().rows()); }
    int d_out() const { return int(out.front().rows()); }
    // sqrt(sum_k tr (J^k)^2) on the input side
    double norm_in() const;
};

GeneratorSet spin_generators(SpinJ j_in, SpinJ j_out);
// Traceless part of the Hamiltonian; the deviation is insensitive to the shift.
GeneratorSet energy_generators(const EnergySpectrum& s);

double unitarity_jamiolkowski(const QuantumChannel& E);
double unitarity_complementary(const QuantumChannel& E);
double unitarity_su2_closed(const CovariantMixture& mix);
// tr(E(1/dA)^2) >= 1/dA, or dA >= dB.
bool upper_bound_applicable(const QuantumChannel& E);

struct DeviationReport {
    double delta = 0;
    std::vector<double> trace_squared;     // (tr dJ^k)^2
    std::vector<double> trace_of_square;   // tr (dJ^k)^2
};

// dJ^k = E^dag(J_out^k) - J_in^k
std::vector<CMat> deviation_operators(const QuantumChannel& E, const GeneratorSet& gens);
DeviationReport deviation_avg(const QuantumChannel& E, const GeneratorSet& gens);
double deviation_su2_closed(const CovariantMixture& mix);

}  // namespace noetherlab
