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
#include <utility>
#include <vector>

#include "noetherlab/metrics.hpp"

namespace noetherlab {

// lhs <= rhs is the claim. slack = rhs - lhs.
struct BoundCheck {
    std::string name;
    double lhs = 0, rhs = 0;
    bool satisfied = false;
    double slack = 0;
    bool applicable = true;
};

BoundCheck make_check(std::string name, double lhs, double rhs, double tol = kTol.eq);

// max_k |L(E) (J_A^k (x) 1 - 1 (x) conj J_A^k) - (J_B^k (x) 1 - 1 (x) conj J_B^k) L(E)|
double lie_covariance_residual(const QuantumChannel& E, const GeneratorSet& gens);

BoundCheck upper_bound_general(const QuantumChannel& E, const GeneratorSet& gens);
// f_table holds f(lambda) for every nontrivial extremal vertex.
BoundCheck lower_bound_multiplicity_free(const QuantumChannel& E, const GeneratorSet& gens,
                                         const std::vector<double>& f_table);
// f1(E^L), L = 1 .. 2j, for equal input and output spin j.
std::vector<double> su2_f_table(SpinJ j);

struct Su2Bounds {
    BoundCheck lower, upper;
};

double su2_lower_coefficient(SpinJ j);
double su2_upper_coefficient(SpinJ j);
Su2Bounds su2_bounds(const CovariantMixture& mix);

// Right-hand side of u <= 1 - c sqrt(Delta) / width.
double u1_bound_value(const EnergySpectrum& s, double delta);
BoundCheck u1_bound(const U1BlockChannel& ch);
// Population-only closed forms for optimal-unitarity channels.
double deviation_u1_population(const EnergySpectrum& s, const PopulationMatrix& P);
BoundCheck u1_bound_population(const EnergySpectrum& s, const PopulationMatrix& P);

BoundCheck diamond_bound_given_value(const QuantumChannel& E, const GeneratorSet& gens, double diamond_distance);

}  // namespace noetherlab
