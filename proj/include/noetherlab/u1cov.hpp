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

#include <map>
#include <utility>
#include <vector>

#include "noetherlab/chan.hpp"

namespace noetherlab {

// Non-degenerate spectrum on an integer grid.
struct EnergySpectrum {
    std::vector<int> levels;

    EnergySpectrum() = default;
    explicit EnergySpectrum(std::vector<int> e);
    int dim() const { return int(levels.size()); }
    int width() const { return levels.back() - levels.front(); }
    int index_of(int energy) const;  // -1 if absent
    CMat hamiltonian() const;
};

// Columns sum to one: P(m, n) = <m| E(|n><n|) |m>.
using PopulationMatrix = RMat;

void require_stochastic(const PopulationMatrix& P, double tol = kTol.eq);

struct U1Block {
    int lambda = 0;
    // (output index m, input index n) with E_m - E_n = lambda
    std::vector<std::pair<int, int>> support;
    CMat J;
};

struct U1BlockChannel {
    EnergySpectrum spectrum;
    std::map<int, U1Block> blocks;

    PopulationMatrix population() const;
    CMat jamiolkowski() const;
    QuantumChannel channel() const;
};

struct PhaseEntry {
    int lambda;
    int m;
    double radians;
};

std::vector<int> bohr_frequencies(const EnergySpectrum& s);
std::vector<std::pair<int, int>> block_support(const EnergySpectrum& s, int lambda);

U1BlockChannel build_extremal(const EnergySpectrum& s, const PopulationMatrix& gamma,
                              const std::vector<PhaseEntry>& phases = {});
U1BlockChannel build_dephasing(const EnergySpectrum& s, double p);
// Re-block the Jamiolkowski state of a U(1)-covariant channel.
U1BlockChannel to_blocks(const QuantumChannel& E, const EnergySpectrum& s, const Tolerances& tol = kTol);

struct U1Stats {
    std::map<int, double> q;  // q_lambda
    int g = 0;
    int width = 0;
    double b = 0;
};

U1Stats u1_structure_stats(const U1BlockChannel& ch);
int gap_multiplicity(const EnergySpectrum& s);
double optimal_unitarity_for_population(const EnergySpectrum& s, const PopulationMatrix& P);

}  // namespace noetherlab
