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

#include <optional>
#include <string>
#include <vector>

#include "noetherlab/bounds.hpp"

namespace noetherlab {

struct TradeoffRecord {
    std::vector<std::string> param_names;
    std::vector<double> params;
    double delta = 0;
    double unitarity = 0;
    std::optional<double> bound_lower, bound_upper;
    bool ok = false;

    double sqrt_delta() const;
    double one_minus_u() const { return 1 - unitarity; }
};

inline constexpr std::size_t kMaxSweepPoints = 2'000'000;

// Number of grid cells k with k*step == 1; throws std::invalid_argument otherwise.
int grid_divisions(double step);
// All n-part compositions of k, lexicographically descending.
std::vector<std::vector<int>> simplex_grid(int n, int k);
std::size_t simplex_grid_size(int n, int k);

// Equal spins j -> j; params two_j, p0 .. p{2j} (weight of E^L at L = index).
std::vector<TradeoffRecord> su2_tradeoff(SpinJ j, double step);
// Column-stochastic population grids with optimal-unitarity blocks.
std::vector<TradeoffRecord> u1_tradeoff(const EnergySpectrum& s, double step);

bool all_ok(const std::vector<TradeoffRecord>& recs);

}  // namespace noetherlab
