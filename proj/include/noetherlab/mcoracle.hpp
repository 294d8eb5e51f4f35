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

#include <cstdint>
#include <functional>

#include "noetherlab/metrics.hpp"

namespace noetherlab {

struct McEstimate {
    double mean = 0;
    double std_error = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kMcChunk = 4096;

// Plain i.i.d. estimate of E[sample(psi)] over Haar-random pure states of dimension d.
// Chunk c draws from derive_seed(seed, c); chunks are merged in index order.
McEstimate mc_haar_mean(int d, std::uint64_t samples, std::uint64_t seed,
                        const std::function<double(const CVec&)>& sample);

McEstimate mc_unitarity(const QuantumChannel& E, std::uint64_t samples, std::uint64_t seed);
McEstimate mc_deviation(const QuantumChannel& E, const GeneratorSet& gens, std::uint64_t samples,
                        std::uint64_t seed);

// Standard errors of |exact - mean|; differences below 1e-10 count as zero so
// deterministic integrands (zero sample variance) compare cleanly.
double z_score(const McEstimate& e, double exact);

}  // namespace noetherlab
