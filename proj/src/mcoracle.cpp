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

#include "noetherlab/mcoracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "noetherlab/parallel.hpp"

namespace noetherlab {

namespace {

struct Moments {
    double n = 0, mean = 0, m2 = 0;

    void push(double x) {
        n += 1;
        const double delta = x - mean;
        mean += delta / n;
        m2 += delta * (x - mean);
    }

    void merge(const Moments& o) {
        if (o.n == 0) return;
        const double tot = n + o.n;
        const double delta = o.mean - mean;
        mean += delta * o.n / tot;
        m2 += o.m2 + delta * delta * n * o.n / tot;
        n = tot;
    }
};

}  // namespace

McEstimate mc_haar_mean(int d, std::uint64_t samples, std::uint64_t seed,
                        const std::function<double(const CVec&)>& sample) {
    if (samples < 100) throw std::invalid_argument("Monte Carlo needs at least 100 samples");
    const std::uint64_t chunks = (samples + kMcChunk - 1) / kMcChunk;
    std::vector<Moments> part(chunks);
    parallel_for(chunks, [&](std::size_t c) {
        Rng rng(derive_seed(seed, c));
        const std::uint64_t lo = c * kMcChunk;
        const std::uint64_t hi = std::min(samples, lo + kMcChunk);
        for (std::uint64_t i = lo; i < hi; ++i) part[c].push(sample(haar_pure(d, rng)));
    });
    Moments all;
    for (const auto& m : part) all.merge(m);
    McEstimate est;
    est.mean = all.mean;
    est.std_error = std::sqrt(std::max(0.0, all.m2) / (all.n - 1) / all.n);
    est.samples = samples;
    est.seed = seed;
    return est;
}

McEstimate mc_unitarity(const QuantumChannel& E, std::uint64_t samples, std::uint64_t seed) {
    const int d = E.d_in();
    if (d < 2) throw std::invalid_argument("unitarity needs d_in >= 2");
    const CMat shift = E.apply(CMat::Identity(d, d) / double(d));
    const double scale = double(d) / (d - 1.0);
    return mc_haar_mean(d, samples, seed, [&](const CVec& psi) {
        CMat X = E.apply(projector(psi)) - shift;
        return scale * (X * X).trace().real();
    });
}

McEstimate mc_deviation(const QuantumChannel& E, const GeneratorSet& gens, std::uint64_t samples,
                        std::uint64_t seed) {
    const std::vector<CMat> dj = deviation_operators(E, gens);
    return mc_haar_mean(E.d_in(), samples, seed, [&](const CVec& psi) {
        double s = 0;
        for (const auto& D : dj) s += std::norm(psi.dot(D * psi));
        return s;
    });
}

double z_score(const McEstimate& e, double exact) {
    const double diff = std::abs(e.mean - exact);
    if (diff <= 1e-10) return 0;
    return e.std_error > 0 ? diff / e.std_error : std::numeric_limits<double>::infinity();
}

}  // namespace noetherlab
