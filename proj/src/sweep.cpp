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

#include "noetherlab/sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "noetherlab/parallel.hpp"

namespace noetherlab {

double TradeoffRecord::sqrt_delta() const { return std::sqrt(std::max(0.0, delta)); }

int grid_divisions(double step) {
    if (!(step > 0 && step <= 1)) throw std::invalid_argument("grid step must lie in (0, 1]");
    const double k = std::round(1.0 / step);
    if (std::abs(k * step - 1.0) > 1e-9) throw std::invalid_argument("grid step must divide 1");
    return int(k);
}

std::size_t simplex_grid_size(int n, int k) {
    // C(k + n - 1, n - 1), saturating
    double c = 1;
    for (int i = 1; i < n; ++i) {
        c = c * (k + i) / i;
        if (c > 1e15) return std::size_t(-1);
    }
    return std::size_t(std::llround(c));
}

namespace {

void compositions(int n, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 1) {
        cur.push_back(k);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int a = k; a >= 0; --a) {
        cur.push_back(a);
        compositions(n - 1, k - a, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> simplex_grid(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("simplex_grid: bad arguments");
    if (simplex_grid_size(n, k) > kMaxSweepPoints) throw std::invalid_argument("grid has too many points");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    compositions(n, k, cur, out);
    return out;
}

std::vector<TradeoffRecord> su2_tradeoff(SpinJ j, double step) {
    if (j.two_j < 1) throw std::invalid_argument("su2 tradeoff needs two_j >= 1");
    const int k = grid_divisions(step);
    const int n = j.two_j + 1;
    const auto pts = simplex_grid(n, k);
    std::vector<std::string> names{"two_j"};
    for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
    std::vector<TradeoffRecord> recs(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) {
        std::vector<double> w(n);
        for (int a = 0; a < n; ++a) w[a] = double(pts[i][a]) / k;
        CovariantMixture mix(j, j, w);
        TradeoffRecord& r = recs[i];
        r.param_names = names;
        r.params.push_back(j.two_j);
        r.params.insert(r.params.end(), w.begin(), w.end());
        r.delta = deviation_su2_closed(mix);
        r.unitarity = unitarity_su2_closed(mix);
        Su2Bounds b = su2_bounds(mix);
        r.bound_lower = b.lower.lhs;
        r.bound_upper = b.upper.rhs;
        r.ok = b.lower.satisfied && b.upper.satisfied;
    });
    return recs;
}

std::vector<TradeoffRecord> u1_tradeoff(const EnergySpectrum& s, double step) {
    const int d = s.dim();
    if (d < 2) throw std::invalid_argument("u1 tradeoff needs at least two levels");
    const int k = grid_divisions(step);
    const auto col = simplex_grid(d, k);
    double total = 1;
    for (int i = 0; i < d; ++i) total *= double(col.size());
    if (total > double(kMaxSweepPoints)) throw std::invalid_argument("grid has too many points");
    const std::size_t npts = std::size_t(total);

    std::vector<std::string> names;
    for (int i = 0; i < d; ++i) names.push_back("E" + std::to_string(i));
    for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) names.push_back("P" + std::to_string(m) + std::to_string(n));

    std::vector<TradeoffRecord> recs(npts);
    parallel_for(npts, [&](std::size_t idx) {
        PopulationMatrix P(d, d);
        std::size_t rem = idx;
        for (int c = d - 1; c >= 0; --c) {
            const auto& pt = col[rem % col.size()];
            rem /= col.size();
            for (int m = 0; m < d; ++m) P(m, c) = double(pt[(m - c + d) % d]) / k;
        }
        TradeoffRecord& r = recs[idx];
        r.param_names = names;
        for (int e : s.levels) r.params.push_back(e);
        for (int m = 0; m < d; ++m)
            for (int n = 0; n < d; ++n) r.params.push_back(P(m, n));
        BoundCheck b = u1_bound_population(s, P);
        r.delta = deviation_u1_population(s, P);
        r.unitarity = b.lhs;
        r.bound_upper = b.rhs;
        r.ok = b.satisfied;
    });
    return recs;
}

bool all_ok(const std::vector<TradeoffRecord>& recs) {
    for (const auto& r : recs)
        if (!r.ok) return false;
    return true;
}

}  // namespace noetherlab
