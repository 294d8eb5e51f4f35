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

#include "noetherlab/u1cov.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace noetherlab {

EnergySpectrum::EnergySpectrum(std::vector<int> e) : levels(std::move(e)) {
    if (levels.empty()) throw std::invalid_argument("spectrum: no levels");
    for (std::size_t i = 1; i < levels.size(); ++i)
        if (levels[i] <= levels[i - 1]) throw std::invalid_argument("spectrum: levels must be strictly increasing");
}

int EnergySpectrum::index_of(int energy) const {
    auto it = std::lower_bound(levels.begin(), levels.end(), energy);
    return (it != levels.end() && *it == energy) ? int(it - levels.begin()) : -1;
}

CMat EnergySpectrum::hamiltonian() const {
    CMat H = CMat::Zero(dim(), dim());
    for (int i = 0; i < dim(); ++i) H(i, i) = double(levels[i]);
    return H;
}

void require_stochastic(const PopulationMatrix& P, double tol) {
    if (P.rows() != P.cols()) throw std::invalid_argument("population matrix must be square");
    if (!P.allFinite() || P.minCoeff() < -tol) throw std::invalid_argument("population matrix has negative entries");
    for (Eigen::Index n = 0; n < P.cols(); ++n)
        if (std::abs(P.col(n).sum() - 1.0) > tol) {
            std::ostringstream os;
            os << "population matrix column " << n << " sums to " << P.col(n).sum();
            throw std::invalid_argument(os.str());
        }
}

std::vector<int> bohr_frequencies(const EnergySpectrum& s) {
    std::set<int> f;
    for (int a : s.levels)
        for (int b : s.levels) f.insert(a - b);
    return {f.begin(), f.end()};
}

std::vector<std::pair<int, int>> block_support(const EnergySpectrum& s, int lambda) {
    std::vector<std::pair<int, int>> sup;
    for (int m = 0; m < s.dim(); ++m) {
        int n = s.index_of(s.levels[m] - lambda);
        if (n >= 0) sup.emplace_back(m, n);
    }
    return sup;
}

PopulationMatrix U1BlockChannel::population() const {
    const int d = spectrum.dim();
    PopulationMatrix P = PopulationMatrix::Zero(d, d);
    for (const auto& [lam, blk] : blocks)
        for (std::size_t i = 0; i < blk.support.size(); ++i)
            P(blk.support[i].first, blk.support[i].second) = d * blk.J(i, i).real();
    return P;
}

CMat U1BlockChannel::jamiolkowski() const {
    const int d = spectrum.dim();
    CMat J = CMat::Zero(d * d, d * d);
    for (const auto& [lam, blk] : blocks)
        for (std::size_t i = 0; i < blk.support.size(); ++i)
            for (std::size_t k = 0; k < blk.support.size(); ++k) {
                auto [m, n] = blk.support[i];
                auto [mp, np] = blk.support[k];
                J(m * d + n, mp * d + np) = blk.J(i, k);
            }
    return J;
}

QuantumChannel U1BlockChannel::channel() const {
    return QuantumChannel::from_jamiolkowski(jamiolkowski(), spectrum.dim(), spectrum.dim());
}

U1BlockChannel build_extremal(const EnergySpectrum& s, const PopulationMatrix& gamma,
                              const std::vector<PhaseEntry>& phases) {
    const int d = s.dim();
    if (gamma.rows() != d || gamma.cols() != d) throw std::invalid_argument("build_extremal: gamma has wrong shape");
    require_stochastic(gamma);
    U1BlockChannel ch;
    ch.spectrum = s;
    for (int lam : bohr_frequencies(s)) {
        U1Block blk;
        blk.lambda = lam;
        blk.support = block_support(s, lam);
        CVec psi(blk.support.size());
        for (std::size_t i = 0; i < blk.support.size(); ++i) {
            auto [m, n] = blk.support[i];
            double phi = 0;
            for (const auto& ph : phases)
                if (ph.lambda == lam && ph.m == m) phi = ph.radians;
            psi(i) = std::polar(std::sqrt(std::max(0.0, gamma(m, n)) / d), phi);
        }
        blk.J = psi * psi.adjoint();
        ch.blocks.emplace(lam, std::move(blk));
    }
    return ch;
}

U1BlockChannel build_dephasing(const EnergySpectrum& s, double p) {
    if (!(p >= 0 && p <= 1)) throw std::invalid_argument("build_dephasing: p outside [0,1]");
    const int d = s.dim();
    U1BlockChannel ch;
    ch.spectrum = s;
    for (int lam : bohr_frequencies(s)) {
        U1Block blk;
        blk.lambda = lam;
        blk.support = block_support(s, lam);
        const auto n = Eigen::Index(blk.support.size());
        if (lam == 0) {
            blk.J = CMat::Constant(n, n, cplx((1 - p) / d));
            blk.J.diagonal().setConstant(1.0 / d);
        } else {
            blk.J = CMat::Zero(n, n);
        }
        ch.blocks.emplace(lam, std::move(blk));
    }
    return ch;
}

U1BlockChannel to_blocks(const QuantumChannel& E, const EnergySpectrum& s, const Tolerances& tol) {
    const int d = s.dim();
    if (E.d_in() != d || E.d_out() != d) throw std::invalid_argument("to_blocks: dimension mismatch");
    const CMat& J = E.jamiolkowski();
    for (int r = 0; r < d * d; ++r)
        for (int c = 0; c < d * d; ++c) {
            const int lr = s.levels[r / d] - s.levels[r % d];
            const int lc = s.levels[c / d] - s.levels[c % d];
            if (lr != lc && std::abs(J(r, c)) > tol.eq)
                throw std::invalid_argument("to_blocks: channel is not U(1)-covariant");
        }
    U1BlockChannel ch;
    ch.spectrum = s;
    for (int lam : bohr_frequencies(s)) {
        U1Block blk;
        blk.lambda = lam;
        blk.support = block_support(s, lam);
        const auto n = Eigen::Index(blk.support.size());
        blk.J = CMat::Zero(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index k = 0; k < n; ++k)
                blk.J(i, k) = J(blk.support[i].first * d + blk.support[i].second,
                                blk.support[k].first * d + blk.support[k].second);
        ch.blocks.emplace(lam, std::move(blk));
    }
    return ch;
}

int gap_multiplicity(const EnergySpectrum& s) {
    int g = 0;
    for (int lam : bohr_frequencies(s))
        if (lam != 0) g = std::max(g, int(block_support(s, lam).size()));
    return g;
}

namespace {

std::map<int, double> q_of(const EnergySpectrum& s, const PopulationMatrix& P) {
    std::map<int, double> q;
    for (int lam : bohr_frequencies(s)) {
        double acc = 0;
        for (auto [m, n] : block_support(s, lam)) acc += P(m, n);
        q[lam] = acc;
    }
    return q;
}

double b_of(const PopulationMatrix& P) {
    double b = 0;
    for (Eigen::Index m = 0; m < P.rows(); ++m) b += P.row(m).sum() * P.row(m).sum();
    return b / double(P.rows());
}

}  // namespace

U1Stats u1_structure_stats(const U1BlockChannel& ch) {
    PopulationMatrix P = ch.population();
    U1Stats st;
    st.q = q_of(ch.spectrum, P);
    st.g = gap_multiplicity(ch.spectrum);
    st.width = ch.spectrum.width();
    st.b = b_of(P);
    return st;
}

double optimal_unitarity_for_population(const EnergySpectrum& s, const PopulationMatrix& P) {
    const int d = s.dim();
    if (d < 2) throw std::invalid_argument("unitarity needs d >= 2");
    if (P.rows() != d || P.cols() != d) throw std::invalid_argument("population matrix has wrong shape");
    require_stochastic(P);
    double sq = 0;
    for (const auto& [lam, q] : q_of(s, P)) sq += q * q;
    return (sq - b_of(P)) / double(d * d - 1);
}

}  // namespace noetherlab
