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
#include "noetherlab/u1cov.hpp"
#include "testing.hpp"

using namespace noetherlab;
using nltest::dist;

namespace {

RMat random_stochastic(int d, Rng& rng) {
    RMat P(d, d);
    for (int c = 0; c < d; ++c) {
        auto col = random_simplex(d, rng);
        for (int r = 0; r < d; ++r) P(r, c) = col[r];
    }
    return P;
}

RMat qubit_population(double p00, double p11) {
    RMat P(2, 2);
    P << p00, 1 - p11, 1 - p00, p11;
    return P;
}

}  // namespace

TEST_CASE("energy spectra") {
    EnergySpectrum s({0, 1, 3});
    CHECK(s.dim() == 3);
    CHECK(s.width() == 3);
    CHECK(s.index_of(3) == 2);
    CHECK(s.index_of(2) == -1);
    CHECK(bohr_frequencies(s) == std::vector<int>{-3, -2, -1, 0, 1, 2, 3});
    CHECK(block_support(s, 1).size() == 1);
    CHECK(block_support(s, 0).size() == 3);
    CHECK_THROWS_AS(EnergySpectrum({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(EnergySpectrum({0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(EnergySpectrum(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("extremal construction from population data") {
    EnergySpectrum q({0, 1});
    U1BlockChannel id = build_extremal(q, RMat::Identity(2, 2));
    CMat rho = CMat::Zero(2, 2);
    rho << 0.6, cplx(0.1, 0.2), cplx(0.1, -0.2), 0.4;
    CHECK(dist(id.channel().apply(rho), rho) < 1e-14);

    RMat flip(2, 2);
    flip << 0, 1, 1, 0;
    QuantumChannel F = build_extremal(q, flip).channel();
    CHECK(nltest::haar_unitarity(F) == doctest::Approx(1.0 / 3));
    CHECK(unitarity_jamiolkowski(F) == doctest::Approx(1.0 / 3));
    CHECK(deviation_avg(F, energy_generators(q)).delta == doctest::Approx(1.0 / 3));

    Rng rng(1);
    for (std::vector<int> lv : {std::vector<int>{0, 1}, {0, 1, 2}, {0, 1, 3}, {0, 2, 3, 7}}) {
        EnergySpectrum s(lv);
        for (int t = 0; t < 10; ++t) {
            RMat G = random_stochastic(s.dim(), rng);
            U1BlockChannel ch = build_extremal(s, G);
            CHECK((ch.population() - G).cwiseAbs().maxCoeff() < 1e-12);
            QuantumChannel E = ch.channel();
            CHECK(E.validity().cp);
            CHECK(E.validity().tp);
            for (const auto& [lam, blk] : ch.blocks) {
                Eigen::SelfAdjointEigenSolver<CMat> es(blk.J);
                int rank = 0;
                for (int k = 0; k < es.eigenvalues().size(); ++k) rank += es.eigenvalues()(k) > 1e-10;
                CHECK(rank <= 1);
            }
        }
    }
    RMat bad = RMat::Identity(2, 2) * 0.5;
    CHECK_THROWS_AS(build_extremal(q, bad), std::invalid_argument);
}

TEST_CASE("Jamiolkowski support respects Bohr frequencies") {
    Rng rng(2);
    double worst = 0, worst_comm = 0;
    for (int t = 0; t < 100; ++t) {
        EnergySpectrum s(t % 2 ? std::vector<int>{0, 1, 3} : std::vector<int>{0, 1, 2, 4});
        const int d = s.dim();
        std::vector<PhaseEntry> ph;
        for (int m = 0; m < d; ++m) ph.push_back({0, m, 0.3 * m + 0.1 * t});
        QuantumChannel E = build_extremal(s, random_stochastic(d, rng), ph).channel();
        const CMat& J = E.jamiolkowski();
        for (int r = 0; r < d * d; ++r)
            for (int c = 0; c < d * d; ++c) {
                const int lr = s.levels[r / d] - s.levels[r % d], lc = s.levels[c / d] - s.levels[c % d];
                if (lr != lc) worst = std::max(worst, std::abs(J(r, c)));
            }
        for (int k = 0; k < 10; ++k) {
            const double tt = 0.37 * k + 0.05 * t;
            CMat U = mat_exp_skew_hermitian(s.hamiltonian(), -tt);
            CMat W = kron(U, U.conjugate());
            worst_comm = std::max(worst_comm, dist(J * W, W * J));
        }
    }
    CHECK(worst < 1e-12);
    CHECK(worst_comm < 1e-9);
}

TEST_CASE("block decomposition round trip") {
    Rng rng(3);
    EnergySpectrum s({0, 1, 2});
    U1BlockChannel ch = build_extremal(s, random_stochastic(3, rng));
    QuantumChannel E = ch.channel();
    U1BlockChannel back = to_blocks(E, s);
    CHECK(dist(back.jamiolkowski(), ch.jamiolkowski()) < 1e-12);
    CHECK_THROWS_AS(to_blocks(random_channel(3, 3, 2, rng), s), std::invalid_argument);
}

TEST_CASE("dephasing family") {
    for (std::vector<int> lv : {std::vector<int>{0, 1}, {0, 1, 2}, {0, 1, 3, 4}}) {
        EnergySpectrum s(lv);
        const int d = s.dim();
        CHECK(unitarity_jamiolkowski(build_dephasing(s, 0).channel()) == doctest::Approx(1.0));
        CHECK(nltest::haar_unitarity(build_dephasing(s, 1).channel()) == doctest::Approx(1.0 / (d + 1)));
        CHECK(unitarity_jamiolkowski(build_dephasing(s, 1).channel()) == doctest::Approx(1.0 / (d + 1)));
        double prev = 2;
        for (int k = 0; k <= 10; ++k) {
            U1BlockChannel D = build_dephasing(s, 0.1 * k);
            CHECK((D.population() - RMat::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-14);
            QuantumChannel E = D.channel();
            CHECK(deviation_avg(E, energy_generators(s)).delta < 1e-14);
            const double u = unitarity_jamiolkowski(E);
            CHECK(u <= prev + 1e-14);
            prev = u;
        }
    }
    CHECK_THROWS_AS(build_dephasing(EnergySpectrum({0, 1}), 1.5), std::invalid_argument);
}

TEST_CASE("structure statistics") {
    EnergySpectrum q({0, 1});
    U1Stats id = u1_structure_stats(build_extremal(q, RMat::Identity(2, 2)));
    CHECK(id.q.at(0) == doctest::Approx(2.0));
    for (auto [lam, v] : id.q)
        if (lam != 0) CHECK(v == doctest::Approx(0.0));
    CHECK(id.b == doctest::Approx(1.0));
    CHECK(id.g == 1);
    CHECK(id.width == 1);
    CHECK(gap_multiplicity(EnergySpectrum({0, 1, 2, 3})) == 3);
    CHECK(gap_multiplicity(EnergySpectrum({0, 1, 3})) == 1);

    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
        EnergySpectrum s({0, 1, 2, 3});
        U1Stats st = u1_structure_stats(build_extremal(s, random_stochastic(4, rng)));
        double total = 0;
        for (auto [lam, v] : st.q) {
            total += v;
            if (lam != 0) CHECK(v <= st.g + 1e-12);
        }
        CHECK(total == doctest::Approx(4.0));
        CHECK(st.b >= 1 - 1e-12);
    }
    RMat bist(2, 2);
    bist << 0.3, 0.7, 0.7, 0.3;
    CHECK(u1_structure_stats(build_extremal(q, bist)).b == doctest::Approx(1.0));
    CHECK(u1_structure_stats(build_extremal(q, qubit_population(1, 0))).b > 1.0);
}

TEST_CASE("optimal unitarity for a population matrix") {
    EnergySpectrum q({0, 1});
    CHECK(optimal_unitarity_for_population(q, qubit_population(1, 1)) == doctest::Approx(1.0));
    CHECK(optimal_unitarity_for_population(q, qubit_population(0, 0)) == doctest::Approx(1.0 / 3));
    // full decay to the ground state
    const RMat decay = qubit_population(1, 0);
    CHECK(optimal_unitarity_for_population(q, decay) ==
          doctest::Approx(nltest::haar_unitarity(build_extremal(q, decay).channel())));
    CHECK(optimal_unitarity_for_population(q, decay) == doctest::Approx(0.0));

    Rng rng(5);
    for (std::vector<int> lv : {std::vector<int>{0, 1}, {0, 1, 2}, {0, 2, 3}}) {
        EnergySpectrum s(lv);
        for (int t = 0; t < 20; ++t) {
            RMat P = random_stochastic(s.dim(), rng);
            CHECK(optimal_unitarity_for_population(s, P) ==
                  doctest::Approx(unitarity_jamiolkowski(build_extremal(s, P).channel())).epsilon(1e-10));
        }
    }
    CHECK_THROWS_AS(require_stochastic(RMat::Identity(2, 2) * 2), std::invalid_argument);
    RMat neg(2, 2);
    neg << 1.5, 0, -0.5, 1;
    CHECK_THROWS_AS(require_stochastic(neg), std::invalid_argument);
}
