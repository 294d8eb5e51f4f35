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

#include "noetherlab/chan.hpp"
#include "noetherlab/su2cov.hpp"
#include "testing.hpp"

using namespace noetherlab;
using nltest::dist;

namespace {

double action_gap(const QuantumChannel& E, const QuantumChannel& F) {
    double worst = 0;
    for (int i = 0; i < E.d_in(); ++i)
        for (int k = 0; k < E.d_in(); ++k) {
            CMat X = nltest::basis_op(E.d_in(), i, k);
            worst = std::max(worst, dist(E.apply(X), F.apply(X)));
        }
    return worst;
}

CMat omega_projector(int d) {
    CVec w = CVec::Zero(d * d);
    for (int a = 0; a < d; ++a) w(a * d + a) = 1 / std::sqrt(double(d));
    return w * w.adjoint();
}

}  // namespace

TEST_CASE("identity channel in every representation") {
    QuantumChannel E = identity_channel(2);
    CHECK(E.kraus().size() == 1);
    CHECK(dist(E.kraus()[0], CMat::Identity(2, 2)) == 0);
    CHECK(dist(E.liouville(), CMat::Identity(4, 4)) < 1e-15);
    CHECK(dist(E.jamiolkowski(), omega_projector(2)) < 1e-15);
    QuantumChannel F = QuantumChannel::from_jamiolkowski(omega_projector(2), 2, 2);
    CHECK(F.kraus().size() == 1);
    CHECK(action_gap(E, F) < 1e-12);
}

TEST_CASE("completely depolarizing qubit") {
    QuantumChannel E = depolarizing_channel(2);
    CHECK(dist(E.jamiolkowski(), CMat::Identity(4, 4) / 4.0) < 1e-14);
    QuantumChannel F = QuantumChannel::from_jamiolkowski(CMat::Identity(4, 4) / 4.0, 2, 2);
    CHECK(F.kraus().size() == 4);
    Rng rng(1);
    CMat rho = random_density(2, rng);
    CHECK(dist(E.apply(rho), CMat::Identity(2, 2) / 2.0) < 1e-14);
}

TEST_CASE("representations agree on random channels") {
    Rng rng(2);
    double worst = 0;
    for (int t = 0; t < 100; ++t) {
        const int dA = 1 + int(rng() % 4), dB = 1 + int(rng() % 4);
        const int rmin = (dA + dB - 1) / dB;
        const int rank = rmin + int(rng() % 3);
        QuantumChannel E = random_channel(dA, dB, rank, rng);
        worst = std::max(worst, action_gap(E, QuantumChannel::from_liouville(E.liouville(), dA, dB)));
        worst = std::max(worst, action_gap(E, QuantumChannel::from_jamiolkowski(E.jamiolkowski(), dA, dB)));
        worst = std::max(worst, action_gap(E, QuantumChannel::from_stinespring(E.stinespring(), dA, dB)));
        worst = std::max(worst, action_gap(E, to_kraus(to_jamiolkowski(to_liouville(E)))));
        CHECK(dist(E.stinespring().adjoint() * E.stinespring(), CMat::Identity(dA, dA)) < 1e-10);
    }
    CHECK(worst < 1e-9);

    QuantumChannel E = random_channel(2, 3, 3, rng);
    CHECK(E.kraus().size() == 3);
    CHECK(QuantumChannel::from_jamiolkowski(E.jamiolkowski(), 2, 3).kraus().size() == 3);
}

TEST_CASE("complete positivity and trace preservation are detected") {
    CMat J = omega_projector(2);
    CMat bad = J;
    bad(1, 1) -= 1e-6;  // |0_B 1_A>
    bad(3, 3) += 1e-6;  // |1_B 1_A>: keeps tr_B fixed
    CHECK(check_jamiolkowski(bad, 2, 2).tp);
    CHECK_FALSE(check_jamiolkowski(bad, 2, 2).cp);
    CHECK_THROWS_WITH_AS(QuantumChannel::from_jamiolkowski(bad, 2, 2), doctest::Contains("CP"), ChannelError);
    CHECK_THROWS_WITH_AS(QuantumChannel::from_jamiolkowski(J * 1.01, 2, 2), doctest::Contains("TP"), ChannelError);
    CHECK_THROWS_AS(QuantumChannel::from_liouville(CMat::Identity(4, 4) * 0.9, 2, 2), ChannelError);
    CHECK_THROWS_AS(QuantumChannel::from_kraus({CMat::Identity(2, 2) * 0.5}), ChannelError);
    CHECK_THROWS_AS(QuantumChannel::from_jamiolkowski(J, 2, 3), std::invalid_argument);

    // transpose map: trace preserving, not completely positive
    CMat swap = CMat::Zero(4, 4);
    for (int b = 0; b < 2; ++b)
        for (int a = 0; a < 2; ++a) swap(b * 2 + a, a * 2 + b) = 0.5;
    Validity v = check_jamiolkowski(swap, 2, 2);
    CHECK(v.tp);
    CHECK_FALSE(v.cp);
    CHECK(v.min_eigenvalue == doctest::Approx(-0.5));
}

TEST_CASE("application") {
    Rng rng(3);
    CMat rho = random_density(3, rng);
    CHECK(dist(identity_channel(3).apply(rho), rho) < 1e-14);
    CHECK(dist(depolarizing_channel(3).apply(rho), CMat::Identity(3, 3) / 3.0) < 1e-14);
    CHECK_THROWS_AS(identity_channel(2).apply(rho), std::invalid_argument);

    // Bloch vector scaled by -1/3: |0><0| -> diag(1/3, 2/3)
    QuantumChannel E = extremal_channel(SpinJ(1), SpinJ(1), 2);
    CMat out = E.apply(nltest::basis_op(2, 0, 0));
    CMat expect = CMat::Zero(2, 2);
    expect(0, 0) = 1.0 / 3;
    expect(1, 1) = 2.0 / 3;
    CHECK(dist(out, expect) < 1e-14);

    for (int t = 0; t < 10; ++t) {
        QuantumChannel F = random_channel(3, 2, 2, rng);
        CHECK_NOTHROW(require_density_matrix(F.apply(random_density(3, rng))));
    }
}

TEST_CASE("adjoint") {
    Rng rng(4);
    QuantumChannel E = random_channel(3, 2, 4, rng);
    for (int t = 0; t < 5; ++t) {
        CMat X = ginibre(3, 3, rng), Y = ginibre(2, 2, rng);
        cplx lhs = (E.apply(X) * Y).trace();
        cplx rhs = (X * E.apply_adjoint(Y)).trace();
        CHECK(std::abs(lhs - rhs) < 1e-12);
        // Heisenberg picture through the Liouville matrix
        CHECK(dist(vectorize(E.apply_adjoint(Y)), E.liouville().adjoint() * vectorize(Y)) < 1e-12);
    }
    CHECK(dist(E.apply_adjoint(CMat::Identity(2, 2)), CMat::Identity(3, 3)) < 1e-12);

    CMat U = haar_unitary(3, rng);
    CMat Y = ginibre(3, 3, rng);
    CHECK(dist(unitary_channel(U).apply_adjoint(Y), U.adjoint() * Y * U) < 1e-12);
    CHECK(dist(adjoint(unitary_channel(U), Y), U.adjoint() * Y * U) < 1e-12);
}

TEST_CASE("complementary channel") {
    Rng rng(5);
    CMat V = haar_isometry(4, 2, rng);
    QuantumChannel iso = QuantumChannel::from_kraus({V});
    QuantumChannel C = complementary(iso);
    CHECK(C.d_out() == 1);
    CMat rho = random_density(2, rng);
    CHECK(dist(C.apply(rho), CMat::Identity(1, 1)) < 1e-12);

    QuantumChannel E = random_channel(3, 2, 3, rng);
    QuantumChannel Ec = complementary(E);
    QuantumChannel Ecc = complementary(Ec);
    for (int t = 0; t < 5; ++t) {
        CMat r = projector(haar_pure(3, rng));
        CHECK(std::abs(purity(Ec.apply(r)) - purity(E.apply(r))) < 1e-12);
        CHECK(std::abs(purity(Ecc.apply(r)) - purity(E.apply(r))) < 1e-12);
        CMat VrV = E.stinespring() * r * E.stinespring().adjoint();
        CHECK(dist(Ec.apply(r), partial_trace(VrV, E.d_out(), E.d_env(), Keep::A)) < 1e-12);
    }
}

TEST_CASE("composition and mixing") {
    Rng rng(6);
    QuantumChannel E = random_channel(2, 3, 2, rng);
    CHECK(action_gap(compose(identity_channel(3), E), E) < 1e-12);
    CHECK(action_gap(compose(E, identity_channel(2)), E) < 1e-12);
    QuantumChannel D = compose(depolarizing_channel(3), E);
    CMat rho = random_density(2, rng);
    CHECK(dist(D.apply(rho), CMat::Identity(3, 3) / 3.0) < 1e-12);

    CMat U1 = haar_unitary(3, rng), U2 = haar_unitary(3, rng);
    CHECK(action_gap(compose(unitary_channel(U2), unitary_channel(U1)), unitary_channel(U2 * U1)) < 1e-12);

    QuantumChannel F = random_channel(3, 2, 2, rng);
    CHECK(dist(compose(F, E).liouville(), F.liouville() * E.liouville()) < 1e-12);
    CHECK_THROWS_AS(compose(E, E), std::invalid_argument);

    QuantumChannel M = mix({0.25, 0.75}, {identity_channel(2), depolarizing_channel(2)});
    CHECK(dist(M.apply(nltest::basis_op(2, 0, 0)), CMat::Identity(2, 2) * 0.375 +
                                                        nltest::basis_op(2, 0, 0) * 0.25) < 1e-12);
}
