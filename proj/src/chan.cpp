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

#include <cmath>
#include <mutex>
#include <sstream>

namespace noetherlab {

struct QuantumChannel::Impl {
    int din = 0, dout = 0;
    Repr repr = Repr::Kraus;
    Tolerances tol;
    std::vector<CMat> kraus;

    mutable std::once_flag j_once, l_once, v_once, valid_once;
    mutable CMat J, L, V;
    mutable Validity valid;
};

std::string repr_name(Repr r) {
    switch (r) {
        case Repr::Kraus: return "kraus";
        case Repr::Liouville: return "liouville";
        case Repr::Jamiolkowski: return "jamiolkowski";
        case Repr::Stinespring: return "stinespring";
    }
    return "unknown";
}

Repr parse_repr(const std::string& s) {
    if (s == "kraus") return Repr::Kraus;
    if (s == "liouville") return Repr::Liouville;
    if (s == "jamiolkowski") return Repr::Jamiolkowski;
    if (s == "stinespring") return Repr::Stinespring;
    throw std::invalid_argument("unknown representation '" + s + "'");
}

namespace {

CMat jamiolkowski_from_kraus(const std::vector<CMat>& ks, int din, int dout) {
    CMat J = CMat::Zero(dout * din, dout * din);
    for (const auto& K : ks) {
        CVec v = vectorize(K);
        J.noalias() += v * v.adjoint();
    }
    return J / double(din);
}

std::vector<CMat> kraus_from_jamiolkowski(const CMat& J, int din, int dout, double tol_psd) {
    Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (J + J.adjoint()));
    std::vector<CMat> ks;
    for (Eigen::Index i = es.eigenvalues().size() - 1; i >= 0; --i) {
        double lam = es.eigenvalues()(i);
        if (lam <= tol_psd) continue;
        ks.push_back(unvectorize(std::sqrt(din * lam) * es.eigenvectors().col(i), dout, din));
    }
    return ks;
}

std::string fmt_double(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

}  // namespace

Validity check_jamiolkowski(const CMat& J, int din, int dout, const Tolerances& tol) {
    if (J.rows() != din * dout || J.cols() != din * dout)
        throw ChannelError("Jamiolkowski state has wrong shape");
    Validity v;
    Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (J + J.adjoint()), Eigen::EigenvaluesOnly);
    v.min_eigenvalue = es.eigenvalues().minCoeff();
    const double herm = (J - J.adjoint()).cwiseAbs().maxCoeff();
    v.cp = v.min_eigenvalue >= -tol.psd && herm <= tol.herm;
    CMat marg = partial_trace(J, dout, din, Keep::A);
    v.tp_residual = (marg - CMat::Identity(din, din) / double(din)).cwiseAbs().maxCoeff();
    v.tp = v.tp_residual <= tol.eq;
    return v;
}

QuantumChannel::QuantumChannel(std::shared_ptr<const Impl> p) : impl_(std::move(p)) {}

QuantumChannel QuantumChannel::from_kraus(std::vector<CMat> kraus, const Tolerances& tol) {
    if (kraus.empty()) throw ChannelError("empty Kraus set");
    const auto dout = kraus[0].rows(), din = kraus[0].cols();
    CMat S = CMat::Zero(din, din);
    for (const auto& K : kraus) {
        if (K.rows() != dout || K.cols() != din) throw ChannelError("Kraus operators of unequal shape");
        if (!K.allFinite()) throw ChannelError("Kraus operator has non-finite entries");
        S.noalias() += K.adjoint() * K;
    }
    const double res = (S - CMat::Identity(din, din)).cwiseAbs().maxCoeff();
    if (res > tol.eq) throw ChannelError("TP violated: |sum K^dag K - I| = " + fmt_double(res));
    auto p = std::make_shared<Impl>();
    p->din = int(din);
    p->dout = int(dout);
    p->repr = Repr::Kraus;
    p->tol = tol;
    p->kraus = std::move(kraus);
    return QuantumChannel(p);
}

QuantumChannel QuantumChannel::from_jamiolkowski(const CMat& J, int din, int dout, const Tolerances& tol) {
    if (din < 1 || dout < 1) throw ChannelError("dimensions must be positive");
    if (!J.allFinite()) throw ChannelError("Jamiolkowski state has non-finite entries");
    Validity v = check_jamiolkowski(J, din, dout, tol);
    if (!v.cp) throw ChannelError("CP violated: min eigenvalue " + fmt_double(v.min_eigenvalue));
    if (!v.tp) throw ChannelError("TP violated: |tr_B J - I/dA| = " + fmt_double(v.tp_residual));
    auto p = std::make_shared<Impl>();
    p->din = din;
    p->dout = dout;
    p->repr = Repr::Jamiolkowski;
    p->tol = tol;
    p->kraus = kraus_from_jamiolkowski(J, din, dout, tol.psd);
    std::call_once(p->j_once, [&] { p->J = J; });
    std::call_once(p->valid_once, [&] { p->valid = v; });
    return QuantumChannel(p);
}

QuantumChannel QuantumChannel::from_liouville(const CMat& L, int din, int dout, const Tolerances& tol) {
    if (L.rows() != dout * dout || L.cols() != din * din) throw ChannelError("Liouville matrix has wrong shape");
    QuantumChannel e = from_jamiolkowski(reshuffle(L, dout, din) / double(din), din, dout, tol);
    auto p = std::const_pointer_cast<Impl>(e.impl_);
    p->repr = Repr::Liouville;
    std::call_once(p->l_once, [&] { p->L = L; });
    return e;
}

QuantumChannel QuantumChannel::from_stinespring(const CMat& V, int din, int dout, const Tolerances& tol) {
    if (V.cols() != din || dout < 1 || V.rows() % dout != 0)
        throw ChannelError("Stinespring isometry has wrong shape");
    const int denv = int(V.rows()) / dout;
    const double res = (V.adjoint() * V - CMat::Identity(din, din)).cwiseAbs().maxCoeff();
    if (res > tol.eq) throw ChannelError("TP violated: V is not an isometry, |V^dag V - I| = " + fmt_double(res));
    std::vector<CMat> ks(denv, CMat::Zero(dout, din));
    for (int b = 0; b < dout; ++b)
        for (int e = 0; e < denv; ++e) ks[e].row(b) = V.row(b * denv + e);
    auto p = std::make_shared<Impl>();
    p->din = din;
    p->dout = dout;
    p->repr = Repr::Stinespring;
    p->tol = tol;
    p->kraus = std::move(ks);
    std::call_once(p->v_once, [&] { p->V = V; });
    return QuantumChannel(p);
}

int QuantumChannel::d_in() const { return impl_->din; }
int QuantumChannel::d_out() const { return impl_->dout; }
Repr QuantumChannel::representation() const { return impl_->repr; }
const std::vector<CMat>& QuantumChannel::kraus() const { return impl_->kraus; }

const CMat& QuantumChannel::jamiolkowski() const {
    std::call_once(impl_->j_once, [&] { impl_->J = jamiolkowski_from_kraus(impl_->kraus, impl_->din, impl_->dout); });
    return impl_->J;
}

const CMat& QuantumChannel::liouville() const {
    std::call_once(impl_->l_once, [&] {
        CMat L = CMat::Zero(impl_->dout * impl_->dout, impl_->din * impl_->din);
        for (const auto& K : impl_->kraus) L.noalias() += kron(K, K.conjugate());
        impl_->L = L;
    });
    return impl_->L;
}

const CMat& QuantumChannel::stinespring() const {
    std::call_once(impl_->v_once, [&] {
        const int denv = int(impl_->kraus.size());
        CMat V = CMat::Zero(impl_->dout * denv, impl_->din);
        for (int b = 0; b < impl_->dout; ++b)
            for (int e = 0; e < denv; ++e) V.row(b * denv + e) = impl_->kraus[e].row(b);
        impl_->V = V;
    });
    return impl_->V;
}

int QuantumChannel::d_env() const { return int(stinespring().rows()) / impl_->dout; }

const Validity& QuantumChannel::validity() const {
    std::call_once(impl_->valid_once,
                   [&] { impl_->valid = check_jamiolkowski(jamiolkowski(), impl_->din, impl_->dout, impl_->tol); });
    return impl_->valid;
}

CMat QuantumChannel::apply(const CMat& rho) const {
    if (rho.rows() != impl_->din || rho.cols() != impl_->din) throw ChannelError("apply: input dimension mismatch");
    CMat out = CMat::Zero(impl_->dout, impl_->dout);
    for (const auto& K : impl_->kraus) out.noalias() += K * rho * K.adjoint();
    return out;
}

CMat QuantumChannel::apply_adjoint(const CMat& Y) const {
    if (Y.rows() != impl_->dout || Y.cols() != impl_->dout)
        throw ChannelError("adjoint: input dimension mismatch");
    CMat out = CMat::Zero(impl_->din, impl_->din);
    for (const auto& K : impl_->kraus) out.noalias() += K.adjoint() * Y * K;
    return out;
}

QuantumChannel to_kraus(const QuantumChannel& E) { return QuantumChannel::from_kraus(E.kraus()); }
QuantumChannel to_liouville(const QuantumChannel& E) {
    return QuantumChannel::from_liouville(E.liouville(), E.d_in(), E.d_out());
}
QuantumChannel to_jamiolkowski(const QuantumChannel& E) {
    return QuantumChannel::from_jamiolkowski(E.jamiolkowski(), E.d_in(), E.d_out());
}
QuantumChannel to_stinespring(const QuantumChannel& E) {
    return QuantumChannel::from_stinespring(E.stinespring(), E.d_in(), E.d_out());
}

CMat apply(const QuantumChannel& E, const CMat& rho) { return E.apply(rho); }
CMat adjoint(const QuantumChannel& E, const CMat& Y) { return E.apply_adjoint(Y); }

QuantumChannel complementary(const QuantumChannel& E) {
    const auto& ks = E.kraus();
    const int denv = int(ks.size());
    std::vector<CMat> fs(E.d_out(), CMat::Zero(denv, E.d_in()));
    for (int b = 0; b < E.d_out(); ++b)
        for (int e = 0; e < denv; ++e) fs[b].row(e) = ks[e].row(b);
    return QuantumChannel::from_kraus(std::move(fs));
}

QuantumChannel compose(const QuantumChannel& E2, const QuantumChannel& E1) {
    if (E2.d_in() != E1.d_out()) throw ChannelError("compose: inner dimensions differ");
    std::vector<CMat> ks;
    ks.reserve(E2.kraus().size() * E1.kraus().size());
    for (const auto& A : E2.kraus())
        for (const auto& B : E1.kraus()) ks.push_back(A * B);
    return QuantumChannel::from_kraus(std::move(ks));
}

QuantumChannel mix(const std::vector<double>& w, const std::vector<QuantumChannel>& chans) {
    if (w.size() != chans.size() || chans.empty()) throw ChannelError("mix: weight/channel count mismatch");
    const int din = chans[0].d_in(), dout = chans[0].d_out();
    CMat J = CMat::Zero(din * dout, din * dout);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (chans[i].d_in() != din || chans[i].d_out() != dout) throw ChannelError("mix: dimension mismatch");
        if (w[i] < 0) throw ChannelError("mix: negative weight");
        if (w[i] != 0) J += w[i] * chans[i].jamiolkowski();
    }
    return QuantumChannel::from_jamiolkowski(J, din, dout);
}

QuantumChannel identity_channel(int d) { return QuantumChannel::from_kraus({CMat::Identity(d, d)}); }

QuantumChannel unitary_channel(const CMat& U) { return QuantumChannel::from_kraus({U}); }

QuantumChannel depolarizing_channel(int d, double p) {
    if (p < 0 || p > 1) throw ChannelError("depolarizing: p outside [0,1]");
    CVec omega = vectorize(CMat::Identity(d, d)) / std::sqrt(double(d));
    CMat J = (1 - p) * omega * omega.adjoint() + p * CMat::Identity(d * d, d * d) / double(d * d);
    return QuantumChannel::from_jamiolkowski(J, d, d);
}

QuantumChannel random_channel(int din, int dout, int rank, Rng& rng) {
    CMat V = haar_isometry(dout * rank, din, rng);
    return QuantumChannel::from_stinespring(V, din, dout);
}

}  // namespace noetherlab
