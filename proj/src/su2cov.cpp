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

#include "noetherlab/su2cov.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace noetherlab {

std::size_t ladder_size(SpinJ a, SpinJ b) { return std::size_t(std::min(a.two_j, b.two_j) + 1); }

bool admissible_L(SpinJ a, SpinJ b, int two_L) { return triangle(a.two_j, b.two_j, two_L); }

CovariantMixture::CovariantMixture(SpinJ a, SpinJ b, std::vector<double> w) : j_in(a), j_out(b), p(std::move(w)) {
    if (p.size() != ladder_size(a, b)) throw std::invalid_argument("mixture: wrong number of weights");
    double s = 0;
    for (double x : p) {
        if (!(x >= -kTol.eq)) throw std::invalid_argument("mixture: negative weight");
        s += x;
    }
    if (std::abs(s - 1) > kTol.eq) throw std::invalid_argument("mixture: weights do not sum to 1");
}

CovariantMixture CovariantMixture::vertex(SpinJ a, SpinJ b, int two_L) {
    if (!admissible_L(a, b, two_L)) throw std::invalid_argument("L outside the admissible ladder");
    std::vector<double> w(ladder_size(a, b), 0.0);
    w[(two_L - std::abs(a.two_j - b.two_j)) / 2] = 1.0;
    return CovariantMixture(a, b, std::move(w));
}

double CovariantMixture::weight(int tL) const {
    if (!admissible_L(j_in, j_out, tL)) return 0.0;
    return p[(tL - two_L_min()) / 2];
}

CMat irrep_projector(SpinJ ja, SpinJ jb, int tL) {
    if (!admissible_L(ja, jb, tL)) throw std::invalid_argument("L outside the admissible ladder");
    const int dA = ja.dim(), dB = jb.dim();
    CMat P = CMat::Zero(dA * dB, dA * dB);
    for (int tk = tL; tk >= -tL; tk -= 2) {
        CVec v = CVec::Zero(dA * dB);
        for (int tm = jb.two_j; tm >= -jb.two_j; tm -= 2) {
            const int tn = tk - tm;
            if (std::abs(tn) > ja.two_j) continue;
            const double c = cg(jb.two_j, tm, ja.two_j, tn, tL, tk);
            const double phase = ((ja.two_j - tn) / 2) % 2 == 0 ? 1.0 : -1.0;
            v(spin_index(jb.two_j, tm) * dA + spin_index(ja.two_j, -tn)) += phase * c;
        }
        P.noalias() += v * v.adjoint();
    }
    return P;
}

CMat irrep_projector_casimir(SpinJ ja, SpinJ jb, int tL) {
    if (!admissible_L(ja, jb, tL)) throw std::invalid_argument("L outside the admissible ladder");
    const int dA = ja.dim(), dB = jb.dim();
    SpinOps sa = spin_operators(ja), sb = spin_operators(jb);
    CMat C = CMat::Zero(dA * dB, dA * dB);
    for (int k = 0; k < 3; ++k) {
        CMat G = kron(sb[k], CMat::Identity(dA, dA)) - kron(CMat::Identity(dB, dB), sa[k].conjugate());
        C += G * G;
    }
    const int n = dA * dB;
    CMat P = CMat::Identity(n, n);
    const double cL = 0.25 * tL * (tL + 2);
    for (int t = std::abs(ja.two_j - jb.two_j); t <= ja.two_j + jb.two_j; t += 2) {
        if (t == tL) continue;
        const double c = 0.25 * t * (t + 2);
        P = P * (C - c * CMat::Identity(n, n)) / (cL - c);
    }
    return P;
}

QuantumChannel extremal_channel(SpinJ ja, SpinJ jb, int tL) {
    if (!admissible_L(ja, jb, tL)) throw std::invalid_argument("L outside the admissible ladder");
    std::vector<CMat> ks;
    for (int tk = tL; tk >= -tL; tk -= 2) {
        CMat K = CMat::Zero(jb.dim(), ja.dim());
        for (int tn = ja.two_j; tn >= -ja.two_j; tn -= 2) {
            const int tm = tn - tk;
            if (std::abs(tm) > jb.two_j) continue;
            K(spin_index(jb.two_j, tm), spin_index(ja.two_j, tn)) = cg(jb.two_j, tm, tL, tk, ja.two_j, tn);
        }
        ks.push_back(std::move(K));
    }
    return QuantumChannel::from_kraus(std::move(ks));
}

QuantumChannel mixture_channel(const CovariantMixture& mix) {
    std::vector<QuantumChannel> chans;
    std::vector<double> w;
    for (std::size_t i = 0; i < mix.size(); ++i) {
        if (mix.p[i] == 1.0) return extremal_channel(mix.j_in, mix.j_out, mix.two_L(i));
        if (mix.p[i] <= 0) continue;
        chans.push_back(extremal_channel(mix.j_in, mix.j_out, mix.two_L(i)));
        w.push_back(mix.p[i]);
    }
    return noetherlab::mix(w, chans);
}

double f_extremal(SpinJ ja, SpinJ jb, int tL, int l) {
    if (!admissible_L(ja, jb, tL)) throw std::invalid_argument("L outside the admissible ladder");
    if (l < 1 || l > std::min(ja.two_j, jb.two_j)) throw std::invalid_argument("f_extremal: rank out of range");
    const int tl = 2 * l;
    const double red_ratio = std::sqrt(double(jb.dim()) / double(ja.dim()));
    const double den = cg(jb.two_j, jb.two_j, tl, 0, jb.two_j, jb.two_j);
    double s = 0;
    for (int tk = -tL; tk <= tL; tk += 2) {
        const int tn = jb.two_j + tk;
        if (std::abs(tn) > ja.two_j) continue;
        const double c = cg(jb.two_j, jb.two_j, tL, tk, ja.two_j, tn);
        s += cg(ja.two_j, tn, tl, 0, ja.two_j, tn) / den * c * c;
    }
    return red_ratio * s;
}

double f1_explicit(SpinJ ja, SpinJ jb, int tL) {
    if (!admissible_L(ja, jb, tL)) throw std::invalid_argument("L outside the admissible ladder");
    if (ja.two_j == 0 || jb.two_j == 0) throw std::invalid_argument("f1 requires nonzero spins");
    const double a = ja.casimir(), b = jb.casimir(), c = 0.25 * tL * (tL + 2);
    return (a + b - c) / (2 * b) * std::sqrt(b * ja.dim() / (a * jb.dim()));
}

Rational kappa_exact(SpinJ ja, SpinJ jb, int tL) {
    if (!admissible_L(ja, jb, tL)) throw std::invalid_argument("L outside the admissible ladder");
    if (ja.two_j == 0) throw std::invalid_argument("polarisation factor undefined for j_A = 0");
    const long A = long(ja.two_j) * (ja.two_j + 2);
    const long B = long(jb.two_j) * (jb.two_j + 2);
    const long C = long(tL) * (tL + 2);
    return Rational(A + B - C, 2 * A);
}

ScalingVector scaling_vector(const CovariantMixture& mix) {
    const int lmax = std::min(mix.j_in.two_j, mix.j_out.two_j);
    ScalingVector sv;
    sv.f.assign(lmax + 1, 0.0);
    sv.f[0] = 1.0;
    for (int l = 1; l <= lmax; ++l)
        for (std::size_t i = 0; i < mix.size(); ++i)
            if (mix.p[i] != 0) sv.f[l] += mix.p[i] * f_extremal(mix.j_in, mix.j_out, mix.two_L(i), l);
    return sv;
}

double scaling_factor_numeric(const QuantumChannel& E, SpinJ ja, SpinJ jb, int l) {
    if (E.d_in() != ja.dim() || E.d_out() != jb.dim()) throw std::invalid_argument("spin/dimension mismatch");
    ItoBasis ta = ito_basis(ja, ja), tb = ito_basis(jb, jb);
    const double f = hs_inner(tb.op(2 * l, 0), E.apply(ta.op(2 * l, 0)));
    return l == 0 ? f * std::sqrt(double(jb.dim()) / double(ja.dim())) : f;
}

double covariance_residual(const QuantumChannel& E, SpinJ ja, SpinJ jb) {
    if (E.d_in() != ja.dim() || E.d_out() != jb.dim()) throw std::invalid_argument("spin/dimension mismatch");
    const int dA = ja.dim(), dB = jb.dim();
    SpinOps sa = spin_operators(ja), sb = spin_operators(jb);
    const CMat& J = E.jamiolkowski();
    double r = 0;
    for (int k = 0; k < 3; ++k) {
        CMat G = kron(sb[k], CMat::Identity(dA, dA)) - kron(CMat::Identity(dB, dB), sa[k].conjugate());
        r = std::max(r, (J * G - G * J).cwiseAbs().maxCoeff());
    }
    return r;
}

CovariantMixture decompose(const QuantumChannel& E, SpinJ ja, SpinJ jb, const Tolerances& tol) {
    const double res = covariance_residual(E, ja, jb);
    if (res > tol.eq) {
        std::ostringstream os;
        os << "decompose: channel is not covariant, commutator residual " << res;
        throw std::invalid_argument(os.str());
    }
    const CMat& J = E.jamiolkowski();
    std::vector<double> p;
    CMat R = CMat::Zero(J.rows(), J.cols());
    for (int tL = std::abs(ja.two_j - jb.two_j); tL <= ja.two_j + jb.two_j; tL += 2) {
        CMat P = irrep_projector(ja, jb, tL);
        const double w = (P * J).trace().real();
        p.push_back(std::max(0.0, w));
        R += w * P / double(tL + 1);
    }
    const double rec = (R - J).cwiseAbs().maxCoeff();
    if (rec > tol.eq) {
        std::ostringstream os;
        os << "decompose: reconstruction residual " << rec;
        throw std::invalid_argument(os.str());
    }
    double s = 0;
    for (double x : p) s += x;
    for (double& x : p) x /= s;
    return CovariantMixture(ja, jb, std::move(p));
}

QuantumChannel twirl(const QuantumChannel& E, SpinJ ja, SpinJ jb) {
    if (E.d_in() != ja.dim() || E.d_out() != jb.dim()) throw std::invalid_argument("spin/dimension mismatch");
    const CMat& J = E.jamiolkowski();
    CMat T = CMat::Zero(J.rows(), J.cols());
    for (int tL = std::abs(ja.two_j - jb.two_j); tL <= ja.two_j + jb.two_j; tL += 2) {
        CMat P = irrep_projector(ja, jb, tL);
        T += (P * J).trace().real() * P / double(tL + 1);
    }
    return QuantumChannel::from_jamiolkowski(T, ja.dim(), jb.dim());
}

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1) os << "/" << boost::multiprecision::denominator(r);
    return os.str();
}

}  // namespace

KappaReport kappa_extrema(SpinJ ja, SpinJ jb) {
    KappaReport rep;
    bool first = true;
    Rational kmin, kmax;
    for (int tL = std::abs(ja.two_j - jb.two_j); tL <= ja.two_j + jb.two_j; tL += 2) {
        Rational k = kappa_exact(ja, jb, tL);
        if (first || k < kmin) {
            kmin = k;
            rep.two_L_minus = tL;
        }
        if (first || k > kmax) {
            kmax = k;
            rep.two_L_plus = tL;
        }
        first = false;
    }
    rep.kappa_minus = kmin.convert_to<double>();
    rep.kappa_plus = kmax.convert_to<double>();
    rep.kappa_minus_exact = rational_str(kmin);
    rep.kappa_plus_exact = rational_str(kmax);
    return rep;
}

double time_reversal_fidelity(SpinJ j) {
    if (j.two_j < 1) throw std::invalid_argument("time_reversal_fidelity: two_j must be >= 1");
    return double(1 + j.two_j) / double(1 + 2 * j.two_j);
}

double time_reversal_fidelity_direct(SpinJ j) {
    if (j.two_j < 1) throw std::invalid_argument("time_reversal_fidelity: two_j must be >= 1");
    QuantumChannel E = extremal_channel(j, j, 2 * j.two_j);
    CMat rho = CMat::Zero(j.dim(), j.dim());
    rho(0, 0) = 1.0;
    return E.apply(rho)(j.dim() - 1, j.dim() - 1).real();
}

Eigen::Vector3d polarisation(const CMat& rho, SpinJ j) {
    SpinOps s = spin_operators(j);
    return {(s.x * rho).trace().real(), (s.y * rho).trace().real(), (s.z * rho).trace().real()};
}

}  // namespace noetherlab
