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

#include "noetherlab/su2rep.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace noetherlab {

namespace {

std::mutex g_fact_mutex;
std::vector<BigInt> g_fact{BigInt(1)};

BigInt factorial(int n) {
    if (n < 0) throw std::logic_error("factorial of negative argument");
    std::lock_guard<std::mutex> lock(g_fact_mutex);
    while (static_cast<int>(g_fact.size()) <= n) g_fact.push_back(g_fact.back() * BigInt(g_fact.size()));
    return g_fact[n];
}

using CgKey = std::array<int, 6>;
std::mutex g_cg_mutex;
std::map<CgKey, SignedSqrtRational> g_cg_cache;
std::map<CgKey, double> g_cg_double;

bool same_parity(int a, int b) { return ((a - b) % 2) == 0; }

SignedSqrtRational racah(int tj1, int tm1, int tj2, int tm2, int tJ, int tM) {
    // Half-sums as plain integers.
    const int j1pj2mJ = (tj1 + tj2 - tJ) / 2;
    const int Jpj1mj2 = (tJ + tj1 - tj2) / 2;
    const int Jmj1pj2 = (tJ - tj1 + tj2) / 2;
    const int j1pj2pJ1 = (tj1 + tj2 + tJ) / 2 + 1;
    const int JpM = (tJ + tM) / 2, JmM = (tJ - tM) / 2;
    const int j1mm1 = (tj1 - tm1) / 2, j1pm1 = (tj1 + tm1) / 2;
    const int j2mm2 = (tj2 - tm2) / 2, j2pm2 = (tj2 + tm2) / 2;

    Rational A = Rational(BigInt(tJ + 1) * factorial(Jpj1mj2) * factorial(Jmj1pj2) * factorial(j1pj2mJ),
                          factorial(j1pj2pJ1));
    A *= Rational(factorial(JpM) * factorial(JmM) * factorial(j1mm1) * factorial(j1pm1) * factorial(j2mm2) *
                  factorial(j2pm2));

    const int Jmj2pm1 = (tJ - tj2 + tm1) / 2;
    const int Jmj1mm2 = (tJ - tj1 - tm2) / 2;
    const int kmin = std::max({0, -Jmj2pm1, -Jmj1mm2});
    const int kmax = std::min({j1pj2mJ, j1mm1, j2pm2});
    Rational S = 0;
    for (int k = kmin; k <= kmax; ++k) {
        BigInt den = factorial(k) * factorial(j1pj2mJ - k) * factorial(j1mm1 - k) * factorial(j2pm2 - k) *
                     factorial(Jmj2pm1 + k) * factorial(Jmj1mm2 + k);
        Rational term(BigInt(1), den);
        S += (k % 2 == 0) ? term : Rational(-term);
    }
    SignedSqrtRational out;
    if (S == 0) return out;
    out.sign = S > 0 ? 1 : -1;
    out.radicand = S * S * A;
    return out;
}

}  // namespace

double SignedSqrtRational::value() const {
    if (sign == 0) return 0.0;
    return sign * std::sqrt(radicand.convert_to<double>());
}

std::string SignedSqrtRational::str() const {
    if (sign == 0) return "0";
    std::ostringstream os;
    os << (sign < 0 ? "-" : "") << "sqrt(" << radicand << ")";
    return os.str();
}

SignedSqrtRational SignedSqrtRational::operator*(const SignedSqrtRational& o) const {
    SignedSqrtRational r;
    r.sign = sign * o.sign;
    r.radicand = r.sign == 0 ? Rational(0) : radicand * o.radicand;
    return r;
}

bool triangle(int tj1, int tj2, int tJ) {
    return tJ >= std::abs(tj1 - tj2) && tJ <= tj1 + tj2 && same_parity(tj1 + tj2, tJ);
}

SignedSqrtRational clebsch_gordan(int tj1, int tm1, int tj2, int tm2, int tJ, int tM) {
    if (tj1 < 0 || tj2 < 0 || tJ < 0) throw std::invalid_argument("clebsch_gordan: negative spin");
    if (!same_parity(tj1, tm1) || !same_parity(tj2, tm2) || !same_parity(tJ, tM))
        throw std::invalid_argument("clebsch_gordan: j and m differ by a non-integer");
    if (!same_parity(tj1 + tj2, tJ))
        throw std::invalid_argument("clebsch_gordan: j1 + j2 - J is not an integer");
    if (tM != tm1 + tm2 || std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tM) > tJ ||
        !triangle(tj1, tj2, tJ))
        return {};
    CgKey key{tj1, tm1, tj2, tm2, tJ, tM};
    {
        std::lock_guard<std::mutex> lock(g_cg_mutex);
        auto it = g_cg_cache.find(key);
        if (it != g_cg_cache.end()) return it->second;
    }
    SignedSqrtRational v = racah(tj1, tm1, tj2, tm2, tJ, tM);
    std::lock_guard<std::mutex> lock(g_cg_mutex);
    g_cg_cache.emplace(key, v);
    return v;
}

double cg(int tj1, int tm1, int tj2, int tm2, int tJ, int tM) {
    if (tM != tm1 + tm2 || std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tM) > tJ ||
        !triangle(tj1, tj2, tJ)) {
        if (!same_parity(tj1, tm1) || !same_parity(tj2, tm2) || !same_parity(tJ, tM))
            throw std::invalid_argument("clebsch_gordan: j and m differ by a non-integer");
        return 0.0;
    }
    CgKey key{tj1, tm1, tj2, tm2, tJ, tM};
    {
        std::lock_guard<std::mutex> lock(g_cg_mutex);
        auto it = g_cg_double.find(key);
        if (it != g_cg_double.end()) return it->second;
    }
    double v = clebsch_gordan(tj1, tm1, tj2, tm2, tJ, tM).value();
    std::lock_guard<std::mutex> lock(g_cg_mutex);
    g_cg_double.emplace(key, v);
    return v;
}

SpinOps spin_operators(SpinJ j) {
    const int d = j.dim();
    const double jj = j.value();
    CMat jp = CMat::Zero(d, d);
    CMat jz = CMat::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        const double m = jj - i;
        jz(i, i) = m;
        if (i > 0) jp(i - 1, i) = std::sqrt(jj * (jj + 1) - m * (m + 1));
    }
    CMat jm = jp.adjoint();
    SpinOps s;
    s.x = 0.5 * (jp + jm);
    s.y = cplx(0, -0.5) * (jp - jm);
    s.z = jz;
    return s;
}

double spin_length(SpinJ j) { return std::sqrt(j.casimir() * j.dim()); }

CMat rotation(SpinJ j, double nx, double ny, double nz, double angle) {
    SpinOps s = spin_operators(j);
    return mat_exp_skew_hermitian(nx * s.x + ny * s.y + nz * s.z, angle);
}

CMat euler_rotation(SpinJ j, double alpha, double beta, double gamma) {
    SpinOps s = spin_operators(j);
    return mat_exp_skew_hermitian(s.z, -alpha) * mat_exp_skew_hermitian(s.y, -beta) *
           mat_exp_skew_hermitian(s.z, -gamma);
}

const CMat& ItoBasis::op(int two_l, int two_q) const {
    for (std::size_t i = 0; i < two_ls.size(); ++i) {
        if (two_ls[i] != two_l) continue;
        if (std::abs(two_q) > two_l || !same_parity(two_l, two_q))
            throw std::out_of_range("ItoBasis::op: component out of range");
        return ops[i][(two_l - two_q) / 2];
    }
    throw std::out_of_range("ItoBasis::op: rank not present");
}

std::size_t ItoBasis::size() const {
    std::size_t n = 0;
    for (const auto& v : ops) n += v.size();
    return n;
}

ItoBasis ito_basis(SpinJ spin_in, SpinJ spin_out) {
    ItoBasis b;
    b.spin_in = spin_in;
    b.spin_out = spin_out;
    const int ti = spin_in.two_j, to = spin_out.two_j;
    for (int tl = std::abs(ti - to); tl <= ti + to; tl += 2) {
        const double red = std::sqrt(double(tl + 1) / double(to + 1));
        std::vector<CMat> comps;
        for (int tq = tl; tq >= -tl; tq -= 2) {
            CMat T = CMat::Zero(spin_out.dim(), spin_in.dim());
            for (int tm = ti; tm >= -ti; tm -= 2) {
                const int tmp = tm + tq;
                if (std::abs(tmp) > to) continue;
                T(spin_index(to, tmp), spin_index(ti, tm)) = cg(ti, tm, tl, tq, to, tmp) * red;
            }
            comps.push_back(std::move(T));
        }
        if (ti == to) {
            const int n = static_cast<int>(comps.size());
            for (int c = 0; 2 * c < tl; ++c) comps[c] = comps[n - 1 - c].adjoint();
        }
        b.two_ls.push_back(tl);
        b.ops.push_back(std::move(comps));
    }
    return b;
}

CVec coherent_state(SpinJ j, double theta, double phi) {
    SpinOps s = spin_operators(j);
    CVec hw = CVec::Zero(j.dim());
    hw(0) = 1.0;
    return mat_exp_skew_hermitian(s.z, -phi) * (mat_exp_skew_hermitian(s.y, -theta) * hw);
}

}  // namespace noetherlab
