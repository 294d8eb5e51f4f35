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

#include "noetherlab/numkit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace noetherlab {

CVec vectorize(const CMat& X) {
    CVec v(X.size());
    for (Eigen::Index i = 0; i < X.rows(); ++i)
        for (Eigen::Index j = 0; j < X.cols(); ++j) v(i * X.cols() + j) = X(i, j);
    return v;
}

CMat unvectorize(const CVec& v, Eigen::Index rows, Eigen::Index cols) {
    if (v.size() != rows * cols) throw std::invalid_argument("unvectorize: length mismatch");
    CMat X(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) X(i, j) = v(i * cols + j);
    return X;
}

CMat reshuffle(const CMat& M, int dB, int dA) {
    if (M.rows() != dB * dB || M.cols() != dA * dA)
        throw std::invalid_argument("reshuffle: expected (dB^2)x(dA^2) input");
    CMat R(dB * dA, dB * dA);
    for (int a = 0; a < dB; ++a)
        for (int b = 0; b < dB; ++b)
            for (int c = 0; c < dA; ++c)
                for (int d = 0; d < dA; ++d) R(a * dA + c, b * dA + d) = M(a * dB + b, c * dA + d);
    return R;
}

CMat partial_trace(const CMat& M, int dB, int dA, Keep keep) {
    if (M.rows() != dB * dA || M.cols() != dB * dA)
        throw std::invalid_argument("partial_trace: expected (dB*dA) square input");
    if (keep == Keep::B) {
        CMat out = CMat::Zero(dB, dB);
        for (int b = 0; b < dB; ++b)
            for (int bp = 0; bp < dB; ++bp)
                for (int a = 0; a < dA; ++a) out(b, bp) += M(b * dA + a, bp * dA + a);
        return out;
    }
    CMat out = CMat::Zero(dA, dA);
    for (int a = 0; a < dA; ++a)
        for (int ap = 0; ap < dA; ++ap)
            for (int b = 0; b < dB; ++b) out(a, ap) += M(b * dA + a, b * dA + ap);
    return out;
}

CMat kron(const CMat& A, const CMat& B) {
    CMat K(A.rows() * B.rows(), A.cols() * B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    return K;
}

bool is_hermitian(const CMat& M, double tol) {
    return M.rows() == M.cols() && (M - M.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

void require_density_matrix(const CMat& rho, const Tolerances& tol) {
    if (rho.rows() != rho.cols()) throw std::invalid_argument("density matrix must be square");
    if (!rho.allFinite()) throw std::invalid_argument("density matrix has non-finite entries");
    if (!is_hermitian(rho, tol.herm)) throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(rho.trace() - cplx(1.0)) > tol.trace * rho.rows() + tol.trace)
        throw std::invalid_argument("density matrix trace differs from 1");
    Eigen::SelfAdjointEigenSolver<CMat> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol.psd)
        throw std::invalid_argument("density matrix has a negative eigenvalue");
}

double purity(const CMat& rho) { return (rho * rho).trace().real(); }

CMat sqrtm_psd(const CMat& M) {
    CMat H = 0.5 * (M + M.adjoint());
    Eigen::SelfAdjointEigenSolver<CMat> es(H);
    Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

double fidelity(const CMat& rho, const CMat& sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
        throw std::invalid_argument("fidelity: dimension mismatch");
    CMat s = sqrtm_psd(rho);
    CMat inner = s * sigma * s;
    double f = sqrtm_psd(inner).trace().real();
    return std::min(1.0, f * f);
}

CMat mat_exp_skew_hermitian(const CMat& H, double t) {
    if (!is_hermitian(H)) throw std::invalid_argument("mat_exp_skew_hermitian: H is not Hermitian");
    Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (H + H.adjoint()));
    CVec phases(H.rows());
    for (Eigen::Index i = 0; i < H.rows(); ++i) phases(i) = std::polar(1.0, t * es.eigenvalues()(i));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double trace_norm(const CMat& M) {
    Eigen::JacobiSVD<CMat> svd(M);
    return svd.singularValues().sum();
}

double operator_norm(const CMat& M) {
    Eigen::JacobiSVD<CMat> svd(M);
    return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

double hs_inner(const CMat& X, const CMat& Y) { return (X.adjoint() * Y).trace().real(); }

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    std::uint64_t t = a ^ (stream * 0xd1b54a32d192ed03ULL);
    return splitmix64(t);
}

namespace {

cplx complex_normal(Rng& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    double re = n(rng);
    double im = n(rng);
    return {re, im};
}

}  // namespace

CVec haar_pure(int d, Rng& rng) {
    if (d < 1) throw std::invalid_argument("haar_pure: d must be >= 1");
    CVec v(d);
    for (int i = 0; i < d; ++i) v(i) = complex_normal(rng);
    return v / v.norm();
}

CMat projector(const CVec& psi) { return psi * psi.adjoint(); }

CMat ginibre(int rows, int cols, Rng& rng) {
    CMat G(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) G(i, j) = complex_normal(rng);
    return G;
}

CMat haar_isometry(int rows, int cols, Rng& rng) {
    if (rows < cols) throw std::invalid_argument("haar_isometry: rows < cols");
    CMat G = ginibre(rows, cols, rng);
    Eigen::HouseholderQR<CMat> qr(G);
    CMat Q = qr.householderQ() * CMat::Identity(rows, cols);
    CMat R = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
    for (int j = 0; j < cols; ++j) {
        cplx r = R(j, j);
        double a = std::abs(r);
        Q.col(j) *= (a > 0 ? r / a : cplx(1.0));
    }
    return Q;
}

CMat haar_unitary(int d, Rng& rng) { return haar_isometry(d, d, rng); }

CMat random_hermitian(int d, Rng& rng) {
    CMat G = ginibre(d, d, rng);
    return 0.5 * (G + G.adjoint());
}

CMat random_density(int d, Rng& rng) {
    CMat G = ginibre(d, d, rng);
    CMat rho = G * G.adjoint();
    return rho / rho.trace().real();
}

std::vector<double> random_simplex(int n, Rng& rng) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> p(n);
    double s = 0;
    for (auto& x : p) s += (x = e(rng));
    for (auto& x : p) x /= s;
    return p;
}

}  // namespace noetherlab
