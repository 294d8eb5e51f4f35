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

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace noetherlab {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using Rng = std::mt19937_64;

struct Tolerances {
    double herm = 1e-9;
    double trace = 1e-10;
    double psd = 1e-9;
    double norm = 1e-10;
    double eq = 1e-9;
};

inline constexpr Tolerances kTol{};

// Bipartite objects are ordered B before A: basis index b*dA + a.
enum class Keep { B, A };

// Row-major stacking: |X>> = sum_ij X_ij |i>|j>, so vec(AXB) = (A (x) B^T) vec(X).
CVec vectorize(const CMat& X);
CMat unvectorize(const CVec& v, Eigen::Index rows, Eigen::Index cols);

// |ab><cd| -> |ac><bd| for M of shape (dB*dB) x (dA*dA).
CMat reshuffle(const CMat& M, int dB, int dA);

CMat partial_trace(const CMat& M, int dB, int dA, Keep keep);

CMat kron(const CMat& A, const CMat& B);

bool is_hermitian(const CMat& M, double tol = kTol.herm);
void require_density_matrix(const CMat& rho, const Tolerances& tol = kTol);

double purity(const CMat& rho);
double fidelity(const CMat& rho, const CMat& sigma);

// exp(i t H) for Hermitian H.
CMat mat_exp_skew_hermitian(const CMat& H, double t);

CMat sqrtm_psd(const CMat& M);
double trace_norm(const CMat& M);
double operator_norm(const CMat& M);
double hs_inner(const CMat& X, const CMat& Y);  // Re tr(X^dag Y)

std::uint64_t splitmix64(std::uint64_t& state);
// Independent stream seed for chunk/stream index `stream`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

CVec haar_pure(int d, Rng& rng);
CMat projector(const CVec& psi);
CMat ginibre(int rows, int cols, Rng& rng);
CMat haar_unitary(int d, Rng& rng);
// Isometry of shape rows x cols (rows >= cols), Haar distributed.
CMat haar_isometry(int rows, int cols, Rng& rng);
CMat random_hermitian(int d, Rng& rng);
CMat random_density(int d, Rng& rng);
// Uniform point on the probability simplex with n entries.
std::vector<double> random_simplex(int n, Rng& rng);

}  // namespace noetherlab
