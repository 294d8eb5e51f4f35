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

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "noetherlab/numkit.hpp"

namespace noetherlab {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Spin labels are stored as twice their value.
struct SpinJ {
    int two_j = 0;

    constexpr SpinJ() = default;
    constexpr explicit SpinJ(int tj) : two_j(tj) {}
    constexpr int dim() const { return two_j + 1; }
    constexpr double value() const { return 0.5 * two_j; }
    // j(j+1)
    constexpr double casimir() const { return 0.25 * two_j * (two_j + 2); }
    friend constexpr bool operator==(SpinJ a, SpinJ b) { return a.two_j == b.two_j; }
};

// Basis index of |j,m> with m = j, j-1, ..., -j.
constexpr int spin_index(int two_j, int two_m) { return (two_j - two_m) / 2; }
constexpr int spin_two_m(int two_j, int index) { return two_j - 2 * index; }

struct SignedSqrtRational {
    int sign = 0;
    Rational radicand = 0;

    double value() const;
    std::string str() const;
    SignedSqrtRational operator*(const SignedSqrtRational& o) const;
    friend bool operator==(const SignedSqrtRational&, const SignedSqrtRational&) = default;
};

// <j1 m1; j2 m2 | J M>, all arguments twice their value. Condon-Shortley phases.
SignedSqrtRational clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2, int two_J, int two_M);
double cg(int two_j1, int two_m1, int two_j2, int two_m2, int two_J, int two_M);

// True iff j1 (x) j2 contains J.
bool triangle(int two_j1, int two_j2, int two_J);

struct SpinOps {
    CMat x, y, z;
    const CMat& operator[](int k) const { return k == 0 ? x : (k == 1 ? y : z); }
};

SpinOps spin_operators(SpinJ j);
// sqrt(j(j+1)(2j+1)), the Hilbert-Schmidt length of (Jx, Jy, Jz).
double spin_length(SpinJ j);
// Representation matrix exp(i (n . J) angle).
CMat rotation(SpinJ j, double nx, double ny, double nz, double angle);
// exp(-i alpha Jz) exp(-i beta Jy) exp(-i gamma Jz)
CMat euler_rotation(SpinJ j, double alpha, double beta, double gamma);

// Orthonormal irreducible tensor operators mapping spin_in to spin_out.
// op(two_l, two_q) has rank l and component q, l = |j_in - j_out| .. j_in + j_out.
// For spin_in == spin_out components are phased so that T^l_{-q} = (T^l_q)^dag.
struct ItoBasis {
    SpinJ spin_in, spin_out;
    std::vector<int> two_ls;
    std::vector<std::vector<CMat>> ops;  // ops[i][c], c = (two_l - two_q)/2

    const CMat& op(int two_l, int two_q) const;
    std::size_t size() const;
};

ItoBasis ito_basis(SpinJ spin_in, SpinJ spin_out);

// U(theta, phi)|j, j>: rotation of the highest-weight state towards (theta, phi).
CVec coherent_state(SpinJ j, double theta, double phi);

}  // namespace noetherlab
