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

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "noetherlab/numkit.hpp"

namespace noetherlab {

enum class Repr { Kraus, Liouville, Jamiolkowski, Stinespring };

std::string repr_name(Repr r);
Repr parse_repr(const std::string& s);

class ChannelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Validity {
    double min_eigenvalue = 0;  // of the Jamiolkowski state
    double tp_residual = 0;     // max |tr_B J - I/dA|
    bool cp = false;
    bool tp = false;
};

Validity check_jamiolkowski(const CMat& J, int d_in, int d_out, const Tolerances& tol = kTol);

// A CPTP map B(H_A) -> B(H_B). Immutable; derived representations are computed
// once on first use and shared between copies.
class QuantumChannel {
public:
    static QuantumChannel from_kraus(std::vector<CMat> kraus, const Tolerances& tol = kTol);
    static QuantumChannel from_liouville(const CMat& L, int d_in, int d_out, const Tolerances& tol = kTol);
    static QuantumChannel from_jamiolkowski(const CMat& J, int d_in, int d_out, const Tolerances& tol = kTol);
    // V has shape (d_out*d_env) x d_in, environment factor last.
    static QuantumChannel from_stinespring(const CMat& V, int d_in, int d_out, const Tolerances& tol = kTol);

    int d_in() const;
    int d_out() const;
    Repr representation() const;

    const std::vector<CMat>& kraus() const;
    const CMat& jamiolkowski() const;
    const CMat& liouville() const;
    const CMat& stinespring() const;
    int d_env() const;
    const Validity& validity() const;

    CMat apply(const CMat& rho) const;
    CMat apply_adjoint(const CMat& Y) const;

private:
    struct Impl;
    explicit QuantumChannel(std::shared_ptr<const Impl> p);
    std::shared_ptr<const Impl> impl_;
};

QuantumChannel to_kraus(const QuantumChannel& E);
QuantumChannel to_liouville(const QuantumChannel& E);
QuantumChannel to_jamiolkowski(const QuantumChannel& E);
QuantumChannel to_stinespring(const QuantumChannel& E);

CMat apply(const QuantumChannel& E, const CMat& rho);
CMat adjoint(const QuantumChannel& E, const CMat& Y);
// Map to the environment of the Stinespring isometry used by E.stinespring().
QuantumChannel complementary(const QuantumChannel& E);
QuantumChannel compose(const QuantumChannel& E2, const QuantumChannel& E1);
// Convex combination sum_i w_i E_i of channels with equal dimensions.
QuantumChannel mix(const std::vector<double>& w, const std::vector<QuantumChannel>& chans);

QuantumChannel identity_channel(int d);
QuantumChannel unitary_channel(const CMat& U);
QuantumChannel depolarizing_channel(int d, double p = 1.0);
QuantumChannel random_channel(int d_in, int d_out, int kraus_rank, Rng& rng);

}  // namespace noetherlab
