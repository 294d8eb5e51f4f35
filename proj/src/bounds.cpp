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

#include "noetherlab/bounds.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace noetherlab {

BoundCheck make_check(std::string name, double lhs, double rhs, double tol) {
    BoundCheck b;
    b.name = std::move(name);
    b.lhs = lhs;
    b.rhs = rhs;
    b.slack = rhs - lhs;
    b.satisfied = lhs <= rhs + tol;
    return b;
}

double lie_covariance_residual(const QuantumChannel& E, const GeneratorSet& gens) {
    if (gens.d_in() != E.d_in() || gens.d_out() != E.d_out())
        throw std::invalid_argument("generator dimensions do not match the channel");
    const CMat& L = E.liouville();
    const int dA = E.d_in(), dB = E.d_out();
    double r = 0;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        CMat GA = kron(gens.in[k], CMat::Identity(dA, dA)) - kron(CMat::Identity(dA, dA), gens.in[k].conjugate());
        CMat GB = kron(gens.out[k], CMat::Identity(dB, dB)) - kron(CMat::Identity(dB, dB), gens.out[k].conjugate());
        r = std::max(r, (L * GA - GB * L).cwiseAbs().maxCoeff());
    }
    return r;
}

BoundCheck upper_bound_general(const QuantumChannel& E, const GeneratorSet& gens) {
    const double res = lie_covariance_residual(E, gens);
    if (res > 1e-8) {
        std::ostringstream os;
        os << "upper_bound_general: channel is not covariant, residual " << res;
        throw std::invalid_argument(os.str());
    }
    const int dA = E.d_in();
    double c = 0;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const double t = trace_norm(gens.out[k]) + trace_norm(gens.in[k]);
        c = std::max(c, t * t);
    }
    const double u = unitarity_jamiolkowski(E);
    const double delta = deviation_avg(E, gens).delta;
    BoundCheck b = make_check("upper_general", delta, 2.0 * gens.size() * dA * (dA - 1) * c * (1 - u));
    b.applicable = upper_bound_applicable(E);
    return b;
}

BoundCheck lower_bound_multiplicity_free(const QuantumChannel& E, const GeneratorSet& gens,
                                         const std::vector<double>& f_table) {
    if (E.d_in() != E.d_out()) throw std::invalid_argument("lower bound needs equal input and output dimensions");
    if (f_table.empty()) throw std::invalid_argument("lower bound needs a nonempty f table");
    double K = std::numeric_limits<double>::infinity();
    for (double f : f_table) K = std::min(K, std::abs(1 - f));
    const double d = E.d_in();
    const double u = unitarity_jamiolkowski(E);
    const double delta = deviation_avg(E, gens).delta;
    const double lhs = K * gens.norm_in() * (1 - u) * (d - 1) * std::sqrt(d + 1) / (2 * std::pow(d, 2.5));
    return make_check("lower_multiplicity_free", lhs, std::sqrt(std::max(0.0, delta)));
}

std::vector<double> su2_f_table(SpinJ j) {
    std::vector<double> f;
    for (int tL = 2; tL <= 2 * j.two_j; tL += 2) f.push_back(f1_explicit(j, j, tL));
    return f;
}

double su2_lower_coefficient(SpinJ j) {
    const double jj = j.value();
    return std::sqrt(2.0) * std::sqrt(jj) / ((2 * jj + 1) * (2 * jj + 1));
}

double su2_upper_coefficient(SpinJ j) {
    const double jj = j.value();
    return 3 * std::sqrt(2.0) * std::pow(jj, 1.5) / (2 * jj + 1);
}

Su2Bounds su2_bounds(const CovariantMixture& mix) {
    if (!(mix.j_in == mix.j_out)) throw std::invalid_argument("su2_bounds: spins must be equal");
    const double omu = 1 - unitarity_su2_closed(mix);
    const double sd = std::sqrt(deviation_su2_closed(mix));
    return {make_check("su2_lower", su2_lower_coefficient(mix.j_in) * omu, sd),
            make_check("su2_upper", sd, su2_upper_coefficient(mix.j_in) * omu)};
}

double u1_bound_value(const EnergySpectrum& s, double delta) {
    const double d = s.dim();
    const double g = gap_multiplicity(s);
    const double c = g * (d - g) / (d - 1) * std::sqrt(2.0 / (d * (d + 1)));
    return 1 - c * std::sqrt(std::max(0.0, delta)) / s.width();
}

BoundCheck u1_bound(const U1BlockChannel& ch) {
    QuantumChannel E = ch.channel();
    const double u = unitarity_jamiolkowski(E);
    const double delta = deviation_avg(E, energy_generators(ch.spectrum)).delta;
    return make_check("u1", u, u1_bound_value(ch.spectrum, delta));
}

double deviation_u1_population(const EnergySpectrum& s, const PopulationMatrix& P) {
    const int d = s.dim();
    double tr = 0, tr2 = 0;
    for (int m = 0; m < d; ++m) {
        double x = 0;
        for (int n = 0; n < d; ++n) x += P(n, m) * double(s.levels[n] - s.levels[m]);
        tr += x;
        tr2 += x * x;
    }
    return (tr * tr + tr2) / (d * (d + 1.0));
}

BoundCheck u1_bound_population(const EnergySpectrum& s, const PopulationMatrix& P) {
    const double u = optimal_unitarity_for_population(s, P);
    return make_check("u1", u, u1_bound_value(s, deviation_u1_population(s, P)));
}

BoundCheck diamond_bound_given_value(const QuantumChannel& E, const GeneratorSet& gens, double diamond_distance) {
    if (!(diamond_distance >= 0)) throw std::invalid_argument("diamond distance must be nonnegative");
    double s = 0;
    for (const auto& G : gens.out) s += operator_norm(G) * operator_norm(G);
    const double delta = deviation_avg(E, gens).delta;
    return make_check("diamond", delta, diamond_distance * diamond_distance * s);
}

}  // namespace noetherlab
