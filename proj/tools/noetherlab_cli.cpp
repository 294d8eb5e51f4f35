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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "noetherlab/io.hpp"
#include "noetherlab/verify.hpp"

using namespace noetherlab;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exit codes
constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

void emit(const std::string& path, const std::function<void(std::ostream&)>& body) {
    if (path.empty() || path == "-") {
        body(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    body(out);
}

int write_records(const std::vector<TradeoffRecord>& recs, const std::string& out, const std::string& format,
                  json meta) {
    emit(out, [&](std::ostream& os) {
        if (format == "json")
            os << records_to_json(recs, std::move(meta)).dump(1) << "\n";
        else
            write_csv(os, recs);
    });
    std::size_t bad = 0;
    for (const auto& r : recs) bad += !r.ok;
    std::cerr << recs.size() << " records, " << bad << " bound violations\n";
    return bad == 0 ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"noetherlab: symmetry-covariant channels, unitarity and conservation-law deviation"};
    app.require_subcommand(1);

    // su2
    auto* su2 = app.add_subcommand("su2", "SU(2)-covariant channels");
    su2->require_subcommand(1);

    int two_j = 0;
    double grid = 0;
    std::string out, format = "csv";
    std::uint64_t seed = 0;
    auto* su2_trade = su2->add_subcommand("tradeoff", "sweep the p_L simplex and check the trade-off bounds");
    su2_trade->add_option("--two-j", two_j, "twice the spin")->required()->check(CLI::PositiveNumber);
    su2_trade->add_option("--grid", grid, "simplex grid step, must divide 1")->required();
    su2_trade->add_option("--out", out, "output path (default stdout)");
    su2_trade->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    su2_trade->add_option("--seed", seed, "recorded in the output; the sweep itself is deterministic");

    int two_ja = 0, two_jb = 0, two_L = 0;
    auto* su2_kappa = su2->add_subcommand("kappa", "optimal polarisation inversion and amplification factors");
    su2_kappa->add_option("--two-jA", two_ja, "twice the input spin")->required()->check(CLI::NonNegativeNumber);
    su2_kappa->add_option("--two-jB", two_jb, "twice the output spin")->required()->check(CLI::NonNegativeNumber);

    // u1
    auto* u1 = app.add_subcommand("u1", "U(1)-covariant channels");
    u1->require_subcommand(1);
    std::vector<int> levels;
    auto* u1_trade = u1->add_subcommand("tradeoff", "sweep population grids with optimal-unitarity blocks");
    u1_trade->add_option("--levels", levels, "strictly increasing integer energies")->required()->delimiter(',');
    u1_trade->add_option("--grid", grid, "population grid step, must divide 1")->required();
    u1_trade->add_option("--out", out, "output path (default stdout)");
    u1_trade->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    std::string spec_path, repr = "kraus", channel_out;
    auto* u1_chan = u1->add_subcommand("channel", "build an extremal channel from a JSON spec and report it");
    u1_chan->add_option("--spec", spec_path, "JSON {levels, gamma, phases}")->required()->check(CLI::ExistingFile);
    u1_chan->add_option("--export", channel_out, "write the channel file here");
    u1_chan->add_option("--repr", repr, "representation for --export")
        ->check(CLI::IsMember({"kraus", "liouville", "jamiolkowski"}));

    // verify
    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    verify->require_subcommand(1);
    std::uint64_t samples = 20000;
    std::string fixture;
    seed = 42;
    auto* verify_all_cmd = verify->add_subcommand("all", "every invariant and bound check");
    verify_all_cmd->add_option("--seed", seed, "64-bit seed");
    verify_all_cmd->add_option("--samples", samples, "Monte Carlo samples per estimate")->check(CLI::Range(100, 100000000));
    verify_all_cmd->add_option("--fixture", fixture, "extra channel file to validate")->check(CLI::ExistingFile);
    verify_all_cmd->add_option("--out", out, "report path (default stdout)");

    // channel
    auto* chan = app.add_subcommand("channel", "channel files");
    chan->require_subcommand(1);
    auto* chan_ext = chan->add_subcommand("extremal", "export the extremal SU(2)-covariant channel E^L");
    chan_ext->add_option("--two-jA", two_ja, "twice the input spin")->required()->check(CLI::NonNegativeNumber);
    chan_ext->add_option("--two-jB", two_jb, "twice the output spin")->required()->check(CLI::NonNegativeNumber);
    chan_ext->add_option("--two-L", two_L, "twice the irrep label")->required()->check(CLI::NonNegativeNumber);
    chan_ext->add_option("--repr", repr, "kraus, liouville or jamiolkowski")
        ->check(CLI::IsMember({"kraus", "liouville", "jamiolkowski"}));
    chan_ext->add_option("--out", out, "output path (default stdout)");
    std::string in_path;
    auto* chan_info = chan->add_subcommand("info", "validate a channel file and report its unitarity");
    chan_info->add_option("--in", in_path, "channel file")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*su2_trade) {
            std::cerr << "seed=" << seed << "\n";
            auto recs = su2_tradeoff(SpinJ(two_j), grid);
            return write_records(recs, out, format,
                                 {{"command", "su2 tradeoff"}, {"two_j", two_j}, {"grid", grid}, {"seed", seed}});
        }
        if (*su2_kappa) {
            if (two_ja == 0) throw UsageError("polarisation factors need two_jA >= 1");
            KappaReport k = kappa_extrema(SpinJ(two_ja), SpinJ(two_jb));
            json j = {{"two_jA", two_ja},
                      {"two_jB", two_jb},
                      {"kappa_minus", k.kappa_minus},
                      {"kappa_minus_exact", k.kappa_minus_exact},
                      {"two_L_minus", k.two_L_minus},
                      {"kappa_plus", k.kappa_plus},
                      {"kappa_plus_exact", k.kappa_plus_exact},
                      {"two_L_plus", k.two_L_plus}};
            std::cout << j.dump(1) << "\n";
            return kOk;
        }
        if (*u1_trade) {
            EnergySpectrum s(levels);
            auto recs = u1_tradeoff(s, grid);
            return write_records(recs, out, format, {{"command", "u1 tradeoff"}, {"levels", levels}, {"grid", grid}});
        }
        if (*u1_chan) {
            std::ifstream in(spec_path);
            json js;
            in >> js;
            U1Spec spec = u1_spec_from_json(js);
            U1BlockChannel ch = build_extremal(spec.spectrum, spec.gamma, spec.phases);
            QuantumChannel E = ch.channel();
            U1Stats st = u1_structure_stats(ch);
            BoundCheck b = u1_bound(ch);
            json q = json::object();
            for (auto [lam, v] : st.q) q[std::to_string(lam)] = v;
            json rep = {{"levels", spec.spectrum.levels},
                        {"unitarity", unitarity_jamiolkowski(E)},
                        {"delta", deviation_avg(E, energy_generators(spec.spectrum)).delta},
                        {"bound_upper", b.rhs},
                        {"ok", b.satisfied},
                        {"q", q},
                        {"g", st.g},
                        {"width", st.width},
                        {"b", st.b}};
            std::cout << rep.dump(1) << "\n";
            if (!channel_out.empty()) write_channel_file(channel_out, E, parse_repr(repr));
            return b.satisfied ? kOk : kFail;
        }
        if (*verify_all_cmd) {
            VerifyOptions opt;
            opt.seed = seed;
            opt.samples = samples;
            if (!fixture.empty()) opt.fixture = fixture;
            auto checks = verify_all(opt);
            json rep = verify_report(opt, checks);
            emit(out, [&](std::ostream& os) { os << rep.dump(1) << "\n"; });
            for (const auto& c : checks)
                if (!c.pass) std::cerr << "FAILED " << c.name << ": " << c.detail << "\n";
            return rep["passed"].get<bool>() ? kOk : kFail;
        }
        if (*chan_ext) {
            if (!admissible_L(SpinJ(two_ja), SpinJ(two_jb), two_L)) throw UsageError("L outside the admissible ladder");
            QuantumChannel E = extremal_channel(SpinJ(two_ja), SpinJ(two_jb), two_L);
            emit(out, [&](std::ostream& os) { os << channel_to_json(E, parse_repr(repr)).dump(1) << "\n"; });
            return kOk;
        }
        if (*chan_info) {
            QuantumChannel E = read_channel_file(in_path);
            json rep = {{"d_in", E.d_in()},
                        {"d_out", E.d_out()},
                        {"kraus_rank", E.kraus().size()},
                        {"min_eigenvalue", E.validity().min_eigenvalue},
                        {"tp_residual", E.validity().tp_residual}};
            if (E.d_in() >= 2) {
                rep["unitarity"] = unitarity_jamiolkowski(E);
                rep["unitarity_complementary"] = unitarity_complementary(E);
                rep["upper_bound_applicable"] = upper_bound_applicable(E);
            }
            std::cout << rep.dump(1) << "\n";
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ChannelError& e) {
        std::cerr << "error: invalid channel: " << e.what() << "\n";
        return kFail;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
