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

#include <sstream>

#include "noetherlab/io.hpp"
#include "noetherlab/su2cov.hpp"
#include "testing.hpp"

using namespace noetherlab;
using nltest::dist;

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

}  // namespace

TEST_CASE("grids") {
    CHECK(grid_divisions(0.02) == 50);
    CHECK(grid_divisions(1) == 1);
    CHECK(grid_divisions(0.25) == 4);
    CHECK_THROWS_AS(grid_divisions(0.3), std::invalid_argument);
    CHECK_THROWS_AS(grid_divisions(0), std::invalid_argument);
    CHECK_THROWS_AS(grid_divisions(1.5), std::invalid_argument);

    auto g = simplex_grid(3, 2);
    CHECK(g.size() == 6);
    CHECK(simplex_grid_size(3, 2) == 6);
    CHECK(simplex_grid_size(5, 20) == 10626);
    CHECK(g.front() == std::vector<int>{2, 0, 0});
    CHECK(g.back() == std::vector<int>{0, 0, 2});
    for (const auto& pt : g) CHECK(pt[0] + pt[1] + pt[2] == 2);
}

TEST_CASE("SU(2) sweeps") {
    auto v = su2_tradeoff(SpinJ(1), 1.0);
    REQUIRE(v.size() == 2);
    CHECK(v[0].param_names == std::vector<std::string>{"two_j", "p0", "p1"});
    CHECK(v[0].params == std::vector<double>{1, 1, 0});
    CHECK(v[1].params == std::vector<double>{1, 0, 1});
    CHECK(v[1].unitarity == doctest::Approx(1.0 / 9));
    CHECK(v[1].delta == doctest::Approx(4.0 / 9));

    auto curve = su2_tradeoff(SpinJ(1), 0.01);
    CHECK(curve.size() == 101);
    CHECK(all_ok(curve));
    for (const auto& r : curve) {
        const double s = r.sqrt_delta();
        CHECK(std::abs(r.unitarity - (1 - 4 * s * (1 - s))) < 1e-10);
    }

    auto cloud = su2_tradeoff(SpinJ(2), 0.05);
    CHECK(cloud.size() == 231);
    CHECK(all_ok(cloud));
    for (const auto& r : cloud) {
        REQUIRE(r.bound_lower);
        REQUIRE(r.bound_upper);
        CHECK(*r.bound_lower <= r.sqrt_delta() + 1e-9);
        CHECK(r.sqrt_delta() <= *r.bound_upper + 1e-9);
    }
    CHECK_THROWS_AS(su2_tradeoff(SpinJ(0), 0.5), std::invalid_argument);
}

TEST_CASE("U(1) sweeps") {
    auto corners = u1_tradeoff(EnergySpectrum({0, 1}), 1.0);
    REQUIRE(corners.size() == 4);
    for (const auto& r : corners) {
        CHECK_FALSE(r.bound_lower);
        REQUIRE(r.bound_upper);
        for (std::size_t i = 2; i < r.params.size(); ++i) CHECK((r.params[i] == 0.0 || r.params[i] == 1.0));
    }
    auto fine = u1_tradeoff(EnergySpectrum({0, 1}), 0.02);
    CHECK(fine.size() == 51 * 51);
    CHECK(all_ok(fine));
    auto three = u1_tradeoff(EnergySpectrum({0, 1, 3}), 0.5);
    CHECK(three.size() == 6 * 6 * 6);
    CHECK(all_ok(three));
    CHECK(three[0].param_names.size() == 3 + 9);
}

TEST_CASE("CSV and JSON output") {
    auto recs = u1_tradeoff(EnergySpectrum({0, 1}), 1.0);
    std::ostringstream os;
    write_csv(os, recs);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "E0,E1,P00,P01,P10,P11,delta,sqrt_delta,unitarity,one_minus_u,bound_lower,bound_upper,ok");
    int rows = 0;
    while (std::getline(is, line)) {
        auto cells = split(line);
        REQUIRE(cells.size() == 13);
        CHECK(cells[10].empty());
        CHECK(cells[12] == "true");
        ++rows;
    }
    CHECK(rows == 4);

    json j = records_to_json(recs, {{"command", "u1 tradeoff"}});
    CHECK(j["command"] == "u1 tradeoff");
    CHECK(j["records"].size() == 4);
    CHECK(j["records"][0]["bound_lower"].is_null());
    CHECK(j["all_ok"] == true);
    CHECK(j["columns"].size() == 13);

    CHECK(format_double(0.1) == "0.1");
    CHECK(std::stod(format_double(1.0 / 3)) == 1.0 / 3);
}

TEST_CASE("channel files round trip") {
    Rng rng(1);
    QuantumChannel E = random_channel(2, 3, 2, rng);
    for (Repr r : {Repr::Kraus, Repr::Liouville, Repr::Jamiolkowski}) {
        json j = json::parse(channel_to_json(E, r).dump());
        CHECK(j["repr"] == repr_name(r));
        QuantumChannel F = channel_from_json(j);
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k) {
                CMat X = nltest::basis_op(2, i, k);
                CHECK(dist(E.apply(X), F.apply(X)) < 1e-12);
            }
    }
    CHECK_THROWS_AS(channel_to_json(E, Repr::Stinespring), ChannelError);
    CHECK_THROWS_AS(channel_from_json(json::parse(R"({"d_in":2})")), ChannelError);
    CHECK_THROWS_AS(channel_from_json(json::parse(R"({"d_in":2,"d_out":2,"repr":"kraus","data":[]})")), ChannelError);
    CHECK_THROWS_AS(parse_repr("choi"), std::invalid_argument);

    const std::string dir = NOETHERLAB_TEST_DATA;
    QuantumChannel good = read_channel_file(dir + "/good_channel.json");
    CHECK(good.kraus().size() == 2);
    CHECK_THROWS_WITH_AS(read_channel_file(dir + "/corrupt_channel.json"), doctest::Contains("CP"), ChannelError);
}

TEST_CASE("U(1) channel specs") {
    U1Spec s = u1_spec_from_json(json::parse(R"({"levels":[0,1],"gamma":[[0,1],[1,0]],"phases":[[1,1,0.5]]})"));
    CHECK(s.spectrum.levels == std::vector<int>{0, 1});
    CHECK(s.gamma(0, 1) == 1.0);
    REQUIRE(s.phases.size() == 1);
    CHECK(s.phases[0].radians == 0.5);
    CHECK_THROWS_AS(u1_spec_from_json(json::parse(R"({"levels":[0,1]})")), std::invalid_argument);
    CHECK_THROWS_AS(u1_spec_from_json(json::parse(R"({"levels":[0,1],"gamma":[[1]]})")), std::invalid_argument);
}
