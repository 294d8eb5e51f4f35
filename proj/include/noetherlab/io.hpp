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

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "noetherlab/sweep.hpp"

namespace noetherlab {

using json = nlohmann::json;

// {"d_in", "d_out", "repr", "data"}; complex entries as [re, im].
json channel_to_json(const QuantumChannel& E, Repr repr);
QuantumChannel channel_from_json(const json& j);
QuantumChannel read_channel_file(const std::string& path);
void write_channel_file(const std::string& path, const QuantumChannel& E, Repr repr);

struct U1Spec {
    EnergySpectrum spectrum;
    PopulationMatrix gamma;
    std::vector<PhaseEntry> phases;
};

// {"levels": [ints], "gamma": [[...]], "phases": [[lambda, m, radians], ...]}
U1Spec u1_spec_from_json(const json& j);

// Shortest text that round-trips to the same double.
std::string format_double(double x);

std::vector<std::string> csv_header(const std::vector<TradeoffRecord>& recs);
void write_csv(std::ostream& os, const std::vector<TradeoffRecord>& recs);
json record_to_json(const TradeoffRecord& r);
json records_to_json(const std::vector<TradeoffRecord>& recs, json meta);

}  // namespace noetherlab
