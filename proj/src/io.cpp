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

#include "noetherlab/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace noetherlab {

namespace {

json matrix_to_json(const CMat& M) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < M.cols(); ++k) row.push_back({M(i, k).real(), M(i, k).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

CMat matrix_from_json(const json& j, int rows, int cols) {
    if (!j.is_array() || int(j.size()) != rows) throw ChannelError("channel data: wrong number of rows");
    CMat M(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || int(j[i].size()) != cols) throw ChannelError("channel data: wrong number of columns");
        for (int k = 0; k < cols; ++k) {
            const json& z = j[i][k];
            if (!z.is_array() || z.size() != 2) throw ChannelError("channel data: entries must be [re, im]");
            M(i, k) = cplx(z[0].get<double>(), z[1].get<double>());
        }
    }
    return M;
}

}  // namespace

json channel_to_json(const QuantumChannel& E, Repr repr) {
    json j;
    j["d_in"] = E.d_in();
    j["d_out"] = E.d_out();
    j["repr"] = repr_name(repr);
    switch (repr) {
        case Repr::Kraus: {
            json ks = json::array();
            for (const auto& K : E.kraus()) ks.push_back(matrix_to_json(K));
            j["data"] = std::move(ks);
            break;
        }
        case Repr::Liouville: j["data"] = matrix_to_json(E.liouville()); break;
        case Repr::Jamiolkowski: j["data"] = matrix_to_json(E.jamiolkowski()); break;
        case Repr::Stinespring: throw ChannelError("stinespring is not a file representation");
    }
    return j;
}

QuantumChannel channel_from_json(const json& j) {
    if (!j.is_object() || !j.contains("d_in") || !j.contains("d_out") || !j.contains("repr") || !j.contains("data"))
        throw ChannelError("channel file needs d_in, d_out, repr and data");
    const int din = j.at("d_in").get<int>(), dout = j.at("d_out").get<int>();
    if (din < 1 || dout < 1) throw ChannelError("channel file: dimensions must be positive");
    const Repr r = parse_repr(j.at("repr").get<std::string>());
    const json& data = j.at("data");
    switch (r) {
        case Repr::Kraus: {
            if (!data.is_array() || data.empty()) throw ChannelError("channel file: empty Kraus list");
            std::vector<CMat> ks;
            for (const auto& k : data) ks.push_back(matrix_from_json(k, dout, din));
            return QuantumChannel::from_kraus(std::move(ks));
        }
        case Repr::Liouville:
            return QuantumChannel::from_liouville(matrix_from_json(data, dout * dout, din * din), din, dout);
        case Repr::Jamiolkowski:
            return QuantumChannel::from_jamiolkowski(matrix_from_json(data, dout * din, dout * din), din, dout);
        case Repr::Stinespring: break;
    }
    throw ChannelError("channel file: unsupported representation");
}

QuantumChannel read_channel_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ChannelError(std::string("channel file is not valid JSON: ") + e.what());
    }
    return channel_from_json(j);
}

void write_channel_file(const std::string& path, const QuantumChannel& E, Repr repr) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << channel_to_json(E, repr).dump(1) << "\n";
}

U1Spec u1_spec_from_json(const json& j) {
    if (!j.contains("levels") || !j.contains("gamma")) throw std::invalid_argument("U(1) spec needs levels and gamma");
    U1Spec s;
    s.spectrum = EnergySpectrum(j.at("levels").get<std::vector<int>>());
    const int d = s.spectrum.dim();
    const json& g = j.at("gamma");
    if (!g.is_array() || int(g.size()) != d) throw std::invalid_argument("gamma must be d x d");
    s.gamma.resize(d, d);
    for (int m = 0; m < d; ++m) {
        if (!g[m].is_array() || int(g[m].size()) != d) throw std::invalid_argument("gamma must be d x d");
        for (int n = 0; n < d; ++n) s.gamma(m, n) = g[m][n].get<double>();
    }
    if (j.contains("phases"))
        for (const auto& p : j.at("phases")) {
            if (!p.is_array() || p.size() != 3) throw std::invalid_argument("phases entries are [lambda, m, radians]");
            s.phases.push_back({p[0].get<int>(), p[1].get<int>(), p[2].get<double>()});
        }
    return s;
}

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::vector<std::string> csv_header(const std::vector<TradeoffRecord>& recs) {
    std::vector<std::string> h;
    if (!recs.empty()) h = recs.front().param_names;
    for (const char* c : {"delta", "sqrt_delta", "unitarity", "one_minus_u", "bound_lower", "bound_upper", "ok"})
        h.emplace_back(c);
    return h;
}

void write_csv(std::ostream& os, const std::vector<TradeoffRecord>& recs) {
    const auto h = csv_header(recs);
    for (std::size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i];
    os << "\n";
    for (const auto& r : recs) {
        for (double p : r.params) os << format_double(p) << ",";
        os << format_double(r.delta) << "," << format_double(r.sqrt_delta()) << "," << format_double(r.unitarity)
           << "," << format_double(r.one_minus_u()) << ","
           << (r.bound_lower ? format_double(*r.bound_lower) : "") << ","
           << (r.bound_upper ? format_double(*r.bound_upper) : "") << "," << (r.ok ? "true" : "false") << "\n";
    }
}

json record_to_json(const TradeoffRecord& r) {
    json j;
    json params = json::object();
    for (std::size_t i = 0; i < r.params.size(); ++i) params[r.param_names[i]] = r.params[i];
    j["params"] = std::move(params);
    j["delta"] = r.delta;
    j["sqrt_delta"] = r.sqrt_delta();
    j["unitarity"] = r.unitarity;
    j["one_minus_u"] = r.one_minus_u();
    j["bound_lower"] = r.bound_lower ? json(*r.bound_lower) : json(nullptr);
    j["bound_upper"] = r.bound_upper ? json(*r.bound_upper) : json(nullptr);
    j["ok"] = r.ok;
    return j;
}

json records_to_json(const std::vector<TradeoffRecord>& recs, json meta) {
    json out = std::move(meta);
    out["columns"] = csv_header(recs);
    json rows = json::array();
    for (const auto& r : recs) rows.push_back(record_to_json(r));
    out["records"] = std::move(rows);
    out["all_ok"] = all_ok(recs);
    return out;
}

}  // namespace noetherlab
