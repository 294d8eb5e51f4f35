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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "noetherlab/io.hpp"

namespace noetherlab {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    std::uint64_t samples = 20000;
    std::optional<std::string> fixture;  // extra channel file to validate
};

std::vector<CheckResult> verify_all(const VerifyOptions& opt);
json verify_report(const VerifyOptions& opt, const std::vector<CheckResult>& checks);

}  // namespace noetherlab
