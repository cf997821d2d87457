// Copyright 2026 The qdcsim Authors
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

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace qdc {

struct VerifyCheck {
    std::string name;
    double achieved{0.0};
    double threshold{0.0};
    bool at_least{true};   // pass iff achieved >= threshold; otherwise <=
    bool passed{false};
    std::string note;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_passed{true};
};

// Runs the scenario catalog (n = 7 defaults), the coupler settings for the
// other odd chain lengths, the control-sign resolution for the yy model, and
// the structural invariant suites. filter keeps only checks whose name
// starts with the given prefix; empty runs everything.
VerifyReport run_verification(const std::string& filter = "");

std::string verify_text(const VerifyReport& report);
nlohmann::json verify_json(const VerifyReport& report);

}  // namespace qdc
