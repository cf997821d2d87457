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

#include "qdc/devices.hpp"

namespace qdc {

// JSON config schema, selected by "device":
//   chain:        n_cols, [n_rows=1], [omega=1], [epsilon=0]
//   grid:         n_cols, K, [n_rows=2], [omega=1], [epsilon=0]
//   coupler:      n_cols, g, kappa, [n_rows=2], [omega=1], [epsilon=0]
//   am-separable: two_j_v, two_j_h, [K=0], [omega=1], [eps_h=0], [eps_v=0]
//   am-yy:        [two_j_v=1], [two_j_h=2], [K=0], [omega=1], [eps_h=0], [eps_v=0]
// Unknown keys are rejected with std::invalid_argument.
ModelConfig parse_config(const nlohmann::json& doc);

ModelConfig load_config_file(const std::string& path);

// Canonical JSON with every default resolved; parse_config(config_json(c))
// rebuilds bit-identical Hamiltonian matrices.
nlohmann::json config_json(const ModelConfig& config);

}  // namespace qdc
