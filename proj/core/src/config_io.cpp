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

#include "qdc/config_io.hpp"

#include <fstream>
#include <set>
#include <stdexcept>
#include <string>

namespace qdc {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& doc, const std::set<std::string>& allowed) {
    for (const auto& item : doc.items()) {
        if (allowed.find(item.key()) == allowed.end()) {
            throw std::invalid_argument("config: unknown key \"" + item.key() + "\"");
        }
    }
}

double get_real(const json& doc, const char* key, double fallback) {
    if (!doc.contains(key)) {
        return fallback;
    }
    if (!doc[key].is_number()) {
        throw std::invalid_argument(std::string("config: \"") + key + "\" must be a number");
    }
    return doc[key].get<double>();
}

double require_real(const json& doc, const char* key) {
    if (!doc.contains(key)) {
        throw std::invalid_argument(std::string("config: missing required key \"") + key + "\"");
    }
    return get_real(doc, key, 0.0);
}

int get_int(const json& doc, const char* key, int fallback) {
    if (!doc.contains(key)) {
        return fallback;
    }
    if (!doc[key].is_number_integer()) {
        throw std::invalid_argument(std::string("config: \"") + key + "\" must be an integer");
    }
    return doc[key].get<int>();
}

int require_int(const json& doc, const char* key) {
    if (!doc.contains(key)) {
        throw std::invalid_argument(std::string("config: missing required key \"") + key + "\"");
    }
    return get_int(doc, key, 0);
}

DeviceConfig parse_lattice(const json& doc, const std::string& device) {
    DeviceConfig config;
    config.n_cols = require_int(doc, "n_cols");
    config.omega = get_real(doc, "omega", 1.0);
    config.epsilon = get_real(doc, "epsilon", 0.0);

    if (device == "chain") {
        reject_unknown_keys(doc, {"device", "n_cols", "n_rows", "omega", "epsilon"});
        config.n_rows = get_int(doc, "n_rows", 1);
        config.control = ChainControl{};
    } else if (device == "grid") {
        reject_unknown_keys(doc, {"device", "n_cols", "n_rows", "omega", "epsilon", "K"});
        config.n_rows = get_int(doc, "n_rows", 2);
        config.control = GridControl{require_real(doc, "K")};
    } else {
        reject_unknown_keys(doc, {"device", "n_cols", "n_rows", "omega", "epsilon", "g", "kappa"});
        config.n_rows = get_int(doc, "n_rows", 2);
        config.control = CouplerControl{require_real(doc, "g"), require_real(doc, "kappa")};
    }
    validate_config(config);
    return config;
}

SpinModelConfig parse_spin(const json& doc, const std::string& device) {
    reject_unknown_keys(doc, {"device", "two_j_v", "two_j_h", "omega", "K", "eps_h", "eps_v"});

    SpinModelConfig config;
    config.omega = get_real(doc, "omega", 1.0);
    config.k = get_real(doc, "K", 0.0);
    config.eps_h = get_real(doc, "eps_h", 0.0);
    config.eps_v = get_real(doc, "eps_v", 0.0);
    if (device == "am-separable") {
        config.form = CouplingForm::separable_x;
        config.j_v = SpinQuantum{require_int(doc, "two_j_v")};
        config.j_h = SpinQuantum{require_int(doc, "two_j_h")};
    } else {
        config.form = CouplingForm::yy_product;
        config.j_v = SpinQuantum{get_int(doc, "two_j_v", 1)};
        config.j_h = SpinQuantum{get_int(doc, "two_j_h", 2)};
    }
    validate_config(config);
    return config;
}

}  // namespace

ModelConfig parse_config(const json& doc) {
    if (!doc.is_object()) {
        throw std::invalid_argument("config: document must be a JSON object");
    }
    if (!doc.contains("device") || !doc["device"].is_string()) {
        throw std::invalid_argument("config: missing string key \"device\"");
    }
    const auto device = doc["device"].get<std::string>();
    if (device == "chain" || device == "grid" || device == "coupler") {
        return parse_lattice(doc, device);
    }
    if (device == "am-separable" || device == "am-yy") {
        return parse_spin(doc, device);
    }
    throw std::invalid_argument("config: unknown device \"" + device + "\"");
}

ModelConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file: " + path);
    }
    json doc;
    in >> doc;
    return parse_config(doc);
}

json config_json(const ModelConfig& config) {
    json doc;
    if (const auto* device = std::get_if<DeviceConfig>(&config)) {
        doc["n_cols"] = device->n_cols;
        doc["n_rows"] = device->n_rows;
        doc["omega"] = device->omega;
        doc["epsilon"] = device->epsilon;
        if (std::holds_alternative<ChainControl>(device->control)) {
            doc["device"] = "chain";
        } else if (const auto* grid = std::get_if<GridControl>(&device->control)) {
            doc["device"] = "grid";
            doc["K"] = grid->k;
        } else {
            const auto& coupler = std::get<CouplerControl>(device->control);
            doc["device"] = "coupler";
            doc["g"] = coupler.g;
            doc["kappa"] = coupler.kappa;
        }
    } else {
        const auto& spin = std::get<SpinModelConfig>(config);
        doc["device"] = spin.form == CouplingForm::separable_x ? "am-separable" : "am-yy";
        doc["two_j_v"] = spin.j_v.two_j;
        doc["two_j_h"] = spin.j_h.two_j;
        doc["omega"] = spin.omega;
        doc["K"] = spin.k;
        doc["eps_h"] = spin.eps_h;
        doc["eps_v"] = spin.eps_v;
    }
    return doc;
}

}  // namespace qdc
