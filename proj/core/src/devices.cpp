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

#include "qdc/devices.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdc {

namespace {

double transfer_time(double omega) { return std::numbers::pi / (2.0 * omega); }

std::string port(const char* prefix, int col) { return std::string(prefix) + std::to_string(col); }

}  // namespace

ExcitationHamiltonian build_model(const ModelConfig& config) {
    if (const auto* device = std::get_if<DeviceConfig>(&config)) {
        return build_device(*device);
    }
    const auto& spin = std::get<SpinModelConfig>(config);
    return spin.form == CouplingForm::separable_x ? build_am_separable(spin) : build_am_yy(spin);
}

std::vector<Scenario> scenario_catalog(int n, int m, double omega) {
    if (n < 2 || m < 2 || !(omega > 0.0)) {
        throw std::invalid_argument("scenario_catalog: need n >= 2, m >= 2, omega > 0");
    }
    const double tau = transfer_time(omega);
    std::vector<Scenario> catalog;

    {
        Scenario s;
        s.name = "chain-pst";
        s.config = DeviceConfig{n, 1, omega, 0.0, ChainControl{}};
        s.input_label = "s1";
        s.output_label = port("s", n);
        s.expected_time = tau;
        s.description = "engineered chain moves the excitation end to end at tau";
        catalog.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "grid-source";
        s.config = DeviceConfig{n, m, omega, 0.0, GridControl{0.0}};
        s.input_label = "s1";
        s.output_label = port("s", n);
        s.expected_time = tau;
        s.description = "decoupled channels (K=0) keep the excitation on the source side";
        catalog.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "grid-drain";
        s.config = DeviceConfig{n, m, omega, 0.0, GridControl{omega}};
        s.input_label = "s1";
        s.output_label = port("d", n);
        s.expected_time = tau;
        s.description = "K=omega routes the excitation to the drain output";
        catalog.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "spin-yy";
        SpinModelConfig spin;
        spin.j_v = SpinQuantum{1};
        spin.j_h = SpinQuantum{2};
        spin.omega = omega;
        spin.k = -4.0 * omega;
        spin.form = CouplingForm::yy_product;
        s.config = spin;
        s.input_label = spin_label_text(-1, -2);
        s.output_label = spin_label_text(+1, +2);
        s.expected_time = tau / std::sqrt(2.0);
        s.alternate_sign_control = true;
        s.description = "spin-1/2 x spin-1 yy coupling flips both projections at tau/sqrt(2)";
        catalog.push_back(std::move(s));
    }
    if (n % 2 == 1 && n > 3) {
        const double g_source = omega * std::sqrt((n * n - 1) / 4.0);
        const double g_drain = omega * std::sqrt((n * n - 1) / 8.0);
        {
            Scenario s;
            s.name = "coupler-source";
            s.config = DeviceConfig{n, 2, omega, 0.0, CouplerControl{g_source, 0.0}};
            s.input_label = "s1";
            s.output_label = port("s", n);
            s.expected_time = tau;
            s.description = "kappa=0 coupler acts as two independent chains";
            catalog.push_back(std::move(s));
        }
        {
            Scenario s;
            s.name = "coupler-drain";
            s.config = DeviceConfig{n, 2, omega, 0.0, CouplerControl{g_drain, g_drain}};
            s.input_label = "s1";
            s.output_label = port("d", n);
            s.expected_time = tau;
            s.description = "g=kappa coupler interferes the excitation into the drain output";
            catalog.push_back(std::move(s));
        }
    }
    return catalog;
}

std::optional<Scenario> find_scenario(const std::string& name, int n, int m, double omega) {
    for (auto& s : scenario_catalog(n, m, omega)) {
        if (s.name == name) {
            return s;
        }
    }
    return std::nullopt;
}

ScenarioResult run_scenario(const Scenario& s, int steps) {
    const ExcitationHamiltonian h = build_model(s.config);
    const Propagator p = diagonalize(h);
    const QuantumState psi0 = basis_state(h, s.input_label);

    ScenarioResult result;
    result.achieved_fidelity = transfer_fidelity(p, s.input_label, s.output_label, s.expected_time);
    result.trace = trace(p, psi0, s.expected_time, steps);
    result.trace.provenance = s.name + ": " + h.provenance;
    return result;
}

std::vector<SweepPoint> switching_sweep(SweepFamily family, int n,
                                        const std::vector<double>& control_grid, double omega) {
    if (control_grid.empty()) {
        throw std::invalid_argument("switching_sweep: control grid must be nonempty");
    }
    for (const double c : control_grid) {
        if (!std::isfinite(c)) {
            throw std::invalid_argument("switching_sweep: control values must be finite");
        }
    }

    const double tau = transfer_time(omega);
    const std::string source_port = port("s", n);
    const std::string drain_port = port("d", n);

    std::vector<SweepPoint> table;
    table.reserve(control_grid.size());
    for (const double c : control_grid) {
        DeviceConfig config;
        config.n_cols = n;
        config.n_rows = 2;
        config.omega = omega;
        if (family == SweepFamily::grid) {
            config.control = GridControl{c * omega};
        } else {
            // g^2 (1 + c^2) is pinned so c = 0 and c = 1 match the two
            // coupler routing settings exactly.
            const double g = omega * std::sqrt((n * n - 1) / (4.0 * (1.0 + c * c)));
            config.control = CouplerControl{g, c * g};
        }
        const Propagator p = diagonalize(build_device(config));
        SweepPoint point;
        point.control = c;
        point.fidelity_source = transfer_fidelity(p, "s1", source_port, tau);
        point.fidelity_drain = transfer_fidelity(p, "s1", drain_port, tau);
        table.push_back(point);
    }
    return table;
}

}  // namespace qdc
