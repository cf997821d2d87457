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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qdc/evolution.hpp"
#include "qdc/lattice.hpp"
#include "qdc/spin.hpp"

namespace qdc {

using ModelConfig = std::variant<DeviceConfig, SpinModelConfig>;

ExcitationHamiltonian build_model(const ModelConfig& config);

// One named end-to-end transfer claim: which basis state goes in, which
// port it must reach, and when.
struct Scenario {
    std::string name;
    ModelConfig config;
    std::string input_label;
    std::string output_label;
    double expected_time{0.0};            // units of 1/omega
    double expected_fidelity{1.0};
    double pass_threshold{1.0 - 1e-6};
    bool alternate_sign_control{false};   // retry with the control sign flipped
    std::string description;
};

// The six device families, parameterized by chain length n (and row count m
// for the grid entries): chain-pst, grid-source, grid-drain, spin-yy,
// coupler-source, coupler-drain. Coupler entries require odd n > 3 and are
// omitted otherwise. Defaults n = 7, m = 2, omega = 1.
std::vector<Scenario> scenario_catalog(int n = 7, int m = 2, double omega = 1.0);

std::optional<Scenario> find_scenario(const std::string& name, int n = 7, int m = 2,
                                      double omega = 1.0);

struct ScenarioResult {
    double achieved_fidelity{0.0};
    EvolutionTrace trace;
};

// Build, diagonalize, evolve to the expected time; the trace covers
// [0, expected_time] with the given number of samples.
ScenarioResult run_scenario(const Scenario& s, int steps = 200);

enum class SweepFamily { grid, coupler };

struct SweepPoint {
    double control{0.0};          // grid: K/omega; coupler: kappa/g
    double fidelity_source{0.0};  // (s,1) -> (s,N) at tau
    double fidelity_drain{0.0};   // (s,1) -> (d,N) at tau
};

// Switching characteristic: port fidelities at tau = pi/(2 omega) across a
// control grid. The grid family uses M = 2 with K = control * omega. The
// coupler family holds g^2 (1 + control^2) = omega^2 (n^2 - 1)/4 with
// kappa = control * g, so control = 0 and control = 1 coincide with the
// coupler-source and coupler-drain settings.
std::vector<SweepPoint> switching_sweep(SweepFamily family, int n,
                                        const std::vector<double>& control_grid,
                                        double omega = 1.0);

}  // namespace qdc
