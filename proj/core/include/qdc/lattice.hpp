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

#include <Eigen/Dense>

#include <string>
#include <variant>
#include <vector>

namespace qdc {

// One lattice site, 1-based indices. Row 1 is the source channel; row M is
// the drain. Basis ordering is row-major: position = (row-1)*N + (col-1).
struct SiteLabel {
    int row{1};
    int col{1};
    friend bool operator==(const SiteLabel&, const SiteLabel&) = default;
};

struct ChainControl {};                                   // bare chain, no inter-channel control
struct GridControl { double k{0.0}; };                    // vertical coupling strength K
struct CouplerControl { double g{0.0}; double kappa{0.0}; };

using ControlKind = std::variant<ChainControl, GridControl, CouplerControl>;

// Parameters of one device instance (hbar = 1; omega sets the time unit).
struct DeviceConfig {
    int n_cols{2};         // N, sites per channel
    int n_rows{1};         // M, number of rows/channels
    double omega{1.0};     // horizontal coupling scale, must be > 0
    double epsilon{0.0};   // uniform on-site energy
    ControlKind control{ChainControl{}};
};

// Throws std::invalid_argument when the parameters violate the device
// constraints (omega <= 0, non-finite couplings, coupler with even N, ...).
void validate_config(const DeviceConfig& config);

// Single-excitation Hamiltonian over an ordered basis of text labels.
// The matrix is built exactly symmetric (never symmetrized after the fact)
// and every diagonal entry equals the on-site energy of the config.
struct ExcitationHamiltonian {
    std::vector<std::string> basis;
    Eigen::MatrixXd matrix;
    std::string builder;       // chain | grid | coupler | am-separable | am-yy
    std::string provenance;    // builder name + rendered config

    Eigen::Index dim() const { return matrix.rows(); }
};

// Engineered coupling between chain sites j and j+1: omega * sqrt((N-j) j).
// Valid for 1 <= j <= N-1.
double pst_coupling(int j, int n_cols, double omega);

// Flat basis position of a site (0-based), row-major.
Eigen::Index site_index(const SiteLabel& site, const DeviceConfig& config);

// Text label of a site: "s3" on the source row, "d3" on the drain row,
// "c<row>.<col>" on interior rows. A single-row chain uses the "s" prefix.
std::string site_label_text(const SiteLabel& site, const DeviceConfig& config);

// All labels in basis order.
std::vector<std::string> lattice_basis_labels(const DeviceConfig& config);

// N x N chain with the perfect-transfer coupling profile on the off-diagonals.
// Requires M = 1 and N >= 2.
ExcitationHamiltonian build_chain(const DeviceConfig& config);

// M x N grid: every row is a chain with couplings pst_coupling(j, N, omega),
// and column-aligned neighbours of rows i, i+1 are coupled with
// K * sqrt(i (M-i)). No diagonal couplings. Requires M >= 2, N >= 2.
ExcitationHamiltonian build_grid_qdc(const DeviceConfig& config);

// Two channels of length N (odd, > 3) joined only at the three middle
// columns j_c = (N+1)/2 and j_± = j_c ± 1. Intra-channel bonds inside the
// coupler carry g; the four cross-channel bonds carry the signed pattern
//   (s,j_-)-(d,j_c) = +kappa   (d,j_-)-(s,j_c) = -kappa
//   (s,j_c)-(d,j_+) = +kappa   (d,j_c)-(s,j_+) = -kappa
// Outside the coupler each channel follows pst_coupling.
ExcitationHamiltonian build_coupler_qdc(const DeviceConfig& config);

// Dispatch on the control variant.
ExcitationHamiltonian build_device(const DeviceConfig& config);

}  // namespace qdc
