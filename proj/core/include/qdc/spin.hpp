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
#include <vector>

#include "qdc/lattice.hpp"

namespace qdc {

// Spin magnitude stored as 2J so half-integer values stay exact integers.
struct SpinQuantum {
    int two_j{0};

    int dimension() const { return two_j + 1; }
    double j() const { return 0.5 * two_j; }
    // Chain of n sites maps to J = (n-1)/2.
    static SpinQuantum from_sites(int n) { return SpinQuantum{n - 1}; }

    friend bool operator==(const SpinQuantum&, const SpinQuantum&) = default;
};

// Angular-momentum component matrices in the m-increasing basis
// (m = -J, -J+1, ..., +J). Jz and J^2 are diagonal; their diagonals are
// returned as vectors.
struct SpinMatrices {
    Eigen::MatrixXcd jx;
    Eigen::MatrixXcd jy;
    Eigen::VectorXd jz;
    Eigen::VectorXd jsq;
};

SpinMatrices spin_matrices(SpinQuantum j);

enum class CouplingForm {
    separable_x,   // eps_h J_h^2 + eps_v J_v^2 + 2 omega J_hx + 2 k J_vx
    yy_product,    // eps_h J_h^2 + eps_v J_v^2 + 2 omega J_hx + k J_vy J_hy
};

struct SpinModelConfig {
    SpinQuantum j_v{1};    // 2J_v = 1 (two rows)
    SpinQuantum j_h{2};    // 2J_h = 2 (three columns)
    double omega{1.0};
    double k{0.0};
    double eps_h{0.0};
    double eps_v{0.0};
    CouplingForm form{CouplingForm::separable_x};
};

void validate_config(const SpinModelConfig& config);

// m projections of one lattice site, stored as 2m values.
// m_h = col - (N+1)/2 and m_v = row - (M+1)/2, so the source row carries
// m_v = -J_v and the drain row m_v = +J_v.
struct SpinIndex {
    int two_m_v{0};
    int two_m_h{0};
    friend bool operator==(const SpinIndex&, const SpinIndex&) = default;
};

SpinIndex to_spin_index(const SiteLabel& site, const DeviceConfig& config);
SiteLabel from_spin_index(const SpinIndex& index, const DeviceConfig& config);

// "v-1/2h-3" style label; halves are printed as exact fractions.
std::string spin_label_text(int two_m_v, int two_m_h);
std::vector<std::string> spin_basis_labels(const SpinModelConfig& config);

// Composite-spin Hamiltonians on |J_v,m_v> ⊗ |J_h,m_h>, v slow / h fast,
// m increasing in both factors. Both forms are real symmetric in this basis.
ExcitationHamiltonian build_am_separable(const SpinModelConfig& config);
ExcitationHamiltonian build_am_yy(const SpinModelConfig& config);

// |d^J_{m,-J}(theta)|: magnitude of the rotation amplitude from the lowest
// state,  sqrt(C(2J, J+m)) |cos(theta/2)|^{J-m} |sin(theta/2)|^{J+m}.
// The occupation probability is the square; phases are not part of the
// contract. theta = 2 omega t reproduces the chain dynamics.
double wigner_amplitude(SpinQuantum j, int two_m_final, double theta);

}  // namespace qdc
