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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qdc/lattice.hpp"

namespace qdc {

// Complex amplitudes over the same ordered basis as the Hamiltonian.
// Unit 2-norm within 1e-12 is enforced at construction.
struct QuantumState {
    std::vector<std::string> basis;
    Eigen::VectorXcd amplitudes;
};

QuantumState make_state(std::vector<std::string> basis, Eigen::VectorXcd amplitudes);
QuantumState basis_state(const ExcitationHamiltonian& h, Eigen::Index index);
QuantumState basis_state(const ExcitationHamiltonian& h, const std::string& label);

// Spectral decomposition of a real symmetric Hamiltonian. Eigenvalues are
// ascending, eigenvector columns orthonormal, and V diag(lambda) V^T
// reproduces the input within 1e-10 (max abs entry).
struct Propagator {
    std::vector<std::string> basis;
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
    std::uint64_t source_hash{0};
};

// Throws std::invalid_argument if the matrix is not exactly symmetric.
Propagator diagonalize(const ExcitationHamiltonian& h);

// psi(t) = V exp(-i lambda t) V^T psi(0). t may be negative.
QuantumState evolve(const Propagator& p, const QuantumState& psi0, double t);

// Sampled occupation probabilities on a uniform grid over [0, t_max],
// endpoints included. Every row sums to 1 within 1e-10.
struct EvolutionTrace {
    std::vector<std::string> basis;
    Eigen::VectorXd times;           // units of 1/omega
    Eigen::MatrixXd probabilities;   // one row per time sample
    std::string provenance;
};

// Requires steps >= 2 and t_max > 0.
EvolutionTrace trace(const Propagator& p, const QuantumState& psi0, double t_max, int steps);

// |<to| exp(-iHt) |from>|^2 for basis states, phase-insensitive.
double transfer_fidelity(const Propagator& p, Eigen::Index from, Eigen::Index to, double t);
double transfer_fidelity(const Propagator& p, const std::string& from, const std::string& to,
                         double t);

// FNV-1a over the basis labels and raw matrix bytes; identifies which
// Hamiltonian a propagator was derived from.
std::uint64_t hamiltonian_hash(const ExcitationHamiltonian& h);

}  // namespace qdc
