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

#include "qdc/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace qdc {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kReconstructTol = 1e-10;
constexpr double kRowSumTol = 1e-10;

Eigen::Index label_position(const std::vector<std::string>& basis, const std::string& label) {
    const auto it = std::find(basis.begin(), basis.end(), label);
    if (it == basis.end()) {
        throw std::invalid_argument("unknown basis label: " + label);
    }
    return static_cast<Eigen::Index>(it - basis.begin());
}

void fnv1a(std::uint64_t& h, const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
        h ^= bytes[i];
        h *= 1099511628211ULL;
    }
}

}  // namespace

std::uint64_t hamiltonian_hash(const ExcitationHamiltonian& h) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (const auto& label : h.basis) {
        fnv1a(hash, label.data(), label.size());
        fnv1a(hash, ",", 1);
    }
    fnv1a(hash, h.matrix.data(), sizeof(double) * static_cast<std::size_t>(h.matrix.size()));
    return hash;
}

QuantumState make_state(std::vector<std::string> basis, Eigen::VectorXcd amplitudes) {
    if (static_cast<Eigen::Index>(basis.size()) != amplitudes.size()) {
        throw std::invalid_argument("make_state: basis and amplitude sizes differ");
    }
    if (std::abs(amplitudes.norm() - 1.0) > kNormTol) {
        throw std::invalid_argument("make_state: amplitudes must have unit norm");
    }
    return QuantumState{std::move(basis), std::move(amplitudes)};
}

QuantumState basis_state(const ExcitationHamiltonian& h, Eigen::Index index) {
    if (index < 0 || index >= h.dim()) {
        throw std::invalid_argument("basis_state: index out of range");
    }
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(h.dim());
    amp(index) = 1.0;
    return QuantumState{h.basis, std::move(amp)};
}

QuantumState basis_state(const ExcitationHamiltonian& h, const std::string& label) {
    return basis_state(h, label_position(h.basis, label));
}

Propagator diagonalize(const ExcitationHamiltonian& h) {
    if (h.matrix.rows() != h.matrix.cols() || h.matrix.size() == 0) {
        throw std::invalid_argument("diagonalize: matrix must be square and nonempty");
    }
    if ((h.matrix - h.matrix.transpose()).cwiseAbs().maxCoeff() != 0.0) {
        throw std::invalid_argument("diagonalize: matrix is not symmetric");
    }
    if (static_cast<Eigen::Index>(h.basis.size()) != h.dim()) {
        throw std::invalid_argument("diagonalize: basis size does not match matrix dimension");
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("diagonalize: eigendecomposition failed");
    }

    Propagator p;
    p.basis = h.basis;
    p.eigenvalues = solver.eigenvalues();
    p.eigenvectors = solver.eigenvectors();
    p.source_hash = hamiltonian_hash(h);

    const Eigen::MatrixXd rebuilt =
        p.eigenvectors * p.eigenvalues.asDiagonal() * p.eigenvectors.transpose();
    if ((rebuilt - h.matrix).cwiseAbs().maxCoeff() > kReconstructTol) {
        throw std::runtime_error("diagonalize: spectral reconstruction exceeds tolerance");
    }
    return p;
}

QuantumState evolve(const Propagator& p, const QuantumState& psi0, double t) {
    if (p.basis != psi0.basis) {
        throw std::invalid_argument("evolve: state and propagator bases differ");
    }
    if (!std::isfinite(t)) {
        throw std::invalid_argument("evolve: time must be finite");
    }

    const Eigen::VectorXcd modal = p.eigenvectors.transpose() * psi0.amplitudes;
    Eigen::VectorXcd phased(modal.size());
    for (Eigen::Index k = 0; k < modal.size(); ++k) {
        phased(k) = std::polar(1.0, -p.eigenvalues(k) * t) * modal(k);
    }
    QuantumState out;
    out.basis = psi0.basis;
    out.amplitudes = p.eigenvectors * phased;
    return out;
}

EvolutionTrace trace(const Propagator& p, const QuantumState& psi0, double t_max, int steps) {
    if (steps < 2 || !(t_max > 0.0) || !std::isfinite(t_max)) {
        throw std::invalid_argument("trace: need steps >= 2 and finite t_max > 0");
    }

    EvolutionTrace tr;
    tr.basis = p.basis;
    tr.times = Eigen::VectorXd(steps);
    tr.probabilities = Eigen::MatrixXd(steps, p.eigenvalues.size());
    for (int k = 0; k < steps; ++k) {
        const double t = t_max * k / (steps - 1.0);
        tr.times(k) = t;
        const QuantumState psi = evolve(p, psi0, t);
        tr.probabilities.row(k) = psi.amplitudes.cwiseAbs2().transpose();
        if (std::abs(tr.probabilities.row(k).sum() - 1.0) > kRowSumTol) {
            throw std::runtime_error("trace: occupation row does not sum to 1");
        }
    }
    return tr;
}

double transfer_fidelity(const Propagator& p, Eigen::Index from, Eigen::Index to, double t) {
    const Eigen::Index dim = p.eigenvalues.size();
    if (from < 0 || from >= dim || to < 0 || to >= dim) {
        throw std::invalid_argument("transfer_fidelity: basis index out of range");
    }
    std::complex<double> amp = 0.0;
    for (Eigen::Index k = 0; k < dim; ++k) {
        amp += p.eigenvectors(to, k) * p.eigenvectors(from, k) * std::polar(1.0, -p.eigenvalues(k) * t);
    }
    return std::norm(amp);
}

double transfer_fidelity(const Propagator& p, const std::string& from, const std::string& to,
                         double t) {
    return transfer_fidelity(p, label_position(p.basis, from), label_position(p.basis, to), t);
}

}  // namespace qdc
