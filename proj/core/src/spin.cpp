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

#include "qdc/spin.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qdc {

namespace {

std::string render_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

// m as an exact string: integers plain, halves as "p/2".
std::string render_two_m(int two_m) {
    if (two_m % 2 == 0) {
        return std::to_string(two_m / 2);
    }
    return std::to_string(two_m) + "/2";
}

double raising_element(SpinQuantum j, int two_m) {
    // <m+1| J+ |m> = sqrt(J(J+1) - m(m+1)), all products exact in 2m units.
    const double jj1 = 0.25 * j.two_j * (j.two_j + 2);
    const double mm1 = 0.25 * two_m * (two_m + 2);
    return std::sqrt(jj1 - mm1);
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

std::string render_config(const char* builder, const SpinModelConfig& c) {
    return std::string(builder) + "(2Jv=" + std::to_string(c.j_v.two_j) +
           ",2Jh=" + std::to_string(c.j_h.two_j) + ",omega=" + render_real(c.omega) +
           ",K=" + render_real(c.k) + ",eps_h=" + render_real(c.eps_h) +
           ",eps_v=" + render_real(c.eps_v) + ")";
}

}  // namespace

void validate_config(const SpinModelConfig& c) {
    if (c.j_v.two_j < 0 || c.j_h.two_j < 0) {
        throw std::invalid_argument("SpinModelConfig: 2J values must be nonnegative");
    }
    if (!std::isfinite(c.omega) || !std::isfinite(c.k) || !std::isfinite(c.eps_h) ||
        !std::isfinite(c.eps_v)) {
        throw std::invalid_argument("SpinModelConfig: parameters must be finite");
    }
}

SpinMatrices spin_matrices(SpinQuantum j) {
    const int dim = j.dimension();
    SpinMatrices ops;
    ops.jx = Eigen::MatrixXcd::Zero(dim, dim);
    ops.jy = Eigen::MatrixXcd::Zero(dim, dim);
    ops.jz = Eigen::VectorXd::Zero(dim);
    ops.jsq = Eigen::VectorXd::Constant(dim, 0.25 * j.two_j * (j.two_j + 2));

    for (int k = 0; k < dim; ++k) {
        const int two_m = -j.two_j + 2 * k;
        ops.jz(k) = 0.5 * two_m;
        if (k + 1 < dim) {
            const double c = raising_element(j, two_m);
            // Jx = (J+ + J-)/2, Jy = (J+ - J-)/(2i), m increasing downward.
            ops.jx(k + 1, k) = 0.5 * c;
            ops.jx(k, k + 1) = 0.5 * c;
            ops.jy(k + 1, k) = std::complex<double>(0.0, -0.5 * c);
            ops.jy(k, k + 1) = std::complex<double>(0.0, +0.5 * c);
        }
    }
    return ops;
}

SpinIndex to_spin_index(const SiteLabel& site, const DeviceConfig& config) {
    site_index(site, config);  // range check
    return SpinIndex{2 * site.row - (config.n_rows + 1), 2 * site.col - (config.n_cols + 1)};
}

SiteLabel from_spin_index(const SpinIndex& index, const DeviceConfig& config) {
    const int two_row = index.two_m_v + config.n_rows + 1;
    const int two_col = index.two_m_h + config.n_cols + 1;
    if (two_row % 2 != 0 || two_col % 2 != 0) {
        throw std::invalid_argument("from_spin_index: projection has the wrong parity");
    }
    const SiteLabel site{two_row / 2, two_col / 2};
    site_index(site, config);  // range check
    return site;
}

std::string spin_label_text(int two_m_v, int two_m_h) {
    return "v" + render_two_m(two_m_v) + "h" + render_two_m(two_m_h);
}

std::vector<std::string> spin_basis_labels(const SpinModelConfig& config) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(config.j_v.dimension()) * config.j_h.dimension());
    for (int two_mv = -config.j_v.two_j; two_mv <= config.j_v.two_j; two_mv += 2) {
        for (int two_mh = -config.j_h.two_j; two_mh <= config.j_h.two_j; two_mh += 2) {
            labels.push_back(spin_label_text(two_mv, two_mh));
        }
    }
    return labels;
}

ExcitationHamiltonian build_am_separable(const SpinModelConfig& config) {
    if (config.form != CouplingForm::separable_x) {
        throw std::invalid_argument("build_am_separable: config.form must be separable_x");
    }
    validate_config(config);

    const auto ops_v = spin_matrices(config.j_v);
    const auto ops_h = spin_matrices(config.j_h);
    const Eigen::MatrixXd iv = Eigen::MatrixXd::Identity(config.j_v.dimension(), config.j_v.dimension());
    const Eigen::MatrixXd ih = Eigen::MatrixXd::Identity(config.j_h.dimension(), config.j_h.dimension());

    // Jx is real in this basis; each term acts on one factor only. The
    // Casimir terms are multiples of the identity within fixed (J_v, J_h).
    Eigen::MatrixXd h = 2.0 * config.omega * kron(iv, ops_h.jx.real()) +
                        2.0 * config.k * kron(ops_v.jx.real(), ih);
    h.diagonal().array() += config.eps_h * ops_h.jsq(0) + config.eps_v * ops_v.jsq(0);

    ExcitationHamiltonian out;
    out.basis = spin_basis_labels(config);
    out.matrix = std::move(h);
    out.builder = "am-separable";
    out.provenance = render_config("am-separable", config);
    return out;
}

ExcitationHamiltonian build_am_yy(const SpinModelConfig& config) {
    if (config.form != CouplingForm::yy_product) {
        throw std::invalid_argument("build_am_yy: config.form must be yy_product");
    }
    validate_config(config);

    const auto ops_v = spin_matrices(config.j_v);
    const auto ops_h = spin_matrices(config.j_h);
    const Eigen::MatrixXd iv = Eigen::MatrixXd::Identity(config.j_v.dimension(), config.j_v.dimension());

    // Jy = i A with A real antisymmetric, so Jy_v ⊗ Jy_h = -A_v ⊗ A_h is
    // real symmetric.
    const Eigen::MatrixXd ay_v = ops_v.jy.imag();
    const Eigen::MatrixXd ay_h = ops_h.jy.imag();

    Eigen::MatrixXd h = 2.0 * config.omega * kron(iv, ops_h.jx.real()) -
                        config.k * kron(ay_v, ay_h);
    h.diagonal().array() += config.eps_h * ops_h.jsq(0) + config.eps_v * ops_v.jsq(0);

    ExcitationHamiltonian out;
    out.basis = spin_basis_labels(config);
    out.matrix = std::move(h);
    out.builder = "am-yy";
    out.provenance = render_config("am-yy", config);
    if (config.j_v.two_j != 1 || config.j_h.two_j != 2) {
        out.provenance += " [extrapolated beyond the 2x3 instance]";
    }
    return out;
}

double wigner_amplitude(SpinQuantum j, int two_m_final, double theta) {
    if (std::abs(two_m_final) > j.two_j || (two_m_final - j.two_j) % 2 != 0) {
        throw std::invalid_argument("wigner_amplitude: m must lie in -J..J with the parity of J");
    }
    const int k = (j.two_j + two_m_final) / 2;  // J + m
    const int l = (j.two_j - two_m_final) / 2;  // J - m

    double binom = 1.0;
    for (int i = 1; i <= k; ++i) {
        binom *= static_cast<double>(j.two_j - k + i) / i;
    }
    const double c = std::abs(std::cos(0.5 * theta));
    const double s = std::abs(std::sin(0.5 * theta));
    return std::sqrt(binom) * std::pow(c, l) * std::pow(s, k);
}

}  // namespace qdc
