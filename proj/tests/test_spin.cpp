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

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "qdc/evolution.hpp"
#include "qdc/spin.hpp"

using namespace qdc;

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

Eigen::MatrixXcd kron_c(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

double comm_deviation(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                      const Eigen::MatrixXcd& c) {
    // || [a,b] - i c ||_max
    return (a * b - b * a - kI * c).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("spin_matrices reproduce the standard low-spin forms") {
    SUBCASE("J=1/2") {
        const auto ops = spin_matrices(SpinQuantum{1});
        Eigen::MatrixXd jx_expected(2, 2);
        jx_expected << 0.0, 0.5, 0.5, 0.0;
        CHECK((ops.jx.real() - jx_expected).cwiseAbs().maxCoeff() == 0.0);
        CHECK(ops.jx.imag().cwiseAbs().maxCoeff() == 0.0);
        CHECK(ops.jz(0) == -0.5);
        CHECK(ops.jz(1) == +0.5);
        CHECK(ops.jsq(0) == 0.75);
    }
    SUBCASE("J=1 off-diagonals are 1/sqrt(2)") {
        const auto ops = spin_matrices(SpinQuantum{2});
        const double expected = 1.0 / std::sqrt(2.0);
        CHECK(std::abs(ops.jx(0, 1)) == doctest::Approx(expected).epsilon(1e-15));
        CHECK(std::abs(ops.jx(1, 2)) == doctest::Approx(expected).epsilon(1e-15));
        CHECK(std::abs(ops.jx(0, 2)) == 0.0);
        CHECK(ops.jz(2) == 1.0);
    }
}

TEST_CASE("angular momentum algebra holds for 2J = 1..20") {
    for (int two_j = 1; two_j <= 20; ++two_j) {
        CAPTURE(two_j);
        const auto ops = spin_matrices(SpinQuantum{two_j});
        const Eigen::MatrixXcd jz = ops.jz.cast<std::complex<double>>().asDiagonal();

        CHECK(comm_deviation(ops.jx, ops.jy, jz) <= 1e-12);
        CHECK(comm_deviation(ops.jy, jz, ops.jx) <= 1e-12);
        CHECK(comm_deviation(jz, ops.jx, ops.jy) <= 1e-12);

        const Eigen::MatrixXcd casimir = ops.jx * ops.jx + ops.jy * ops.jy + jz * jz;
        const Eigen::MatrixXcd expected =
            ops.jsq(0) * Eigen::MatrixXcd::Identity(two_j + 1, two_j + 1);
        CHECK((casimir - expected).cwiseAbs().maxCoeff() <= 1e-12);

        // Hermiticity
        CHECK((ops.jx - ops.jx.adjoint()).cwiseAbs().maxCoeff() == 0.0);
        CHECK((ops.jy - ops.jy.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("to_spin_index maps ports to extremal projections") {
    const DeviceConfig config{7, 2, 1.0, 0.0, GridControl{0.0}};
    CHECK(to_spin_index({1, 1}, config) == SpinIndex{-1, -6});   // m_v=-1/2, m_h=-3
    CHECK(to_spin_index({2, 7}, config) == SpinIndex{+1, +6});   // m_v=+1/2, m_h=+3
    CHECK(to_spin_index({1, 4}, config).two_m_h == 0);           // midpoint column

    SUBCASE("round trip over every site, several shapes") {
        for (const auto& shape : {DeviceConfig{7, 2, 1.0, 0.0, GridControl{0.0}},
                                  DeviceConfig{4, 3, 1.0, 0.0, GridControl{0.0}},
                                  DeviceConfig{5, 1, 1.0, 0.0, ChainControl{}}}) {
            for (int row = 1; row <= shape.n_rows; ++row) {
                for (int col = 1; col <= shape.n_cols; ++col) {
                    const SiteLabel site{row, col};
                    CHECK(from_spin_index(to_spin_index(site, shape), shape) == site);
                }
            }
        }
    }
    SUBCASE("ordering is preserved in each coordinate") {
        const DeviceConfig shape{5, 3, 1.0, 0.0, GridControl{0.0}};
        for (int col = 1; col < 5; ++col) {
            CHECK(to_spin_index({1, col}, shape).two_m_h <
                  to_spin_index({1, col + 1}, shape).two_m_h);
        }
        for (int row = 1; row < 3; ++row) {
            CHECK(to_spin_index({row, 1}, shape).two_m_v <
                  to_spin_index({row + 1, 1}, shape).two_m_v);
        }
    }
}

TEST_CASE("spin label text keeps halves exact") {
    CHECK(spin_label_text(-1, -2) == "v-1/2h-1");
    CHECK(spin_label_text(+1, +2) == "v1/2h1");
    CHECK(spin_label_text(-1, -6) == "v-1/2h-3");
    CHECK(spin_label_text(2, 0) == "v1h0");
}

TEST_CASE("build_am_separable") {
    SUBCASE("two spin-1/2 with K=0: two decoupled two-level blocks") {
        SpinModelConfig config;
        config.j_v = SpinQuantum{1};
        config.j_h = SpinQuantum{1};
        config.k = 0.0;
        const auto h = build_am_separable(config);
        Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(4, 4);
        expected(0, 1) = expected(1, 0) = 1.0;
        expected(2, 3) = expected(3, 2) = 1.0;
        CHECK((h.matrix - expected).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("K=omega collapses to the total-Jx rotation") {
        SpinModelConfig config;
        config.j_v = SpinQuantum{1};
        config.j_h = SpinQuantum{4};
        config.omega = 1.3;
        config.k = 1.3;
        config.eps_h = 0.2;
        config.eps_v = 0.4;
        const auto h = build_am_separable(config);

        const auto ops_v = spin_matrices(config.j_v);
        const auto ops_h = spin_matrices(config.j_h);
        const Eigen::MatrixXcd iv = Eigen::MatrixXcd::Identity(2, 2);
        const Eigen::MatrixXcd ih = Eigen::MatrixXcd::Identity(5, 5);
        const Eigen::MatrixXcd total_jx = kron_c(ops_v.jx, ih) + kron_c(iv, ops_h.jx);
        const double casimir = config.eps_h * ops_h.jsq(0) + config.eps_v * ops_v.jsq(0);

        const Eigen::MatrixXcd expected =
            2.0 * config.omega * total_jx + casimir * Eigen::MatrixXcd::Identity(10, 10);
        CHECK((h.matrix.cast<std::complex<double>>() - expected).cwiseAbs().maxCoeff() <= 1e-15);

        // commutes with total J^2
        const Eigen::MatrixXcd total_jy = kron_c(ops_v.jy, ih) + kron_c(iv, ops_h.jy);
        const Eigen::MatrixXcd jz_v = ops_v.jz.cast<std::complex<double>>().asDiagonal();
        const Eigen::MatrixXcd jz_h = ops_h.jz.cast<std::complex<double>>().asDiagonal();
        const Eigen::MatrixXcd total_jz = kron_c(jz_v, ih) + kron_c(iv, jz_h);
        const Eigen::MatrixXcd total_jsq =
            total_jx * total_jx + total_jy * total_jy + total_jz * total_jz;
        const Eigen::MatrixXcd hc = h.matrix.cast<std::complex<double>>();
        CHECK((hc * total_jsq - total_jsq * hc).cwiseAbs().maxCoeff() <= 1e-12);
    }
    SUBCASE("matches the 2xN grid after the index map, N=2..8") {
        for (int n = 2; n <= 8; ++n) {
            CAPTURE(n);
            const DeviceConfig grid_config{n, 2, 1.0, 0.0, GridControl{0.6}};
            const auto grid = build_grid_qdc(grid_config);

            SpinModelConfig spin;
            spin.j_v = SpinQuantum{1};
            spin.j_h = SpinQuantum::from_sites(n);
            spin.k = 0.6;
            spin.eps_h = 0.5;
            spin.eps_v = 1.5;
            const auto am = build_am_separable(spin);
            const double casimir = spin.eps_h * 0.25 * spin.j_h.two_j * (spin.j_h.two_j + 2) +
                                   spin.eps_v * 0.25 * spin.j_v.two_j * (spin.j_v.two_j + 2);

            auto position = [&](int row, int col) {
                const auto idx = to_spin_index({row, col}, grid_config);
                return ((idx.two_m_v + spin.j_v.two_j) / 2) * spin.j_h.dimension() +
                       (idx.two_m_h + spin.j_h.two_j) / 2;
            };
            double worst = 0.0;
            for (int row_a = 1; row_a <= 2; ++row_a) {
                for (int col_a = 1; col_a <= n; ++col_a) {
                    for (int row_b = 1; row_b <= 2; ++row_b) {
                        for (int col_b = 1; col_b <= n; ++col_b) {
                            const auto a = site_index({row_a, col_a}, grid_config);
                            const auto b = site_index({row_b, col_b}, grid_config);
                            double am_entry =
                                am.matrix(position(row_a, col_a), position(row_b, col_b));
                            if (a == b) am_entry -= casimir;
                            worst = std::max(worst, std::abs(am_entry - grid.matrix(a, b)));
                        }
                    }
                }
            }
            CHECK(worst < 1e-12);
        }
    }
    SUBCASE("wrong form is rejected") {
        SpinModelConfig config;
        config.form = CouplingForm::yy_product;
        CHECK_THROWS_AS(build_am_separable(config), std::invalid_argument);
    }
}

TEST_CASE("build_am_yy") {
    SUBCASE("K=0 leaves the two v-blocks as independent h-rotations") {
        SpinModelConfig config;
        config.form = CouplingForm::yy_product;
        config.k = 0.0;
        const auto h = build_am_yy(config);  // defaults: J_v=1/2, J_h=1
        const Eigen::MatrixXd jx_h = spin_matrices(SpinQuantum{2}).jx.real();
        CHECK((h.matrix.block(0, 0, 3, 3) - 2.0 * jx_h).cwiseAbs().maxCoeff() == 0.0);
        CHECK((h.matrix.block(3, 3, 3, 3) - 2.0 * jx_h).cwiseAbs().maxCoeff() == 0.0);
        CHECK(h.matrix.block(0, 3, 3, 3).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("real symmetric, matching the hand-built 2x3 device") {
        // The yy coupling on the 2x3 lattice: intra bonds sqrt(2)*omega and
        // the four signed cross bonds of magnitude K/(2 sqrt(2)), with the
        // sign pattern flipped relative to +kappa.
        const double omega = 1.0;
        const double k = -4.0;
        SpinModelConfig config;
        config.form = CouplingForm::yy_product;
        config.omega = omega;
        config.k = k;
        const auto h = build_am_yy(config);

        CHECK((h.matrix - h.matrix.transpose()).cwiseAbs().maxCoeff() == 0.0);

        const double g = std::sqrt(2.0) * omega;
        const double kappa = -k / (2.0 * std::sqrt(2.0));
        Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(6, 6);
        auto bond = [&](int a, int b, double value) {
            expected(a, b) = value;
            expected(b, a) = value;
        };
        bond(0, 1, g);
        bond(1, 2, g);   // source row: (s,1)-(s,2), (s,2)-(s,3)
        bond(3, 4, g);
        bond(4, 5, g);   // drain row
        bond(0, 4, +kappa);   // (s,1)-(d,2)
        bond(3, 1, -kappa);   // (d,1)-(s,2)
        bond(1, 5, +kappa);   // (s,2)-(d,3)
        bond(4, 2, -kappa);   // (d,2)-(s,3)
        CHECK((h.matrix - expected).cwiseAbs().maxCoeff() <= 1e-15);
    }
    SUBCASE("transfer at tau/sqrt(2) for K=-4 omega") {
        SpinModelConfig config;
        config.form = CouplingForm::yy_product;
        config.k = -4.0;
        const auto h = build_am_yy(config);
        const auto p = diagonalize(h);
        const double t = std::numbers::pi / (2.0 * std::sqrt(2.0));
        const double fidelity = transfer_fidelity(p, "v-1/2h-1", "v1/2h1", t);
        CHECK(fidelity == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("extrapolation beyond the 2x3 instance is flagged") {
        SpinModelConfig config;
        config.form = CouplingForm::yy_product;
        config.j_h = SpinQuantum{4};
        const auto h = build_am_yy(config);
        CHECK(h.provenance.find("extrapolated") != std::string::npos);

        SpinModelConfig paper_instance;
        paper_instance.form = CouplingForm::yy_product;
        CHECK(build_am_yy(paper_instance).provenance.find("extrapolated") == std::string::npos);
    }
    SUBCASE("wrong form is rejected") {
        SpinModelConfig config;
        config.form = CouplingForm::separable_x;
        CHECK_THROWS_AS(build_am_yy(config), std::invalid_argument);
    }
}

TEST_CASE("wigner_amplitude") {
    SUBCASE("two-level pulse values") {
        CHECK(wigner_amplitude(SpinQuantum{1}, +1, std::numbers::pi) ==
              doctest::Approx(1.0).epsilon(1e-15));
        CHECK(wigner_amplitude(SpinQuantum{1}, +1, std::numbers::pi / 2.0) ==
              doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    }
    SUBCASE("full rotation reaches the mirror state for any J") {
        for (int two_j = 1; two_j <= 13; ++two_j) {
            CHECK(wigner_amplitude(SpinQuantum{two_j}, two_j, std::numbers::pi) ==
                  doctest::Approx(1.0).epsilon(1e-14));
        }
    }
    SUBCASE("probabilities sum to one") {
        for (int two_j : {1, 2, 5, 10, 13}) {
            for (double theta : {0.0, 0.3, 1.1, 2.2, 3.0, 4.7, 6.2}) {
                double sum = 0.0;
                for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
                    const double amp = wigner_amplitude(SpinQuantum{two_j}, two_m, theta);
                    sum += amp * amp;
                }
                CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
            }
        }
    }
    SUBCASE("invalid projections are rejected") {
        CHECK_THROWS_AS(wigner_amplitude(SpinQuantum{2}, 4, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(wigner_amplitude(SpinQuantum{1}, 0, 1.0), std::invalid_argument);
    }
}
