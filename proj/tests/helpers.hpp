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
#include <random>

namespace qdc_test {

// Brute-force matrix exponential: plain Taylor series with scaling and
// squaring. Deliberately independent of any eigendecomposition so it can
// serve as an oracle for the spectral propagator.
inline Eigen::MatrixXcd expm_taylor(const Eigen::MatrixXcd& a) {
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    double scale = 1.0;
    while (norm * scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }
    const Eigen::MatrixXcd scaled = a * scale;
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
    Eigen::MatrixXcd sum = term;
    for (int k = 1; k <= 30; ++k) {
        term = (term * scaled) / static_cast<double>(k);
        sum += term;
    }
    for (int k = 0; k < squarings; ++k) {
        sum = sum * sum;
    }
    return sum;
}

inline Eigen::MatrixXd random_symmetric(int dim, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::MatrixXd m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        m(i, i) = dist(rng);
        for (int j = i + 1; j < dim; ++j) {
            const double value = dist(rng);
            m(i, j) = value;
            m(j, i) = value;
        }
    }
    return m;
}

inline Eigen::VectorXcd random_state(int dim, std::mt19937& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) {
        v(i) = std::complex<double>(dist(rng), dist(rng));
    }
    v /= v.norm();
    return v;
}

}  // namespace qdc_test
