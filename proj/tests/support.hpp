// SPDX-License-Identifier: Apache-2.0
//
// lcris - temperature-aware phase-shift design for liquid-crystal RIS
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

// Small generators shared by the unit tests. No property-testing library is
// available, so these are seeded by hand and every failure prints the seed.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>

namespace lcris::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Eigen::VectorXcd random_complex(Rng& rng, Eigen::Index n)
{
    std::normal_distribution<double> g;
    Eigen::VectorXcd v(n);
    for (Eigen::Index i = 0; i < n; ++i)
        v(i) = {g(rng), g(rng)};
    return v;
}

inline Eigen::MatrixXcd random_complex(Rng& rng, Eigen::Index rows, Eigen::Index cols)
{
    std::normal_distribution<double> g;
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c)
        for (Eigen::Index r = 0; r < rows; ++r)
            m(r, c) = {g(rng), g(rng)};
    return m;
}

inline Eigen::MatrixXcd random_hermitian(Rng& rng, Eigen::Index n)
{
    const Eigen::MatrixXcd m = random_complex(rng, n, n);
    return 0.5 * (m + m.adjoint());
}

inline Eigen::MatrixXcd random_psd(Rng& rng, Eigen::Index n, Eigen::Index rank)
{
    const Eigen::MatrixXcd f = random_complex(rng, n, rank);
    return f * f.adjoint();
}

inline Eigen::VectorXd random_phases(Rng& rng, Eigen::Index n, double hi = 2.0 * 3.14159265358979323846)
{
    Eigen::VectorXd w(n);
    for (Eigen::Index i = 0; i < n; ++i)
        w(i) = uniform(rng, 0.0, hi);
    return w;
}

inline Eigen::VectorXcd unit_modulus(const Eigen::VectorXd& w)
{
    return w.unaryExpr([](double a) { return std::polar(1.0, a); });
}

}  // namespace lcris::testing
