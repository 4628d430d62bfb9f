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

#include "lcris/geometry_channel.hpp"

#include "lcris/lc_model.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace lcris {

ArrayGeometry build_upa(int rows, int cols, double spacing, const Vec3& center,
                        const Vec3& axis_u, const Vec3& axis_v, double wavelength)
{
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("build_upa: rows and cols must be positive");
    if (!(spacing > 0.0))
        throw std::invalid_argument("build_upa: spacing must be positive");
    if (!(wavelength > 0.0))
        throw std::invalid_argument("build_upa: wavelength must be positive");
    if (std::abs(axis_u.norm() - 1.0) > 1e-9 || std::abs(axis_v.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("build_upa: axes must be unit-norm");
    if (std::abs(axis_u.dot(axis_v)) > 1e-9)
        throw std::invalid_argument("build_upa: axes must be orthogonal");

    ArrayGeometry g;
    g.center = center;
    g.carrier_wavelength = wavelength;
    g.element_positions.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    const double ou = 0.5 * (rows - 1);
    const double ov = 0.5 * (cols - 1);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            g.element_positions.push_back(center + (i - ou) * spacing * axis_u + (j - ov) * spacing * axis_v);
    return g;
}

ArrayGeometry point_geometry(const Vec3& position, double wavelength)
{
    if (!(wavelength > 0.0))
        throw std::invalid_argument("point_geometry: wavelength must be positive");
    return ArrayGeometry{{position}, position, wavelength};
}

Eigen::VectorXcd steering_vector(const ArrayGeometry& geom, const Vec3& point)
{
    const Eigen::Index n = geom.n_elements();
    if (n == 0)
        throw std::invalid_argument("steering_vector: empty geometry");
    const double kappa = kTwoPi / geom.carrier_wavelength;
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    Eigen::VectorXcd a(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double d = (geom.element_positions[static_cast<std::size_t>(i)] - point).norm();
        if (!(d > 0.0))
            throw std::invalid_argument("steering_vector: point coincides with an array element");
        a(i) = scale * std::polar(1.0, -kappa * d);
    }
    return a;
}

double pathloss_gain(const PathlossParams& params, double d)
{
    if (!(d > 0.0))
        throw std::invalid_argument("pathloss_gain: distance must be positive");
    if (!(params.d0 > 0.0))
        throw std::invalid_argument("pathloss_gain: d0 must be positive");
    const double power = std::pow(10.0, params.rho_dB / 10.0) * std::pow(params.d0 / d, params.exponent);
    return std::sqrt(power);
}

Eigen::MatrixXcd los_channel(const ArrayGeometry& tx_geom, const ArrayGeometry& rx_geom,
                             const PathlossParams& pathloss)
{
    const double d = (rx_geom.center - tx_geom.center).norm();
    if (!(d > 0.0))
        throw std::invalid_argument("los_channel: arrays overlap (coincident centres)");
    const double c0 = pathloss_gain(pathloss, d);
    const Eigen::VectorXcd a_rx = steering_vector(rx_geom, tx_geom.center);
    const Eigen::VectorXcd a_tx = steering_vector(tx_geom, rx_geom.center);
    return c0 * a_rx * a_tx.adjoint();
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Eigen::MatrixXcd rician_channel(const Eigen::MatrixXcd& los, double K, std::uint64_t rng_seed)
{
    if (!(K >= 0.0))
        throw std::invalid_argument("rician_channel: K must be non-negative");
    if (K >= 1e12)
        return los;
    const double entries = static_cast<double>(los.size());
    const double entry_power = entries > 0 ? los.squaredNorm() / entries : 0.0;
    const double sigma = std::sqrt(entry_power / 2.0);

    std::mt19937_64 rng(rng_seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd diffuse(los.rows(), los.cols());
    for (Eigen::Index c = 0; c < los.cols(); ++c)
        for (Eigen::Index r = 0; r < los.rows(); ++r) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            diffuse(r, c) = cplx(sigma * re, sigma * im);
        }
    return std::sqrt(K / (K + 1.0)) * los + std::sqrt(1.0 / (K + 1.0)) * diffuse;
}

Eigen::VectorXcd effective_channel(const ChannelInstance& inst, Link which,
                                   const Eigen::VectorXd& phases)
{
    const Eigen::VectorXcd& h_r = inst.h_r(which);
    const Eigen::VectorXcd& h_d = inst.h_d(which);
    if (phases.size() != h_r.size() || inst.H_t.rows() != h_r.size() || h_d.size() != inst.H_t.cols())
        throw std::invalid_argument("effective_channel: dimension mismatch");
    Eigen::VectorXcd gh(h_r.size());
    for (Eigen::Index n = 0; n < h_r.size(); ++n)
        gh(n) = std::polar(1.0, -phases(n)) * h_r(n);  // Gamma^H h_r
    return h_d + inst.H_t.adjoint() * gh;
}

QuadraticForm quadratic_form(const ChannelInstance& inst, Link which, const Eigen::VectorXcd& q)
{
    const Eigen::VectorXcd& h_r = inst.h_r(which);
    if (q.size() != inst.H_t.cols() || h_r.size() != inst.H_t.rows())
        throw std::invalid_argument("quadratic_form: dimension mismatch");
    if (!(inst.noise_power > 0.0))
        throw std::invalid_argument("quadratic_form: noise power must be positive");
    const Eigen::VectorXcd u = h_r.cwiseProduct((inst.H_t * q).conjugate());
    return {u * u.adjoint() / inst.noise_power};
}

}  // namespace lcris
