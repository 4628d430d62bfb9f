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

#ifndef LCRIS_GEOMETRY_CHANNEL_HPP
#define LCRIS_GEOMETRY_CHANNEL_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

namespace lcris {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;

// Element positions of an antenna array or RIS, in meters.
struct ArrayGeometry {
    std::vector<Vec3> element_positions;
    Vec3 center = Vec3::Zero();
    double carrier_wavelength = 0.0;

    Eigen::Index n_elements() const { return static_cast<Eigen::Index>(element_positions.size()); }
};

// Power gain rho * (d0/d)^exponent, rho given in dB.
struct PathlossParams {
    double rho_dB = -61.0;
    double d0 = 1.0;
    double exponent = 2.0;
};

enum class Link { User, Eavesdropper };

// Channels of one downlink draw. h_r_* are RIS-to-receiver vectors such that
// the cascaded row channel is h_r^H * Gamma * H_t.
struct ChannelInstance {
    Eigen::MatrixXcd H_t;    // N x N_t, BS -> RIS
    Eigen::VectorXcd h_r_u;  // N
    Eigen::VectorXcd h_r_e;  // N
    Eigen::VectorXcd h_d_u;  // N_t, blocked (zero)
    Eigen::VectorXcd h_d_e;  // N_t, blocked (zero)
    double noise_power = 1.0;  // watts

    const Eigen::VectorXcd& h_r(Link which) const { return which == Link::User ? h_r_u : h_r_e; }
    const Eigen::VectorXcd& h_d(Link which) const { return which == Link::User ? h_d_u : h_d_e; }
};

// Lifted SNR form: SNR = s^H A s for s = exp(j*omega).
struct QuadraticForm {
    Eigen::MatrixXcd A;
};

/// Uniform planar array centred at `center`; element (i, j) sits at
/// center + (i - (rows-1)/2)*spacing*axis_u + (j - (cols-1)/2)*spacing*axis_v,
/// stored row-major in i. Throws std::invalid_argument on non-orthonormal axes
/// or non-positive spacing.
ArrayGeometry build_upa(int rows, int cols, double spacing, const Vec3& center,
                        const Vec3& axis_u, const Vec3& axis_v, double wavelength);

/// Single-element geometry, used for single-antenna receivers.
ArrayGeometry point_geometry(const Vec3& position, double wavelength);

/// Near-field steering vector (1/sqrt(N)) * exp(-j*kappa*|u_n - point|).
Eigen::VectorXcd steering_vector(const ArrayGeometry& geom, const Vec3& point);

/// Amplitude gain sqrt(10^(rho_dB/10) * (d0/d)^exponent).
double pathloss_gain(const PathlossParams& params, double d);

/// Rank-one LOS channel c0 * a_rx(tx.center) * a_tx(rx.center)^H, sized
/// rx x tx, with c0 taken at the centre-to-centre distance.
Eigen::MatrixXcd los_channel(const ArrayGeometry& tx_geom, const ArrayGeometry& rx_geom,
                             const PathlossParams& pathloss);

/// sqrt(K/(K+1))*los + sqrt(1/(K+1))*diffuse with i.i.d. CN entries whose
/// expected total power matches ||los||_F^2. K >= 1e12 returns `los`.
Eigen::MatrixXcd rician_channel(const Eigen::MatrixXcd& los, double K, std::uint64_t rng_seed);

/// h_eff = h_d + H_t^H * Gamma^H * h_r with Gamma = diag(exp(j*phases)).
Eigen::VectorXcd effective_channel(const ChannelInstance& inst, Link which,
                                   const Eigen::VectorXd& phases);

/// A = u u^H / sigma^2 with u = h_r .* conj(H_t q), so that s^H A s equals
/// |h_eff^H q|^2 / sigma^2 for unit-modulus s = exp(j*omega).
QuadraticForm quadratic_form(const ChannelInstance& inst, Link which, const Eigen::VectorXcd& q);

/// Stateless seed mixer (splitmix64 finaliser).
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace lcris

#endif
