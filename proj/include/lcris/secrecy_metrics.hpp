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

#ifndef LCRIS_SECRECY_METRICS_HPP
#define LCRIS_SECRECY_METRICS_HPP

#include "lcris/geometry_channel.hpp"

#include <array>
#include <functional>
#include <span>
#include <vector>

namespace lcris {

enum class GridLabel { UserArea, EveArea };

struct PositionGrid {
    std::vector<Vec3> points;
    GridLabel label = GridLabel::UserArea;
};

// Axis-aligned box sampled by a uniform lattice that includes its corners.
struct Box {
    Vec3 lo = Vec3::Zero();
    Vec3 hi = Vec3::Zero();
    std::array<int, 3> grid{3, 3, 1};

    bool contains(const Vec3& p, double tol = 1e-12) const;
};

PositionGrid make_grid(const Box& box, GridLabel label);

struct Beamformer {
    Eigen::VectorXcd q;
    double power_budget = 0.0;  // watts
};

// Channels for a (user position, eavesdropper position) pair.
using InstanceBuilder = std::function<ChannelInstance(const Vec3& user, const Vec3& eve)>;

/// |h_eff^H q|^2 / noise_power.
double snr(const Eigen::VectorXcd& h_eff, const Beamformer& q, double noise_power);

/// max(0, log2(1 + snr_u) - log2(1 + snr_e)).
double secrecy_rate(double snr_u, double snr_e);

// Worst user SNR and worst (largest) eavesdropper SNR over the grids.
struct WorstCaseSnr {
    double min_user_snr;
    double max_eve_snr;
};

WorstCaseSnr worst_case_snrs(const InstanceBuilder& builder, const Eigen::VectorXd& phases,
                             const Beamformer& q, const PositionGrid& users, const PositionGrid& eves);

/// Worst-case secrecy rate over all (user, eavesdropper) position pairs.
/// SR is separable in the two positions, so this is the rate between the
/// weakest user point and the strongest eavesdropper point.
double worst_case_secrecy_rate(const InstanceBuilder& builder, const Eigen::VectorXd& phases,
                               const Beamformer& q, const PositionGrid& users, const PositionGrid& eves);

/// Beamformer sqrt(P_t) * a_BS(p_ris), optimal for blocked direct links and a
/// rank-one LOS BS-RIS channel regardless of the RIS phases.
Beamformer los_beamformer(const ArrayGeometry& bs_geom, const Vec3& p_ris, double P_t);

/// min over pairs of (tr(A_u S) + 1) / (tr(A_e S) + 1).
/// Throws std::domain_error if a denominator is not positive.
double gamma_update(const Eigen::MatrixXcd& S, std::span<const QuadraticForm> A_u_list,
                    std::span<const QuadraticForm> A_e_list);

/// Re tr(A S) for Hermitian A, S.
double real_trace_product(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& S);

}  // namespace lcris

#endif
