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

#include "lcris/secrecy_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lcris {

bool Box::contains(const Vec3& p, double tol) const
{
    for (int k = 0; k < 3; ++k)
        if (p(k) < lo(k) - tol || p(k) > hi(k) + tol)
            return false;
    return true;
}

PositionGrid make_grid(const Box& box, GridLabel label)
{
    for (int k = 0; k < 3; ++k) {
        if (!(box.lo(k) <= box.hi(k)))
            throw std::invalid_argument("make_grid: box lower corner exceeds upper corner");
        if (box.grid[static_cast<std::size_t>(k)] < 1)
            throw std::invalid_argument("make_grid: grid density must be at least 1 per axis");
    }
    auto axis = [&](int k) {
        const int n = box.lo(k) == box.hi(k) ? 1 : box.grid[static_cast<std::size_t>(k)];
        std::vector<double> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            v[static_cast<std::size_t>(i)] = n == 1 ? 0.5 * (box.lo(k) + box.hi(k))
                                                    : box.lo(k) + (box.hi(k) - box.lo(k)) * i / (n - 1);
        return v;
    };
    const auto xs = axis(0), ys = axis(1), zs = axis(2);
    PositionGrid g;
    g.label = label;
    for (double x : xs)
        for (double y : ys)
            for (double z : zs)
                g.points.emplace_back(x, y, z);
    return g;
}

double snr(const Eigen::VectorXcd& h_eff, const Beamformer& q, double noise_power)
{
    if (!(noise_power > 0.0))
        throw std::invalid_argument("snr: noise power must be positive");
    if (h_eff.size() != q.q.size())
        throw std::invalid_argument("snr: dimension mismatch");
    return std::norm(h_eff.dot(q.q)) / noise_power;
}

double secrecy_rate(double snr_u, double snr_e)
{
    return std::max(0.0, std::log2(1.0 + snr_u) - std::log2(1.0 + snr_e));
}

WorstCaseSnr worst_case_snrs(const InstanceBuilder& builder, const Eigen::VectorXd& phases,
                             const Beamformer& q, const PositionGrid& users, const PositionGrid& eves)
{
    if (users.points.empty() || eves.points.empty())
        throw std::invalid_argument("worst_case_snrs: empty position grid");
    WorstCaseSnr w{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const Vec3& pu : users.points) {
        const ChannelInstance inst = builder(pu, eves.points.front());
        w.min_user_snr = std::min(w.min_user_snr, snr(effective_channel(inst, Link::User, phases), q, inst.noise_power));
    }
    for (const Vec3& pe : eves.points) {
        const ChannelInstance inst = builder(users.points.front(), pe);
        w.max_eve_snr = std::max(w.max_eve_snr, snr(effective_channel(inst, Link::Eavesdropper, phases), q, inst.noise_power));
    }
    return w;
}

double worst_case_secrecy_rate(const InstanceBuilder& builder, const Eigen::VectorXd& phases,
                               const Beamformer& q, const PositionGrid& users, const PositionGrid& eves)
{
    const WorstCaseSnr w = worst_case_snrs(builder, phases, q, users, eves);
    return secrecy_rate(w.min_user_snr, w.max_eve_snr);
}

Beamformer los_beamformer(const ArrayGeometry& bs_geom, const Vec3& p_ris, double P_t)
{
    if (!(P_t > 0.0))
        throw std::invalid_argument("los_beamformer: P_t must be positive");
    return {std::sqrt(P_t) * steering_vector(bs_geom, p_ris), P_t};
}

double real_trace_product(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& S)
{
    if (A.rows() != S.rows() || A.cols() != S.cols())
        throw std::invalid_argument("real_trace_product: dimension mismatch");
    // tr(A S) = sum_ij A_ij S_ji
    const cplx t = (A.cwiseProduct(S.transpose())).sum();
    const double scale = std::max(1.0, A.norm() * S.norm());
    if (std::abs(t.imag()) > 1e-9 * scale)
        throw std::domain_error("real_trace_product: inputs are not Hermitian");
    return t.real();
}

double gamma_update(const Eigen::MatrixXcd& S, std::span<const QuadraticForm> A_u_list,
                    std::span<const QuadraticForm> A_e_list)
{
    if (A_u_list.empty() || A_e_list.empty())
        throw std::invalid_argument("gamma_update: empty quadratic form list");
    double min_num = std::numeric_limits<double>::infinity();
    for (const auto& f : A_u_list)
        min_num = std::min(min_num, real_trace_product(f.A, S) + 1.0);
    double max_den = -std::numeric_limits<double>::infinity();
    double min_den = std::numeric_limits<double>::infinity();
    for (const auto& f : A_e_list) {
        const double den = real_trace_product(f.A, S) + 1.0;
        max_den = std::max(max_den, den);
        min_den = std::min(min_den, den);
    }
    if (!(min_den > 0.0) || !(min_num > 0.0))
        throw std::domain_error("gamma_update: non-positive trace term (S or A not PSD)");
    return min_num / max_den;
}

}  // namespace lcris
