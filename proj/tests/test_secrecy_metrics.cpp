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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lcris/secrecy_metrics.hpp"
#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

using namespace lcris;

namespace {

// Channels that depend only on the receiver's own position, drawn from a
// per-position seed so repeated lookups agree.
struct PositionChannels {
    Eigen::Index N = 4, Nt = 3;
    Eigen::MatrixXcd H_t;
    std::uint64_t salt = 0;

    Eigen::VectorXcd at(const Vec3& p) const
    {
        const auto key = static_cast<std::uint64_t>(std::llround(p(0) * 1000) * 1000003
                                                    + std::llround(p(1) * 1000) * 10007
                                                    + std::llround(p(2) * 1000));
        testing::Rng rng(mix_seed(salt, key));
        return testing::random_complex(rng, N);
    }

    InstanceBuilder builder() const
    {
        return [this](const Vec3& u, const Vec3& e) {
            ChannelInstance inst;
            inst.H_t = H_t;
            inst.h_r_u = at(u);
            inst.h_r_e = at(e);
            inst.h_d_u = Eigen::VectorXcd::Zero(Nt);
            inst.h_d_e = Eigen::VectorXcd::Zero(Nt);
            inst.noise_power = 0.5;
            return inst;
        };
    }
};

}  // namespace

TEST_CASE("grid includes the box corners")
{
    const Box box{Vec3(4.5, -0.5, -5), Vec3(5.5, 0.5, -5), {3, 3, 1}};
    const PositionGrid g = make_grid(box, GridLabel::UserArea);
    REQUIRE(g.points.size() == 9);
    CHECK((g.points.front() - Vec3(4.5, -0.5, -5)).norm() < 1e-12);
    CHECK((g.points.back() - Vec3(5.5, 0.5, -5)).norm() < 1e-12);
    CHECK((g.points[4] - Vec3(5.0, 0.0, -5)).norm() < 1e-12);
    for (const Vec3& p : g.points)
        CHECK(box.contains(p));
}

TEST_CASE("degenerate axes collapse to the midpoint")
{
    const Box box{Vec3(0, 0, 1), Vec3(2, 0, 1), {2, 4, 4}};
    const PositionGrid g = make_grid(box, GridLabel::EveArea);
    REQUIRE(g.points.size() == 2);
    CHECK(g.label == GridLabel::EveArea);
    CHECK_THROWS_AS(make_grid(Box{Vec3(1, 0, 0), Vec3(0, 0, 0), {1, 1, 1}}, GridLabel::UserArea),
                    std::invalid_argument);
}

TEST_CASE("secrecy rate is clamped at zero")
{
    CHECK(secrecy_rate(3.0, 1.0) == doctest::Approx(1.0));
    CHECK(secrecy_rate(1.0, 3.0) == 0.0);
    CHECK(secrecy_rate(0.0, 0.0) == 0.0);
}

TEST_CASE("worst-case rate equals the minimum over all position pairs")
{
    testing::Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        PositionChannels pc;
        pc.salt = static_cast<std::uint64_t>(trial);
        pc.H_t = testing::random_complex(rng, pc.N, pc.Nt);
        const InstanceBuilder b = pc.builder();
        const PositionGrid users = make_grid({Vec3(0, 0, 0), Vec3(1, 1, 0), {2, 3, 1}}, GridLabel::UserArea);
        const PositionGrid eves = make_grid({Vec3(3, 0, 0), Vec3(4, 1, 0), {3, 2, 1}}, GridLabel::EveArea);
        const Eigen::VectorXd w = testing::random_phases(rng, pc.N);
        const Beamformer q{testing::random_complex(rng, pc.Nt), 1.0};

        double oracle = std::numeric_limits<double>::infinity();
        for (const Vec3& pu : users.points)
            for (const Vec3& pe : eves.points) {
                const ChannelInstance inst = b(pu, pe);
                const double su = snr(effective_channel(inst, Link::User, w), q, inst.noise_power);
                const double se = snr(effective_channel(inst, Link::Eavesdropper, w), q, inst.noise_power);
                oracle = std::min(oracle, secrecy_rate(su, se));
            }
        CAPTURE(trial);
        CHECK(worst_case_secrecy_rate(b, w, q, users, eves) == doctest::Approx(oracle).epsilon(1e-12));
    }
}

TEST_CASE("gamma update matches brute-force pair enumeration")
{
    testing::Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index N = 2 + static_cast<Eigen::Index>(rng() % 5);
        std::vector<QuadraticForm> Au, Ae;
        for (int k = 0; k < 3; ++k)
            Au.push_back({testing::random_psd(rng, N, 1)});
        for (int k = 0; k < 4; ++k)
            Ae.push_back({testing::random_psd(rng, N, 1)});
        const Eigen::MatrixXcd S = testing::random_psd(rng, N, N);

        double oracle = std::numeric_limits<double>::infinity();
        for (const auto& u : Au)
            for (const auto& e : Ae)
                oracle = std::min(oracle, ((u.A * S).trace().real() + 1.0) / ((e.A * S).trace().real() + 1.0));
        CHECK(gamma_update(S, Au, Ae) == doctest::Approx(oracle).epsilon(1e-12));
    }
}

TEST_CASE("gamma update rejects non-PSD inputs")
{
    const Eigen::MatrixXcd S = -10.0 * Eigen::MatrixXcd::Identity(2, 2);
    std::vector<QuadraticForm> A{{Eigen::MatrixXcd::Identity(2, 2)}};
    CHECK_THROWS_AS(gamma_update(S, A, A), std::domain_error);
    CHECK_THROWS_AS(gamma_update(S, {}, A), std::invalid_argument);
}

TEST_CASE("LOS beamformer beats random beamformers of equal power")
{
    constexpr double lambda = 0.0107;
    const ArrayGeometry bs = build_upa(4, 4, lambda / 2, Vec3(30, 0, 5), Vec3::UnitY(), Vec3::UnitZ(), lambda);
    const ArrayGeometry ris = build_upa(6, 3, lambda / 2, Vec3::Zero(), Vec3::UnitY(), Vec3::UnitZ(), lambda);
    const Eigen::MatrixXcd H_t = los_channel(bs, ris, PathlossParams{});
    const Beamformer best = los_beamformer(bs, ris.center, 2.0);
    CHECK(best.q.squaredNorm() == doctest::Approx(2.0));

    testing::Rng rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::VectorXcd h_r = testing::random_complex(rng, 18);
        const Eigen::VectorXd w = testing::random_phases(rng, 18);
        ChannelInstance inst{H_t, h_r, h_r, Eigen::VectorXcd::Zero(16), Eigen::VectorXcd::Zero(16), 1.0};
        const Eigen::VectorXcd h = effective_channel(inst, Link::User, w);
        Eigen::VectorXcd r = testing::random_complex(rng, 16);
        r *= std::sqrt(2.0) / r.norm();
        CHECK(snr(h, best, 1.0) >= snr(h, Beamformer{r, 2.0}, 1.0) * (1 - 1e-12));
    }
}

TEST_CASE("real trace product")
{
    testing::Rng rng(2);
    const Eigen::MatrixXcd A = testing::random_hermitian(rng, 4);
    const Eigen::MatrixXcd S = testing::random_hermitian(rng, 4);
    CHECK(real_trace_product(A, S) == doctest::Approx((A * S).trace().real()).epsilon(1e-12));
    CHECK_THROWS_AS(real_trace_product(A, Eigen::MatrixXcd::Zero(3, 3)), std::invalid_argument);
}
