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

#include "lcris/geometry_channel.hpp"
#include "lcris/lc_model.hpp"
#include "support.hpp"

#include <cmath>
#include <stdexcept>

using namespace lcris;

namespace {

constexpr double kLambda = 299792458.0 / 28e9;

ArrayGeometry ris_20x10()
{
    return build_upa(20, 10, kLambda / 2, Vec3::Zero(), Vec3::UnitY(), Vec3::UnitZ(), kLambda);
}

ArrayGeometry bs_4x4()
{
    return build_upa(4, 4, kLambda / 2, Vec3(30, 0, 5), Vec3::UnitY(), Vec3::UnitZ(), kLambda);
}

// SNR by an explicit element loop: |sum_t conj(h_eff_t) q_t|^2 / sigma^2 with
// h_eff_t = sum_n conj(H_t(n,t)) exp(-j w_n) h_r(n).
double snr_loop(const Eigen::MatrixXcd& H_t, const Eigen::VectorXcd& h_r, const Eigen::VectorXd& w,
                const Eigen::VectorXcd& q, double sigma2)
{
    cplx acc = 0.0;
    for (Eigen::Index t = 0; t < H_t.cols(); ++t) {
        cplx h = 0.0;
        for (Eigen::Index n = 0; n < H_t.rows(); ++n)
            h += std::conj(H_t(n, t)) * std::polar(1.0, -w(n)) * h_r(n);
        acc += std::conj(h) * q(t);
    }
    return std::norm(acc) / sigma2;
}

}  // namespace

TEST_CASE("UPA layout is centred and row-major")
{
    const ArrayGeometry g = build_upa(3, 2, 0.5, Vec3(1, 2, 3), Vec3::UnitY(), Vec3::UnitZ(), 1.0);
    REQUIRE(g.n_elements() == 6);
    Vec3 mean = Vec3::Zero();
    for (const Vec3& p : g.element_positions)
        mean += p;
    CHECK((mean / 6.0 - Vec3(1, 2, 3)).norm() < 1e-12);
    CHECK((g.element_positions[0] - Vec3(1, 1.5, 2.75)).norm() < 1e-12);
    CHECK((g.element_positions[1] - Vec3(1, 1.5, 3.25)).norm() < 1e-12);
    CHECK((g.element_positions[2] - Vec3(1, 2.0, 2.75)).norm() < 1e-12);
}

TEST_CASE("UPA rejects bad axes and spacing")
{
    CHECK_THROWS_AS(build_upa(2, 2, 0.5, Vec3::Zero(), Vec3(1, 1, 0), Vec3::UnitZ(), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(build_upa(2, 2, 0.5, Vec3::Zero(), Vec3::UnitY(), Vec3::UnitY(), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(build_upa(2, 2, 0.0, Vec3::Zero(), Vec3::UnitY(), Vec3::UnitZ(), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(build_upa(0, 2, 0.5, Vec3::Zero(), Vec3::UnitY(), Vec3::UnitZ(), 1.0), std::invalid_argument);
}

TEST_CASE("steering vectors have unit norm and exact distance phases")
{
    const ArrayGeometry ris = ris_20x10();
    testing::Rng rng(3);
    for (int k = 0; k < 50; ++k) {
        const Vec3 p(testing::uniform(rng, 1, 40), testing::uniform(rng, -10, 10), testing::uniform(rng, -10, 10));
        const Eigen::VectorXcd a = steering_vector(ris, p);
        CHECK(a.norm() == doctest::Approx(1.0).epsilon(1e-12));
        const double d = (ris.element_positions[17] - p).norm();
        const cplx expected = std::polar(1.0 / std::sqrt(200.0), -kTwoPi / kLambda * d);
        CHECK(std::abs(a(17) - expected) < 1e-12);
    }
}

TEST_CASE("pathloss is -81 dB at 10 m with the default model")
{
    const double g = pathloss_gain(PathlossParams{}, 10.0);
    CHECK(20.0 * std::log10(g) == doctest::Approx(-81.0).epsilon(1e-12));
    CHECK(pathloss_gain(PathlossParams{}, 1.0) == doctest::Approx(std::pow(10.0, -61.0 / 20.0)));
    CHECK_THROWS_AS(pathloss_gain(PathlossParams{}, 0.0), std::invalid_argument);
}

TEST_CASE("LOS channel is rank one with Frobenius norm equal to the pathloss gain")
{
    const ArrayGeometry bs = bs_4x4();
    const ArrayGeometry ris = ris_20x10();
    const Eigen::MatrixXcd H = los_channel(bs, ris, PathlossParams{});
    REQUIRE(H.rows() == 200);
    REQUIRE(H.cols() == 16);
    const double c0 = pathloss_gain(PathlossParams{}, (bs.center - ris.center).norm());
    CHECK(H.norm() == doctest::Approx(c0).epsilon(1e-12));

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(H);
    const Eigen::VectorXd sv = svd.singularValues();
    CHECK(sv(1) < 1e-12 * sv(0));
}

TEST_CASE("Rician K = 0 matches the LOS power on average")
{
    const Eigen::MatrixXcd los = los_channel(bs_4x4(), ris_20x10(), PathlossParams{});
    double acc = 0.0;
    const int draws = 400;
    for (int s = 0; s < draws; ++s)
        acc += rician_channel(los, 0.0, mix_seed(77, static_cast<std::uint64_t>(s))).squaredNorm();
    CHECK(acc / draws == doctest::Approx(los.squaredNorm()).epsilon(0.05));
}

TEST_CASE("Rician draws are deterministic and collapse to LOS for huge K")
{
    testing::Rng rng(5);
    const Eigen::MatrixXcd los = testing::random_complex(rng, 6, 3);
    CHECK(rician_channel(los, 10.0, 9) == rician_channel(los, 10.0, 9));
    CHECK(rician_channel(los, 10.0, 9) != rician_channel(los, 10.0, 10));
    CHECK(rician_channel(los, 1e12, 9) == los);
    CHECK((rician_channel(los, 1e9, 9) - los).norm() < 1e-3 * los.norm());
    CHECK_THROWS_AS(rician_channel(los, -1.0, 9), std::invalid_argument);
}

TEST_CASE("lifted quadratic form reproduces the SNR of an explicit loop")
{
    testing::Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Index N = 1 + static_cast<Eigen::Index>(rng() % 8);
        const Eigen::Index Nt = 1 + static_cast<Eigen::Index>(rng() % 4);
        ChannelInstance inst;
        inst.H_t = testing::random_complex(rng, N, Nt);
        inst.h_r_u = testing::random_complex(rng, N);
        inst.h_r_e = testing::random_complex(rng, N);
        inst.h_d_u = Eigen::VectorXcd::Zero(Nt);
        inst.h_d_e = Eigen::VectorXcd::Zero(Nt);
        inst.noise_power = testing::uniform(rng, 0.1, 3.0);
        const Eigen::VectorXcd q = testing::random_complex(rng, Nt);
        const Eigen::VectorXd w = testing::random_phases(rng, N);
        const Eigen::VectorXcd s = testing::unit_modulus(w);

        for (Link link : {Link::User, Link::Eavesdropper}) {
            const QuadraticForm f = quadratic_form(inst, link, q);
            const double lifted = (s.adjoint() * f.A * s)(0, 0).real();
            const double direct = snr_loop(inst.H_t, inst.h_r(link), w, q, inst.noise_power);
            CAPTURE(trial);
            CHECK(std::abs(lifted - direct) <= 1e-10 * std::max(1.0, direct));
            const double via_heff = std::norm(effective_channel(inst, link, w).dot(q)) / inst.noise_power;
            CHECK(std::abs(via_heff - direct) <= 1e-10 * std::max(1.0, direct));
        }
    }
}

TEST_CASE("seed mixer separates nearby inputs")
{
    CHECK(mix_seed(1, 2) != mix_seed(2, 1));
    CHECK(mix_seed(1, 2) == mix_seed(1, 2));
    CHECK(mix_seed(0, 0) != 0);
}
