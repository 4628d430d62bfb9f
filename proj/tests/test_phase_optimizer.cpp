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

#include "lcris/phase_optimizer.hpp"
#include "support.hpp"

#include <cmath>
#include <stdexcept>

using namespace lcris;

namespace {

double spectral_norm(const Eigen::MatrixXcd& S)
{
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(S).eigenvalues().cwiseAbs().maxCoeff();
}

// Largest row value of the phase-range functional at a rank-one point.
double max_range_lhs(const std::vector<SdpInequality>& rows, const Eigen::VectorXd& w)
{
    const Eigen::VectorXcd s = testing::unit_modulus(w);
    const Eigen::MatrixXcd S = s * s.adjoint();
    double worst = -1e300;
    for (const auto& r : rows)
        worst = std::max(worst, -(r.B * S).trace().real());
    return worst;
}

Eigen::VectorXd midpoints(Eigen::Index N, double omega_max)
{
    Eigen::VectorXd w(N);
    for (Eigen::Index i = 0; i < N; ++i)
        w(i) = (static_cast<double>(i) + 0.5) / static_cast<double>(N) * omega_max;
    return w;
}

DesignProblem random_problem(testing::Rng& rng, Eigen::Index N, int users, int eves, double omega_max)
{
    DesignProblem p;
    for (int k = 0; k < users; ++k)
        p.A_u.push_back({testing::random_psd(rng, N, 1)});
    for (int k = 0; k < eves; ++k)
        p.A_e.push_back({0.3 * testing::random_psd(rng, N, 1)});
    p.omega_max = omega_max;
    p.seed = 5;
    return p;
}

bool phases_in_range(const Eigen::VectorXd& w, double omega_max)
{
    return (w.array() >= 0.0).all() && (w.array() <= omega_max).all() && (w.array() < kTwoPi).all();
}

}  // namespace

TEST_CASE("scalar phase-range inequality holds exactly on the admissible arc")
{
    for (double wm : {3.5, 4.5, 5.6}) {
        CHECK(std::abs(phase_range_lhs(0.0, wm) - 1.0) < 1e-12);
        CHECK(std::abs(phase_range_lhs(wm, wm) - 1.0) < 1e-12);
        for (double w = 0.01; w < kTwoPi; w += 0.01) {
            CAPTURE(w);
            if (w < wm - 1e-9)
                CHECK(phase_range_lhs(w, wm) < 1.0);
            else if (w > wm + 1e-9)
                CHECK(phase_range_lhs(w, wm) > 1.0);
        }
    }
}

TEST_CASE("mean conjugate phasor matches quadrature")
{
    for (double wm : {3.5, 5.0, kTwoPi}) {
        cplx acc = 0.0;
        const int n = 200000;
        for (int i = 0; i < n; ++i)
            acc += std::polar(1.0, -(i + 0.5) * wm / n);
        CHECK(std::abs(acc / static_cast<double>(n) - mean_conjugate_phasor(wm)) < 1e-9);
    }
    CHECK(std::abs(mean_conjugate_phasor(kTwoPi)) < 1e-15);
}

TEST_CASE("phase-range rows are empty for a full range and rejected below pi")
{
    CHECK(c2_constraints(kTwoPi, 10).empty());
    CHECK(c2_constraints(7.0, 10).empty());
    CHECK_THROWS_AS(c2_constraints(kPi, 10), std::domain_error);
    CHECK_THROWS_AS(c2_constraints(2.0, 10), std::domain_error);
    CHECK(c2_constraints(5.0, 10).size() == 10);
}

TEST_CASE("phase-range rows are tight for evenly spread in-range phases")
{
    // The rows replace sum_i conj(s_i) / N by its mean under a uniform spread
    // over [0, omega_max]. Midpoint phases approach the bound from below.
    for (double wm : {4.5, 5.611851975537865}) {
        double prev_slack = 1e300;
        for (Eigen::Index N : {25, 50, 100, 200, 400}) {
            const double slack = 1.0 - max_range_lhs(c2_constraints(wm, N), midpoints(N, wm));
            CAPTURE(wm);
            CAPTURE(N);
            CHECK(slack > 0.0);
            CHECK(slack < 3.0 / static_cast<double>(N));
            CHECK(slack < prev_slack);
            prev_slack = slack;
        }
    }
}

TEST_CASE("phase-range rows bind on the largest in-range phase")
{
    const double wm = 5.0;
    const Eigen::Index N = 100;
    const auto rows = c2_constraints(wm, N);
    const Eigen::VectorXcd s = testing::unit_modulus(midpoints(N, wm));
    const Eigen::MatrixXcd S = s * s.adjoint();
    Eigen::Index arg = 0;
    double best = -1e300;
    for (Eigen::Index n = 0; n < N; ++n) {
        const double v = -(rows[static_cast<std::size_t>(n)].B * S).trace().real();
        if (v > best) {
            best = v;
            arg = n;
        }
    }
    CHECK(arg == N - 1);
}

TEST_CASE("spectral linearization")
{
    Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(3, 3);
    S.diagonal() << 3.0, 1.0, 0.5;
    const SpectralLinearization lin = spectral_linearization(S);
    CHECK(std::abs(std::abs(lin.principal(0)) - 1.0) < 1e-12);
    CHECK(std::abs(lin.constant) < 1e-12);
    CHECK(lin.evaluate(S) == doctest::Approx(3.0));

    testing::Rng rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 5);
        const Eigen::MatrixXcd P = testing::random_psd(rng, n, 1 + static_cast<Eigen::Index>(rng() % n));
        const Eigen::MatrixXcd Q = testing::random_psd(rng, n, 1 + static_cast<Eigen::Index>(rng() % n));
        const SpectralLinearization l = spectral_linearization(P);
        CAPTURE(trial);
        CHECK(l.evaluate(P) == doctest::Approx(spectral_norm(P)).epsilon(1e-10));
        CHECK(l.evaluate(Q) <= spectral_norm(Q) + 1e-9 * spectral_norm(Q));
        CHECK((l.gradient - l.principal * l.principal.adjoint()).norm() < 1e-14);
    }
}

TEST_CASE("nuclear minus spectral norm")
{
    Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(3, 3);
    D.diagonal() << 3.0, -2.0, 1.0;
    CHECK(nuclear_spectral_gap(D) == doctest::Approx(3.0));

    testing::Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::MatrixXcd S = testing::random_psd(rng, 4, 4);
        CHECK(nuclear_spectral_gap(S) == doctest::Approx(S.trace().real() - spectral_norm(S)).epsilon(1e-10));
        const Eigen::VectorXcd v = testing::random_complex(rng, 4);
        CHECK(nuclear_spectral_gap(v * v.adjoint()) < 1e-10 * v.squaredNorm());
    }
}

TEST_CASE("assembled penalty subproblem layout")
{
    testing::Rng rng(1);
    const DesignProblem dp = random_problem(rng, 5, 2, 3, 4.5);
    const Eigen::MatrixXcd S_prev = testing::random_psd(rng, 5, 2);
    const SdpProblem p = assemble_p6(dp.A_u, dp.A_e, 2.0, S_prev, 0.05, dp.omega_max);
    CHECK(p.dim == 5);
    CHECK(p.unit_diagonal);
    REQUIRE(p.inequalities.size() == 2 * 3 + 5);
    CHECK((p.inequalities[0].B - (dp.A_u[0].A - 2.0 * dp.A_e[0].A)).norm() < 1e-14);
    CHECK((p.inequalities[5].B - (dp.A_u[1].A - 2.0 * dp.A_e[2].A)).norm() < 1e-14);
    CHECK(p.inequalities[0].bound == 1.0);
    CHECK(p.inequalities[6].bound == -1.0);

    const SpectralLinearization lin = spectral_linearization(S_prev);
    CHECK((p.objective - 0.05 * (lin.gradient - Eigen::MatrixXcd::Identity(5, 5))).norm() < 1e-14);
    CHECK(objective_value(S_prev, p) == doctest::Approx(-0.05 * nuclear_spectral_gap(S_prev)).epsilon(1e-10));

    CHECK(assemble_p6(dp.A_u, dp.A_e, 2.0, S_prev, 0.05, kTwoPi).inequalities.size() == 6);
    CHECK_THROWS_AS(assemble_p6(dp.A_u, {}, 2.0, S_prev, 0.05, 4.5), std::invalid_argument);
    CHECK_THROWS_AS(assemble_p6(dp.A_u, dp.A_e, 0.0, S_prev, 0.05, 4.5), std::invalid_argument);
}

TEST_CASE("extraction recovers a rank-one phase pattern up to rotation")
{
    testing::Rng rng(23);
    const double wm = 5.0;
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::VectorXd theta = testing::random_phases(rng, 8, wm - 0.5).array() + 0.3;
        const Eigen::VectorXcd s = testing::unit_modulus(theta);
        const Extraction ex = extract_phases(s * s.adjoint(), wm);
        CAPTURE(trial);
        CHECK(ex.n_false == 0);
        CHECK(phases_in_range(ex.phases.omega, wm));
        for (Eigen::Index i = 1; i < 8; ++i) {
            const double d_in = theta(i) - theta(0);
            const double d_out = ex.phases.omega(i) - ex.phases.omega(0);
            CHECK(std::abs(std::remainder(d_in - d_out, kTwoPi)) < 1e-9);
        }
    }
}

TEST_CASE("extraction from the identity gives zero phases")
{
    const Extraction ex = extract_phases(Eigen::MatrixXcd::Identity(4, 4), 4.0);
    CHECK(ex.n_false == 0);
    CHECK(ex.phases.omega.isZero());
}

TEST_CASE("extraction always yields admissible phases")
{
    testing::Rng rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const double wm = testing::uniform(rng, 3.3, kTwoPi);
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 12);
        const Extraction ex = extract_phases(testing::random_hermitian(rng, n), wm, 360);
        CAPTURE(trial);
        CHECK(phases_in_range(ex.phases.omega, wm));
        CHECK(ex.n_false >= 0);
        CHECK(ex.n_false <= n);
    }
}

TEST_CASE("extraction counts violators that no rotation removes")
{
    // Six phases spread evenly over the circle: any rotation leaves at least
    // one of them inside a 2.5 rad gap.
    Eigen::VectorXd theta(6);
    for (int i = 0; i < 6; ++i)
        theta(i) = kTwoPi * i / 6.0;
    const Eigen::VectorXcd s = testing::unit_modulus(theta);
    const Extraction ex = extract_phases(s * s.adjoint(), kTwoPi - 2.5);
    CHECK(ex.n_false >= 1);
    CHECK(phases_in_range(ex.phases.omega, kTwoPi - 2.5));
}

TEST_CASE("optimizer reports are self-consistent")
{
    testing::Rng rng(41);
    const DesignProblem dp = random_problem(rng, 4, 2, 2, 4.8);
    const SolveReport r = optimize_phases(dp, PenaltySchedule{}, SdpConfig{});
    REQUIRE(!r.iterations.empty());
    CHECK(phases_in_range(r.final_phases.omega, dp.omega_max));
    CHECK(r.secrecy_rate_bits == doctest::Approx(design_secrecy_rate(dp, r.final_phases.omega)));
    CHECK(r.gap_trace().size() == r.iterations.size());
    CHECK(r.n_false_trace().size() == r.iterations.size());
    CHECK(r.gamma_trace().size() == static_cast<std::size_t>(r.iterations.back().outer));
    CHECK(r.gamma_trace().front() == PenaltySchedule{}.gamma0);
    for (const auto& it : r.iterations) {
        CHECK(it.outer >= 1);
        CHECK(it.inner >= 1);
        CHECK(it.inner <= PenaltySchedule{}.I_max);
        CHECK(it.gap >= -1e-12);
    }
}

TEST_CASE("optimizer is deterministic for a fixed seed")
{
    testing::Rng rng(43);
    const DesignProblem dp = random_problem(rng, 4, 2, 2, 5.2);
    const SolveReport a = optimize_phases(dp, PenaltySchedule{}, SdpConfig{});
    const SolveReport b = optimize_phases(dp, PenaltySchedule{}, SdpConfig{});
    CHECK(a.final_phases.omega == b.final_phases.omega);
    CHECK(a.gap_trace() == b.gap_trace());
}

TEST_CASE("a single element is trivially solvable")
{
    DesignProblem dp;
    dp.A_u.push_back({Eigen::MatrixXcd::Constant(1, 1, 4.0)});
    dp.A_e.push_back({Eigen::MatrixXcd::Constant(1, 1, 1.0)});
    dp.omega_max = 5.0;
    const SolveReport r = optimize_phases(dp, PenaltySchedule{}, SdpConfig{});
    CHECK(r.n_false == 0);
    CHECK(r.secrecy_rate_bits == doctest::Approx(std::log2(5.0 / 2.0)));
}

TEST_CASE("full range: no false phases and the baseline coincides")
{
    testing::Rng rng(47);
    const DesignProblem dp = random_problem(rng, 4, 2, 2, kTwoPi);
    const SolveReport opt = optimize_phases(dp, PenaltySchedule{}, SdpConfig{});
    const SolveReport neg = neglect_baseline(dp, PenaltySchedule{}, SdpConfig{});
    for (int nf : opt.n_false_trace())
        CHECK(nf == 0);
    CHECK(neg.n_false == 0);
    CHECK(opt.final_phases.omega == neg.final_phases.omega);
}

TEST_CASE("neglect baseline clamps to the budget")
{
    testing::Rng rng(53);
    DesignProblem dp = random_problem(rng, 6, 2, 2, 4.0);
    const SolveReport neg = neglect_baseline(dp, PenaltySchedule{}, SdpConfig{});
    CHECK(phases_in_range(neg.final_phases.omega, 4.0));
    dp.omega_max = kTwoPi;
    const SolveReport full = optimize_phases(dp, PenaltySchedule{}, SdpConfig{});
    int expected = 0;
    for (Eigen::Index i = 0; i < 6; ++i)
        expected += full.final_phases.omega(i) > 4.0;
    CHECK(neg.n_false == expected);
}

TEST_CASE("input validation")
{
    PenaltySchedule s;
    s.multiplier = 1.0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    testing::Rng rng(2);
    const DesignProblem dp = random_problem(rng, 3, 1, 1, 3.0);
    CHECK_THROWS_AS(optimize_phases(dp, PenaltySchedule{}, SdpConfig{}), std::domain_error);
    CHECK_THROWS_AS(extract_phases(Eigen::MatrixXcd::Identity(2, 2), 4.0, 0), std::invalid_argument);
}
