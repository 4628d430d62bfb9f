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

#include "lcris/phase_optimizer.hpp"

#include "lcris/secrecy_metrics.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <random>

namespace lcris {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

namespace {

double wrap_phase(double a)
{
    double w = std::fmod(a, kTwoPi);
    if (w < 0.0)
        w += kTwoPi;
    if (w >= kTwoPi)
        w = 0.0;
    return w;
}

MatrixXcd initial_gram(Index n, double omega_max, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double span = std::min(omega_max, kTwoPi);
    VectorXcd s(n);
    for (Index i = 0; i < n; ++i)
        s(i) = std::polar(1.0, span * unif(rng));
    return s * s.adjoint();
}

}  // namespace

std::string_view to_string(SolveStatus s)
{
    return s == SolveStatus::Converged ? "Converged" : "IterationCap";
}

void PenaltySchedule::validate() const
{
    std::string bad;
    if (!(eta0 > 0.0)) bad += " eta0>0";
    if (!(multiplier > 1.0)) bad += " multiplier>1";
    if (I_max < 1) bad += " I_max>=1";
    if (J_max < 1) bad += " J_max>=1";
    if (!(eps1 > 0.0)) bad += " eps1>0";
    if (!(eps2 > 0.0)) bad += " eps2>0";
    if (!(gamma0 > 0.0)) bad += " gamma0>0";
    if (!bad.empty())
        throw std::invalid_argument("PenaltySchedule violates:" + bad);
}

Index DesignProblem::n_elements() const
{
    return A_u.empty() ? 0 : A_u.front().A.rows();
}

std::vector<double> SolveReport::gap_trace() const
{
    std::vector<double> out;
    for (const auto& r : iterations)
        out.push_back(r.gap);
    return out;
}

std::vector<int> SolveReport::n_false_trace() const
{
    std::vector<int> out;
    for (const auto& r : iterations)
        out.push_back(r.n_false);
    return out;
}

std::vector<double> SolveReport::gamma_trace() const
{
    std::vector<double> out;
    int last_outer = 0;
    for (const auto& r : iterations)
        if (r.outer != last_outer) {
            out.push_back(r.gamma);
            last_outer = r.outer;
        }
    return out;
}

double SpectralLinearization::evaluate(const MatrixXcd& S) const
{
    return constant + (principal.adjoint() * S * principal)(0, 0).real();
}

SpectralLinearization spectral_linearization(const MatrixXcd& S_prev)
{
    const MatrixXcd sym = 0.5 * (S_prev + S_prev.adjoint());
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(sym);
    if (es.info() != Eigen::Success)
        throw std::domain_error("spectral_linearization: eigendecomposition failed");
    const Index n = sym.rows();
    // For PSD input the spectral norm is the top eigenvalue.
    SpectralLinearization lin;
    lin.principal = es.eigenvectors().col(n - 1);
    lin.gradient = lin.principal * lin.principal.adjoint();
    const double top = es.eigenvalues().cwiseAbs().maxCoeff();
    lin.constant = top - (lin.principal.adjoint() * sym * lin.principal)(0, 0).real();
    return lin;
}

double nuclear_spectral_gap(const MatrixXcd& S)
{
    const MatrixXcd sym = 0.5 * (S + S.adjoint());
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(sym, Eigen::EigenvaluesOnly);
    const VectorXd mag = es.eigenvalues().cwiseAbs();
    return mag.sum() - mag.maxCoeff();
}

cplx mean_conjugate_phasor(double omega_max)
{
    const cplx j(0.0, 1.0);
    return (1.0 - std::exp(-j * omega_max)) / (j * omega_max);
}

double phase_range_lhs(double omega, double omega_max)
{
    return std::cos(omega) + std::tan(0.5 * omega_max) * std::sin(omega);
}

std::vector<SdpInequality> c2_constraints(double omega_max, Index N)
{
    if (N < 1)
        throw std::invalid_argument("c2_constraints: N must be positive");
    const RangeClass rc = classify_range(omega_max);
    if (rc.regime == RangeRegime::Unsupported)
        throw std::domain_error("c2_constraints: phase range " + std::to_string(omega_max)
                                + " rad is at or below pi");
    if (rc.regime == RangeRegime::Full)
        return {};

    const cplx j(0.0, 1.0);
    const cplx zeta = 1.0 / (static_cast<double>(N) * mean_conjugate_phasor(omega_max));
    const cplx w = (1.0 - j * std::tan(0.5 * omega_max)) * zeta;

    std::vector<SdpInequality> rows;
    rows.reserve(static_cast<std::size_t>(N));
    for (Index n = 0; n < N; ++n) {
        // Re tr(F S) with F = w * 1 e_n^T equals Re(w sum_i S_{n,i}).
        MatrixXcd F = MatrixXcd::Zero(N, N);
        F.col(n).setConstant(w);
        SdpInequality row;
        row.B = -0.5 * (F + F.adjoint());
        row.bound = -1.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

SdpProblem assemble_p6(const std::vector<QuadraticForm>& A_u, const std::vector<QuadraticForm>& A_e,
                       double gamma, const MatrixXcd& S_prev, double eta, double omega_max)
{
    if (A_u.empty() || A_e.empty())
        throw std::invalid_argument("assemble_p6: empty user or eavesdropper form list");
    if (!(gamma > 0.0))
        throw std::invalid_argument("assemble_p6: gamma must be positive");
    const Index n = A_u.front().A.rows();
    if (S_prev.rows() != n || S_prev.cols() != n)
        throw std::invalid_argument("assemble_p6: S_prev has wrong dimensions");

    const SpectralLinearization lin = spectral_linearization(S_prev);
    SdpProblem p;
    p.dim = n;
    p.objective = eta * (lin.gradient - MatrixXcd::Identity(n, n));
    p.offset = eta * lin.constant;
    p.unit_diagonal = true;

    auto c2 = c2_constraints(omega_max, n);
    p.inequalities.reserve(A_u.size() * A_e.size() + c2.size());
    for (const auto& au : A_u)
        for (const auto& ae : A_e) {
            if (au.A.rows() != n || ae.A.rows() != n)
                throw std::invalid_argument("assemble_p6: inconsistent form dimensions");
            p.inequalities.push_back({au.A - gamma * ae.A, gamma - 1.0});
        }
    for (auto& row : c2)
        p.inequalities.push_back(std::move(row));
    return p;
}

Extraction extract_phases(const MatrixXcd& S, double omega_max, int rotation_grid)
{
    if (rotation_grid < 1)
        throw std::invalid_argument("extract_phases: rotation grid must be positive");
    const Index n = S.rows();
    const SpectralLinearization lin = spectral_linearization(S);
    VectorXcd v = lin.principal;
    // Fix the eigenvector's arbitrary global phase: first nonzero entry real positive.
    for (Index i = 0; i < n; ++i)
        if (std::abs(v(i)) > 0.0) {
            v *= std::conj(v(i)) / std::abs(v(i));
            break;
        }

    VectorXd theta(n);
    for (Index i = 0; i < n; ++i)
        theta(i) = std::abs(v(i)) > 0.0 ? wrap_phase(std::arg(v(i))) : 0.0;

    auto violations = [&](double phi) {
        int count = 0;
        for (Index i = 0; i < n; ++i)
            if (wrap_phase(theta(i) + phi) > omega_max)
                ++count;
        return count;
    };

    int best_k = 0;
    int best = violations(0.0);
    for (int k = 1; k < rotation_grid && best > 0; ++k) {
        const int c = violations(kTwoPi * k / rotation_grid);
        if (c < best) {
            best = c;
            best_k = k;
        }
    }

    Extraction out;
    out.n_false = best;
    out.phases.omega.resize(n);
    const double phi = kTwoPi * best_k / rotation_grid;
    for (Index i = 0; i < n; ++i) {
        double a = wrap_phase(theta(i) + phi);
        if (a > omega_max)
            a = (a - omega_max <= kTwoPi - a) ? omega_max : 0.0;
        out.phases.omega(i) = a;
    }
    return out;
}

double design_secrecy_rate(const DesignProblem& problem, const VectorXd& phases)
{
    VectorXcd s(phases.size());
    for (Index i = 0; i < phases.size(); ++i)
        s(i) = std::polar(1.0, phases(i));
    auto form_snr = [&](const QuadraticForm& f) { return (s.adjoint() * f.A * s)(0, 0).real(); };
    double min_u = std::numeric_limits<double>::infinity();
    double max_e = 0.0;
    for (const auto& f : problem.A_u)
        min_u = std::min(min_u, form_snr(f));
    for (const auto& f : problem.A_e)
        max_e = std::max(max_e, form_snr(f));
    return secrecy_rate(min_u, max_e);
}

SolveReport optimize_phases(const DesignProblem& problem, const PenaltySchedule& schedule,
                            const SdpConfig& sdp_cfg)
{
    schedule.validate();
    if (problem.A_u.empty() || problem.A_e.empty())
        throw std::invalid_argument("optimize_phases: empty user or eavesdropper grid");
    const RangeClass rc = classify_range(problem.omega_max);
    if (rc.regime == RangeRegime::Unsupported)
        throw std::domain_error("optimize_phases: phase range " + std::to_string(problem.omega_max)
                                + " rad is at or below pi");

    const Index n = problem.n_elements();
    SolveReport report;
    MatrixXcd S = initial_gram(n, problem.omega_max, problem.seed);
    double gamma = schedule.gamma0;
    double eta = schedule.eta0;

    for (int j = 1; j <= schedule.J_max; ++j) {
        for (int i = 1; i <= schedule.I_max; ++i) {
            const SdpProblem p6 = assemble_p6(problem.A_u, problem.A_e, gamma, S, eta, problem.omega_max);
            const SdpSolution sol = solve(p6, sdp_cfg, S);

            IterationRecord rec;
            rec.outer = j;
            rec.inner = i;
            rec.gamma = gamma;
            rec.sdp_status = sol.status;
            rec.sdp_iterations = sol.iterations;
            rec.frob_change = (sol.S - S).squaredNorm();
            {
                Eigen::SelfAdjointEigenSolver<MatrixXcd> es(sol.S, Eigen::EigenvaluesOnly);
                const VectorXd mag = es.eigenvalues().cwiseAbs();
                rec.nuclear_norm = mag.sum();
                rec.gap = mag.sum() - mag.maxCoeff();
            }
            rec.n_false = extract_phases(sol.S, problem.omega_max, problem.rotation_grid).n_false;
            report.iterations.push_back(rec);
            spdlog::debug("outer {} inner {}: gamma={:.6g} gap={:.3e} n_false={} change={:.3e} sdp={} ({} it)",
                          j, i, gamma, rec.gap, rec.n_false, rec.frob_change, to_string(sol.status),
                          sol.iterations);

            if (sol.status == SdpStatus::Diverged)
                throw OptimizerError("optimize_phases: SDP diverged at outer " + std::to_string(j)
                                         + ", inner " + std::to_string(i),
                                     report);
            S = sol.S;
            eta *= schedule.multiplier;
            if (rec.frob_change < schedule.eps1)
                break;
        }

        const double gamma_new = gamma_update(S, problem.A_u, problem.A_e);
        spdlog::debug("outer {}: gamma {:.6g} -> {:.6g}", j, gamma, gamma_new);
        const bool done = std::abs(std::log2(gamma_new) - std::log2(gamma)) < schedule.eps2;
        gamma = gamma_new;
        if (done) {
            report.status = SolveStatus::Converged;
            break;
        }
    }

    const Extraction ex = extract_phases(S, problem.omega_max, problem.rotation_grid);
    report.final_phases = ex.phases;
    report.n_false = ex.n_false;
    report.final_gamma = gamma;
    report.secrecy_rate_bits = design_secrecy_rate(problem, ex.phases.omega);
    return report;
}

SolveReport neglect_baseline(const DesignProblem& problem, const PenaltySchedule& schedule,
                             const SdpConfig& sdp_cfg)
{
    if (classify_range(problem.omega_max).regime == RangeRegime::Unsupported)
        throw std::domain_error("neglect_baseline: phase range at or below pi");
    DesignProblem unconstrained = problem;
    unconstrained.omega_max = std::max(problem.omega_max, kTwoPi);
    SolveReport report = optimize_phases(unconstrained, schedule, sdp_cfg);

    int clamped = 0;
    for (Index i = 0; i < report.final_phases.omega.size(); ++i) {
        double& a = report.final_phases.omega(i);
        if (a > problem.omega_max) {
            a = problem.omega_max;
            ++clamped;
        }
    }
    report.n_false = clamped;
    report.secrecy_rate_bits = design_secrecy_rate(problem, report.final_phases.omega);
    return report;
}

}  // namespace lcris
