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

#include "lcris/sdp_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lcris {

namespace {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kSqrt2 = std::numbers::sqrt2;

// Isometric real coordinates of a Hermitian matrix: N diagonal entries, then
// sqrt(2)*Re and sqrt(2)*Im of every strictly-upper entry. The Euclidean dot
// product of two coordinate vectors is Re tr(P Q).
VectorXd svec(const MatrixXcd& H)
{
    const Index n = H.rows();
    VectorXd v(n * n);
    for (Index i = 0; i < n; ++i)
        v(i) = H(i, i).real();
    Index k = n;
    for (Index j = 1; j < n; ++j)
        for (Index i = 0; i < j; ++i) {
            // average the two triangles so slightly non-Hermitian input is symmetrised
            const std::complex<double> h = 0.5 * (H(i, j) + std::conj(H(j, i)));
            v(k++) = kSqrt2 * h.real();
            v(k++) = kSqrt2 * h.imag();
        }
    return v;
}

MatrixXcd smat(const VectorXd& v, Index n)
{
    MatrixXcd H(n, n);
    for (Index i = 0; i < n; ++i)
        H(i, i) = v(i);
    Index k = n;
    for (Index j = 1; j < n; ++j)
        for (Index i = 0; i < j; ++i) {
            const std::complex<double> h(v(k) / kSqrt2, v(k + 1) / kSqrt2);
            k += 2;
            H(i, j) = h;
            H(j, i) = std::conj(h);
        }
    return H;
}

MatrixXcd unit_diagonal_rescale(const MatrixXcd& Z)
{
    const Index n = Z.rows();
    VectorXd inv_sqrt(n);
    for (Index i = 0; i < n; ++i) {
        const double d = Z(i, i).real();
        inv_sqrt(i) = d > 1e-300 ? 1.0 / std::sqrt(d) : 0.0;
    }
    MatrixXcd S = inv_sqrt.asDiagonal() * Z * inv_sqrt.asDiagonal();
    for (Index i = 0; i < n; ++i)
        S(i, i) = 1.0;  // a vanishing diagonal forces a vanishing row, so e_i e_i^T keeps S PSD
    return S;
}

bool all_finite(const VectorXd& v)
{
    return v.allFinite();
}

}  // namespace

std::string_view to_string(SdpStatus s)
{
    switch (s) {
    case SdpStatus::Converged: return "Converged";
    case SdpStatus::MaxIter: return "MaxIter";
    case SdpStatus::Diverged: return "Diverged";
    }
    return "?";
}

void SdpProblem::validate() const
{
    auto check = [&](const MatrixXcd& M, const std::string& what) {
        if (M.rows() != dim || M.cols() != dim)
            throw std::invalid_argument("SdpProblem: " + what + " is not dim x dim");
        if (!M.allFinite())
            throw std::invalid_argument("SdpProblem: " + what + " has non-finite entries");
        const double scale = std::max(1.0, M.norm());
        if ((M - M.adjoint()).norm() > 1e-9 * scale)
            throw std::invalid_argument("SdpProblem: " + what + " is not Hermitian");
    };
    if (dim < 1)
        throw std::invalid_argument("SdpProblem: dim must be positive");
    check(objective, "objective");
    for (std::size_t k = 0; k < inequalities.size(); ++k) {
        check(inequalities[k].B, "inequality " + std::to_string(k));
        if (!std::isfinite(inequalities[k].bound))
            throw std::invalid_argument("SdpProblem: non-finite bound in inequality " + std::to_string(k));
    }
}

MatrixXcd psd_project(const MatrixXcd& H)
{
    if (!H.allFinite())
        throw std::domain_error("psd_project: non-finite entries");
    const MatrixXcd sym = 0.5 * (H + H.adjoint());
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(sym);
    if (es.info() != Eigen::Success)
        throw std::domain_error("psd_project: eigendecomposition failed");
    const VectorXd& lam = es.eigenvalues();
    Index first = 0;
    while (first < lam.size() && lam(first) <= 0.0)
        ++first;
    const Index k = lam.size() - first;
    if (k == 0)
        return MatrixXcd::Zero(H.rows(), H.cols());
    const MatrixXcd V = es.eigenvectors().rightCols(k) * lam.tail(k).cwiseSqrt().asDiagonal();
    return V * V.adjoint();
}

double objective_value(const MatrixXcd& S, const SdpProblem& problem)
{
    return (problem.objective.cwiseProduct(S.transpose())).sum().real() + problem.offset;
}

SdpResiduals residuals(const MatrixXcd& S, const SdpProblem& problem)
{
    if (S.rows() != problem.dim || S.cols() != problem.dim)
        throw std::invalid_argument("residuals: dimension mismatch");
    SdpResiduals r;
    for (const auto& ineq : problem.inequalities) {
        const double value = (ineq.B.cwiseProduct(S.transpose())).sum().real();
        r.max_ineq_violation = std::max(r.max_ineq_violation, ineq.bound - value);
    }
    if (problem.unit_diagonal)
        for (Index i = 0; i < S.rows(); ++i)
            r.max_diag_violation = std::max(r.max_diag_violation, std::abs(S(i, i) - 1.0));
    const MatrixXcd sym = 0.5 * (S + S.adjoint());
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(sym, Eigen::EigenvaluesOnly);
    r.min_eigenvalue = es.eigenvalues()(0);
    return r;
}

SdpSolution solve(const SdpProblem& problem, const SdpConfig& cfg,
                  const std::optional<MatrixXcd>& warm_start)
{
    problem.validate();
    if (!(cfg.tol_primal > 0.0 && cfg.tol_psd > 0.0 && cfg.tol_eq > 0.0 && cfg.step_parameter > 0.0))
        throw std::invalid_argument("SdpConfig: tolerances and step parameter must be positive");
    if (cfg.max_iterations < 1)
        throw std::invalid_argument("SdpConfig: max_iterations must be positive");

    const Index n = problem.dim;
    const Index n2 = n * n;
    const Index m = static_cast<Index>(problem.inequalities.size());
    // With a unit diagonal only the off-diagonal coordinates are free.
    const Index f0 = problem.unit_diagonal ? n : 0;
    const Index nf = n2 - f0;

    // Row-equilibrated constraint data restricted to the free coordinates.
    MatrixXd M(m, nf);
    VectorXd rhs(m);
    VectorXd row_scale(m);
    for (Index k = 0; k < m; ++k) {
        const auto& ineq = problem.inequalities[static_cast<std::size_t>(k)];
        const VectorXd b = svec(ineq.B);
        const double nb = b.norm();
        const double s = nb > 0.0 ? 1.0 / nb : 1.0;
        row_scale(k) = s;
        M.row(k) = s * b.tail(nf).transpose();
        rhs(k) = s * ineq.bound - (problem.unit_diagonal ? s * b.head(n).sum() : 0.0);
    }
    const Eigen::LLT<MatrixXd> gram(M * M.transpose() + MatrixXd::Identity(m, m));

    VectorXd c = svec(problem.objective).tail(nf);
    if (const double nc = c.norm(); nc > 0.0)
        c /= nc;

    // Full iterates: [svec coordinates (n2); slacks (m)].
    const MatrixXcd S0 = warm_start ? *warm_start : MatrixXcd::Identity(n, n);
    if (S0.rows() != n || S0.cols() != n)
        throw std::invalid_argument("solve: warm start has wrong dimensions");
    VectorXd z(n2 + m);
    z.head(n2) = svec(S0);
    z.tail(m) = (M * z.segment(f0, nf) - rhs).cwiseMax(0.0);
    VectorXd x = z;
    VectorXd w = VectorXd::Zero(n2 + m);
    VectorXd z_old = z;

    double rho = cfg.step_parameter;
    constexpr double alpha = 1.6;  // over-relaxation
    constexpr int check_every = 10;
    constexpr int adapt_every = 20;

    SdpSolution sol;
    double prev_res = -1.0;
    int rising = 0;
    std::vector<double> res_hist;
    res_hist.reserve(static_cast<std::size_t>(cfg.max_iterations));

    auto candidate = [&](const VectorXd& zz) {
        const MatrixXcd Z = smat(zz.head(n2), n);
        return problem.unit_diagonal ? unit_diagonal_rescale(Z) : Z;
    };

    constexpr double kStallFactor = 1e-3;
    constexpr int kStallChecks = 20;
    MatrixXcd S_check = candidate(z);
    int stalled = 0;

    int it = 0;
    bool converged = false;
    for (it = 1; it <= cfg.max_iterations; ++it) {
        // Affine step: diagonal assigned directly, off-diagonal and slacks by
        // projection onto {M x - t = rhs}.
        VectorXd v = z - w;
        v.segment(f0, nf) += c / rho;
        if (problem.unit_diagonal)
            v.head(n).setOnes();
        if (m > 0) {
            const VectorXd e = M * v.segment(f0, nf) - v.tail(m) - rhs;
            const VectorXd lam = gram.solve(e);
            v.segment(f0, nf) -= M.transpose() * lam;
            v.tail(m) += lam;
        }
        x = v;

        // Cone step.
        z_old = z;
        const VectorXd xr = alpha * x + (1.0 - alpha) * z_old;
        const VectorXd y = xr + w;
        z.head(n2) = svec(psd_project(smat(y.head(n2), n)));
        z.tail(m) = y.tail(m).cwiseMax(0.0);
        w += xr - z;

        if (!all_finite(z) || !all_finite(w))
            throw std::runtime_error("sdp solve: non-finite iterate at iteration " + std::to_string(it));

        const double r_prim = (x - z).norm();
        const double r_dual = rho * (z - z_old).norm();
        res_hist.push_back(r_prim);

        // Divergence: primal residual rising for 100 consecutive iterations and 10x larger.
        rising = (prev_res >= 0.0 && r_prim > prev_res) ? rising + 1 : 0;
        prev_res = r_prim;
        if (rising >= 100 && it > 100) {
            const double before = res_hist[static_cast<std::size_t>(it - 101)];
            if (r_prim > 10.0 * before && r_prim > 1e-8) {
                sol.status = SdpStatus::Diverged;
                break;
            }
        }

        if (it % check_every == 0) {
            const double scale = std::max(1.0, z.head(n2).norm());
            const double change = (z - z_old).head(n2).norm() / scale;
            // An infeasible problem leaves the cone iterate parked while the
            // scaled dual grows without bound; stop once it has stopped moving.
            const MatrixXcd S_now = candidate(z);
            const double drift = (S_now - S_check).norm() / std::max(1.0, S_now.norm());
            S_check = S_now;
            stalled = drift < kStallFactor * cfg.tol_primal ? stalled + 1 : 0;
            if (stalled >= kStallChecks)
                break;
            if (change < cfg.tol_primal && r_prim / scale < cfg.tol_primal) {
                const MatrixXcd S = candidate(z);
                const VectorXd sv = svec(S);
                const double scaled_viol = m > 0 ? (rhs - M * sv.segment(f0, nf)).maxCoeff() : 0.0;
                const SdpResiduals res = residuals(S, problem);
                if (scaled_viol <= cfg.tol_primal && res.max_ineq_violation <= cfg.tol_primal
                    && res.max_diag_violation <= cfg.tol_eq && res.min_eigenvalue >= -cfg.tol_psd) {
                    converged = true;
                    break;
                }
            }
        }

        if (it % adapt_every == 0) {
            const double nx = std::max(x.norm(), z.norm());
            const double nw = rho * w.norm();
            const double rp = nx > 0 ? r_prim / nx : r_prim;
            const double rd = nw > 0 ? r_dual / nw : r_dual;
            double factor = 1.0;
            if (rp > 10.0 * rd)
                factor = 2.0;
            else if (rd > 10.0 * rp)
                factor = 0.5;
            const double new_rho = std::clamp(rho * factor, 1e-6, 1e6);
            w *= rho / new_rho;
            rho = new_rho;
        }
    }

    sol.iterations = std::min(it, cfg.max_iterations);
    sol.S = candidate(z);
    if (converged)
        sol.status = SdpStatus::Converged;
    else if (sol.status != SdpStatus::Diverged)
        sol.status = SdpStatus::MaxIter;
    const SdpResiduals res = residuals(sol.S, problem);
    sol.primal_residual = std::max(res.max_ineq_violation, res.max_diag_violation);
    sol.objective_value = objective_value(sol.S, problem);
    return sol;
}

}  // namespace lcris
