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

#ifndef LCRIS_SDP_CORE_HPP
#define LCRIS_SDP_CORE_HPP

#include <Eigen/Dense>

#include <optional>
#include <string_view>
#include <vector>

namespace lcris {

// Re tr(B S) >= bound
struct SdpInequality {
    Eigen::MatrixXcd B;
    double bound = 0.0;
};

// maximize Re tr(C S) + offset
// s.t.     Re tr(B_k S) >= b_k, diag(S) = 1 (when unit_diagonal), S >= 0
struct SdpProblem {
    Eigen::Index dim = 0;
    Eigen::MatrixXcd objective;
    std::vector<SdpInequality> inequalities;
    bool unit_diagonal = true;
    double offset = 0.0;

    void validate() const;
};

struct SdpConfig {
    double tol_primal = 1e-4;
    double tol_psd = 1e-6;
    double tol_eq = 1e-6;
    int max_iterations = 20000;
    double step_parameter = 1.0;  // initial ADMM penalty rho
};

enum class SdpStatus { Converged, MaxIter, Diverged };

std::string_view to_string(SdpStatus s);

struct SdpSolution {
    Eigen::MatrixXcd S;
    double objective_value = 0.0;
    double primal_residual = 0.0;
    int iterations = 0;
    SdpStatus status = SdpStatus::MaxIter;
};

struct SdpResiduals {
    double max_ineq_violation = 0.0;  // max_k max(0, b_k - Re tr(B_k S))
    double max_diag_violation = 0.0;  // max_i |S_ii - 1|, 0 without the unit-diagonal flag
    double min_eigenvalue = 0.0;
};

/// Frobenius-nearest PSD matrix: symmetrise, then clip negative eigenvalues.
/// Throws std::domain_error on non-finite input.
Eigen::MatrixXcd psd_project(const Eigen::MatrixXcd& H);

SdpResiduals residuals(const Eigen::MatrixXcd& S, const SdpProblem& problem);

double objective_value(const Eigen::MatrixXcd& S, const SdpProblem& problem);

/// ADMM splitting between the affine set {diag = 1, B(S) - t = b} and the
/// cone PSD x R+^m. Cold start is the identity. The returned S is the cone
/// iterate rescaled to unit diagonal, so it is always PSD; for MaxIter it is
/// the last such iterate. Throws std::runtime_error on a non-finite iterate.
SdpSolution solve(const SdpProblem& problem, const SdpConfig& cfg,
                  const std::optional<Eigen::MatrixXcd>& warm_start = std::nullopt);

}  // namespace lcris

#endif
