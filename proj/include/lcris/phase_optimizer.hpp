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

#ifndef LCRIS_PHASE_OPTIMIZER_HPP
#define LCRIS_PHASE_OPTIMIZER_HPP

#include "lcris/geometry_channel.hpp"
#include "lcris/lc_model.hpp"
#include "lcris/sdp_core.hpp"

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace lcris {

// RIS phases in radians, each in [0, 2*pi).
struct PhaseVector {
    Eigen::VectorXd omega;
};

struct PenaltySchedule {
    double eta0 = 0.01;
    double multiplier = 5.0;
    int I_max = 12;
    int J_max = 4;
    double eps1 = 0.01;  // inner stop on ||S_i - S_{i-1}||_F^2
    double eps2 = 0.1;   // outer stop on |log2 gamma_j - log2 gamma_{j-1}|
    double gamma0 = 1e3;

    void validate() const;
};

// Everything the optimizer needs about one design instance. A_u holds one
// form per user grid point, A_e one per eavesdropper grid point.
struct DesignProblem {
    std::vector<QuadraticForm> A_u;
    std::vector<QuadraticForm> A_e;
    double omega_max = kTwoPi;
    std::uint64_t seed = 0;
    int rotation_grid = 720;

    Eigen::Index n_elements() const;
};

struct IterationRecord {
    int outer = 0;
    int inner = 0;
    double gap = 0.0;           // ||S||_* - ||S||_2
    double nuclear_norm = 0.0;
    int n_false = 0;
    double gamma = 0.0;         // gamma the inner problem was solved for
    double frob_change = 0.0;   // ||S_i - S_{i-1}||_F^2
    SdpStatus sdp_status = SdpStatus::MaxIter;
    int sdp_iterations = 0;
};

enum class SolveStatus { Converged, IterationCap };

std::string_view to_string(SolveStatus s);

struct SolveReport {
    PhaseVector final_phases;
    double final_gamma = 0.0;
    double secrecy_rate_bits = 0.0;
    int n_false = 0;
    std::vector<IterationRecord> iterations;
    SolveStatus status = SolveStatus::IterationCap;

    std::vector<double> gap_trace() const;
    std::vector<int> n_false_trace() const;
    std::vector<double> gamma_trace() const;  // one entry per outer iteration
};

// Raised when an inner SDP diverges; carries the traces recorded so far.
class OptimizerError : public std::runtime_error {
public:
    OptimizerError(const std::string& what, SolveReport partial)
        : std::runtime_error(what), partial_(std::move(partial)) {}
    const SolveReport& partial() const { return partial_; }

private:
    SolveReport partial_;
};

// Affine lower bound ||S||_2 >= ||S_prev||_2 + tr(g g^H (S - S_prev)).
struct SpectralLinearization {
    Eigen::VectorXcd principal;   // unit-norm principal eigenvector g
    Eigen::MatrixXcd gradient;    // g g^H
    double constant = 0.0;        // ||S_prev||_2 - g^H S_prev g

    double evaluate(const Eigen::MatrixXcd& S) const;
};

/// Ties among top eigenvalues resolve to the last eigenvector in the
/// solver's ascending order.
SpectralLinearization spectral_linearization(const Eigen::MatrixXcd& S_prev);

/// Sum of absolute eigenvalues minus the largest absolute eigenvalue.
double nuclear_spectral_gap(const Eigen::MatrixXcd& S);

/// E[exp(-j omega)] for omega uniform on [0, omega_max].
cplx mean_conjugate_phasor(double omega_max);

/// Re((1 - j tan(omega_max/2)) exp(j omega)). For pi < omega_max < 2*pi and
/// omega in [0, 2*pi) this is <= 1 exactly when omega <= omega_max.
double phase_range_lhs(double omega, double omega_max);

/// Convex phase-range rows Re((1 - j tan(w/2)) zeta sum_i S_{n,i}) <= 1 with
/// zeta = j w / (N (1 - exp(-j w))), in solver form. Empty when w >= 2*pi;
/// throws std::domain_error when w <= pi.
std::vector<SdpInequality> c2_constraints(double omega_max, Eigen::Index N);

/// One penalty subproblem: maximize eta*(g^H S g - tr S) subject to
/// tr((A_u - gamma A_e) S) >= gamma - 1 for every pair, the phase-range rows,
/// unit diagonal and S >= 0.
SdpProblem assemble_p6(const std::vector<QuadraticForm>& A_u, const std::vector<QuadraticForm>& A_e,
                       double gamma, const Eigen::MatrixXcd& S_prev, double eta, double omega_max);

struct Extraction {
    PhaseVector phases;
    int n_false = 0;  // entries above omega_max before clamping
};

/// Principal eigenvector -> unit-modulus phases, best global rotation on a
/// `rotation_grid`-point grid (fewest entries above omega_max, first wins),
/// then remaining violators clamped to the circularly nearer of 0 and
/// omega_max. Any Hermitian input yields a valid phase vector.
Extraction extract_phases(const Eigen::MatrixXcd& S, double omega_max, int rotation_grid = 720);

/// Worst-case secrecy rate in bits from the lifted forms, clamped at 0.
double design_secrecy_rate(const DesignProblem& problem, const Eigen::VectorXd& phases);

SolveReport optimize_phases(const DesignProblem& problem, const PenaltySchedule& schedule,
                            const SdpConfig& sdp_cfg);

/// Design as if the full 2*pi range were available, then clamp every phase
/// above problem.omega_max down to it.
SolveReport neglect_baseline(const DesignProblem& problem, const PenaltySchedule& schedule,
                             const SdpConfig& sdp_cfg);

}  // namespace lcris

#endif
