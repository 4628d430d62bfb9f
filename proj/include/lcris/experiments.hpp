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

#ifndef LCRIS_EXPERIMENTS_HPP
#define LCRIS_EXPERIMENTS_HPP

#include "lcris/phase_optimizer.hpp"
#include "lcris/result_table.hpp"
#include "lcris/scenario.hpp"

#include <string>
#include <vector>

namespace lcris {

inline constexpr double kPowerFloor_dB = -300.0;

enum class Orientation { Horizontal, Vertical };

std::string_view to_string(Orientation o);

/// Metadata shared by every table: scenario hash, seed and a provenance line.
void stamp(ResultTable& table, const Scenario& sc, const std::string& command);

/// Columns T_celsius, omega_max_rad, range_class (0 Full, 1 Constrained,
/// 2 Unsupported). Throws std::domain_error if any T >= T_c.
ResultTable run_lc_curve(const LcParams& lc, const std::vector<double>& T_range);

struct ConvergenceRun {
    ResultTable table;  // outer_iter, inner_iter, gap, n_false, gamma
    SolveReport report;
};

ConvergenceRun run_convergence(const Scenario& sc);

/// Received power |h_eff^H q|^2 in dB (re 1 W), floored at kPowerFloor_dB.
double received_power_dB(const ScenarioChannels& ch, const Eigen::VectorXd& phases, const Vec3& p);

/// Columns x, y, power_dB on the plane grid, rows ordered x-major.
ResultTable run_heatmap(const Scenario& sc, const PhaseVector& phases, const HeatmapPlane& plane);

/// Mean of the linear received power over a box's lattice, in dB.
double mean_box_power_dB(const ScenarioChannels& ch, const Eigen::VectorXd& phases, const Box& box);

/// Copy of `sc` with the eavesdropper box (same size as the user box) moved
/// to the left of the user box (horizontal: smaller y) or below it (vertical:
/// smaller x) with the given gap between nearest points.
Scenario place_eavesdropper(const Scenario& sc, Orientation o, double gap);

struct PairedRun {
    SolveReport optimized;
    SolveReport neglect;
    double sr_optimized_bits = 0.0;  // evaluated on the scenario's evaluation channels
    double sr_neglect_bits = 0.0;
};

PairedRun run_paired(const Scenario& sc);

struct SweepRun {
    ResultTable table;  // distance, orientation (0 h, 1 v), sr_optimized_bits, sr_neglect_bits
    std::vector<PairedRun> runs;
};

SweepRun run_distance_sweep(const Scenario& tmpl, Orientation o, const std::vector<double>& distances);

}  // namespace lcris

#endif
