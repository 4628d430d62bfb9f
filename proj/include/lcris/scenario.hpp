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

#ifndef LCRIS_SCENARIO_HPP
#define LCRIS_SCENARIO_HPP

#include "lcris/geometry_channel.hpp"
#include "lcris/lc_model.hpp"
#include "lcris/phase_optimizer.hpp"
#include "lcris/sdp_core.hpp"
#include "lcris/secrecy_metrics.hpp"

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lcris {

struct ArraySpec {
    Vec3 center = Vec3::Zero();
    int rows = 1;
    int cols = 1;
    double spacing = 0.0;  // meters; 0 means half a wavelength
    Vec3 axis_u = Vec3::UnitY();
    Vec3 axis_v = Vec3::UnitZ();
};

template <class T>
struct PerLink {
    T bs_user;
    T bs_ris;
    T ris_user;
};

enum class EvalChannelMode { LosOnly, Rician };

struct HeatmapPlane {
    double x_lo = 2.0, x_hi = 8.0;
    double y_lo = -4.0, y_hi = 4.0;
    double z = -5.0;
    double resolution = 0.1;
};

struct Scenario {
    double carrier_frequency_Hz = 28e9;
    double bandwidth_Hz = 20e6;
    double noise_figure_dB = 6.0;
    double noise_psd_dBm_per_Hz = -174.0;
    double tx_power_dBm = 40.0;
    ArraySpec bs;
    ArraySpec ris;
    Box user_box;
    Box eve_box;
    PerLink<PathlossParams> pathloss;
    PerLink<double> rician_K{0.0, 10.0, 10.0};
    LcParams lc;
    double temperature_C = 57.0;
    std::uint64_t seed = 1;
    EvalChannelMode eval_channel_mode = EvalChannelMode::LosOnly;
    PenaltySchedule schedule;
    SdpConfig sdp;
    int rotation_grid = 720;
    HeatmapPlane heatmap;

    double wavelength() const;
    double noise_power_W() const;  // W * N0 * N_f
    double tx_power_W() const;
    double omega_max() const;

    // Throws ScenarioError listing every violated invariant.
    void validate() const;
};

class ScenarioError : public std::runtime_error {
public:
    explicit ScenarioError(std::vector<std::string> problems);
    const std::vector<std::string>& problems() const { return problems_; }

private:
    std::vector<std::string> problems_;
};

/// Desk-independent reference configuration: BS 4x4 at [30,0,5], RIS 20x10 at
/// the origin, 3x3 grids over 1 m x 1 m boxes at z = -5, eavesdropper box
/// 1.5 m to the left of the user box.
Scenario reference_scenario();

/// Parses a scenario document. With "defaults": "paper" omitted fields take
/// the reference values; without it every field is required. Unknown keys
/// are rejected.
Scenario parse_scenario(std::string_view json_text, const std::string& source = "<string>");
Scenario load_scenario(const std::filesystem::path& path);

/// Canonical JSON of the fully resolved scenario (sorted keys, no whitespace).
std::string canonical_json(const Scenario& sc);

/// 64-bit FNV-1a of canonical_json.
std::uint64_t scenario_hash(const Scenario& sc);

/// Geometry, beamformer and channel builders derived from a scenario. The
/// design channels are pure LOS; the evaluation channels follow
/// eval_channel_mode, with diffuse draws seeded per position.
class ScenarioChannels {
public:
    explicit ScenarioChannels(const Scenario& sc);

    const ArrayGeometry& bs() const { return bs_; }
    const ArrayGeometry& ris() const { return ris_; }
    const Beamformer& beamformer() const { return q_; }
    double noise_power() const { return noise_; }
    const Eigen::MatrixXcd& H_t_eval() const { return H_t_eval_; }

    ChannelInstance design(const Vec3& user, const Vec3& eve) const;
    ChannelInstance evaluation(const Vec3& user, const Vec3& eve) const;
    InstanceBuilder design_builder() const;
    InstanceBuilder evaluation_builder() const;

    // RIS -> point channel as an N-vector h_r (cascaded row h_r^H Gamma H_t).
    Eigen::VectorXcd ris_to_point_los(const Vec3& p) const;
    Eigen::VectorXcd ris_to_point_eval(const Vec3& p) const;

private:
    Scenario sc_;
    ArrayGeometry bs_;
    ArrayGeometry ris_;
    Beamformer q_;
    double noise_ = 1.0;
    Eigen::MatrixXcd H_t_los_;
    Eigen::MatrixXcd H_t_eval_;
};

/// Lifted forms for every grid point plus the phase budget at the scenario
/// temperature.
DesignProblem make_design_problem(const Scenario& sc, const ScenarioChannels& ch);

}  // namespace lcris

#endif
