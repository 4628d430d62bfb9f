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

#include "lcris/scenario.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace lcris {

namespace {

using json = nlohmann::json;

constexpr double kSpeedOfLight = 299792458.0;

std::string join(const std::vector<std::string>& items)
{
    std::string out;
    for (const auto& s : items)
        out += "\n  " + s;
    return out;
}

// Walks a scenario document, filling a pre-initialised Scenario and collecting
// every problem instead of stopping at the first one.
class Reader {
public:
    explicit Reader(bool defaults) : defaults_(defaults) {}

    std::vector<std::string> problems;

    void object(const json& j, const std::string& path, const std::set<std::string>& allowed)
    {
        if (!j.is_object()) {
            problems.push_back(path + ": expected an object");
            return;
        }
        for (const auto& [key, value] : j.items())
            if (!allowed.contains(key))
                problems.push_back(path + "/" + key + ": unknown key");
    }

    // Returns the child or nullptr; records a problem if required and absent.
    const json* child(const json& j, const std::string& key, const std::string& path, bool optional = false)
    {
        if (!j.is_object())
            return nullptr;
        const auto it = j.find(key);
        if (it == j.end()) {
            if (!defaults_ && !optional)
                problems.push_back(path + "/" + key + ": required (no \"defaults\" given)");
            return nullptr;
        }
        return &*it;
    }

    void number(const json& j, const std::string& key, const std::string& path, double& out, bool optional = false)
    {
        if (const json* c = child(j, key, path, optional)) {
            if (c->is_number())
                out = c->get<double>();
            else
                problems.push_back(path + "/" + key + ": expected a number");
        }
    }

    void opt_number(const json& j, const std::string& key, const std::string& path, std::optional<double>& out)
    {
        if (const json* c = child(j, key, path, true)) {
            if (c->is_number())
                out = c->get<double>();
            else if (c->is_null())
                out.reset();
            else
                problems.push_back(path + "/" + key + ": expected a number or null");
        }
    }

    void integer(const json& j, const std::string& key, const std::string& path, int& out)
    {
        if (const json* c = child(j, key, path)) {
            if (c->is_number_integer())
                out = c->get<int>();
            else
                problems.push_back(path + "/" + key + ": expected an integer");
        }
    }

    void seed(const json& j, const std::string& key, const std::string& path, std::uint64_t& out)
    {
        if (const json* c = child(j, key, path)) {
            if (c->is_number_unsigned())
                out = c->get<std::uint64_t>();
            else if (c->is_number_integer() && c->get<std::int64_t>() >= 0)
                out = static_cast<std::uint64_t>(c->get<std::int64_t>());
            else
                problems.push_back(path + "/" + key + ": expected a non-negative integer");
        }
    }

    void vec3(const json& j, const std::string& key, const std::string& path, Vec3& out)
    {
        if (const json* c = child(j, key, path)) {
            if (c->is_array() && c->size() == 3 && std::all_of(c->begin(), c->end(), [](const json& e) { return e.is_number(); }))
                out = Vec3((*c)[0].get<double>(), (*c)[1].get<double>(), (*c)[2].get<double>());
            else
                problems.push_back(path + "/" + key + ": expected an array of 3 numbers");
        }
    }

    void range(const json& j, const std::string& key, const std::string& path, double& lo, double& hi)
    {
        if (const json* c = child(j, key, path)) {
            if (c->is_array() && c->size() == 2 && (*c)[0].is_number() && (*c)[1].is_number()) {
                lo = (*c)[0].get<double>();
                hi = (*c)[1].get<double>();
            } else {
                problems.push_back(path + "/" + key + ": expected [min, max]");
            }
        }
    }

    void grid(const json& j, const std::string& key, const std::string& path, std::array<int, 3>& out)
    {
        if (const json* c = child(j, key, path)) {
            if (c->is_array() && c->size() == 3 && std::all_of(c->begin(), c->end(), [](const json& e) { return e.is_number_integer(); }))
                for (std::size_t k = 0; k < 3; ++k)
                    out[k] = (*c)[k].get<int>();
            else
                problems.push_back(path + "/" + key + ": expected an array of 3 integers");
        }
    }

    void array_spec(const json& j, const std::string& key, const std::string& path, ArraySpec& a)
    {
        const json* c = child(j, key, path);
        if (!c)
            return;
        const std::string p = path + "/" + key;
        object(*c, p, {"center_m", "rows", "cols", "spacing_m", "axis_u", "axis_v"});
        vec3(*c, "center_m", p, a.center);
        integer(*c, "rows", p, a.rows);
        integer(*c, "cols", p, a.cols);
        number(*c, "spacing_m", p, a.spacing, true);
        vec3(*c, "axis_u", p, a.axis_u);
        vec3(*c, "axis_v", p, a.axis_v);
    }

    void box(const json& j, const std::string& key, const std::string& path, Box& b)
    {
        const json* c = child(j, key, path);
        if (!c)
            return;
        const std::string p = path + "/" + key;
        object(*c, p, {"min_m", "max_m", "grid"});
        vec3(*c, "min_m", p, b.lo);
        vec3(*c, "max_m", p, b.hi);
        grid(*c, "grid", p, b.grid);
    }

    template <class T, class F>
    void per_link(const json& j, const std::string& key, const std::string& path, PerLink<T>& links, F&& read)
    {
        const json* c = child(j, key, path);
        if (!c)
            return;
        const std::string p = path + "/" + key;
        object(*c, p, {"bs_user", "bs_ris", "ris_user"});
        read(*c, "bs_user", p, links.bs_user);
        read(*c, "bs_ris", p, links.bs_ris);
        read(*c, "ris_user", p, links.ris_user);
    }

    void pathloss(const json& j, const std::string& key, const std::string& path, PathlossParams& pl)
    {
        const json* c = child(j, key, path);
        if (!c)
            return;
        const std::string p = path + "/" + key;
        object(*c, p, {"rho_dB", "d0_m", "exponent"});
        number(*c, "rho_dB", p, pl.rho_dB);
        number(*c, "d0_m", p, pl.d0);
        number(*c, "exponent", p, pl.exponent);
    }

private:
    bool defaults_;
};

json vec_json(const Vec3& v)
{
    return json::array({v.x(), v.y(), v.z()});
}

json array_json(const ArraySpec& a)
{
    return {{"center_m", vec_json(a.center)}, {"rows", a.rows}, {"cols", a.cols}, {"spacing_m", a.spacing},
            {"axis_u", vec_json(a.axis_u)}, {"axis_v", vec_json(a.axis_v)}};
}

json box_json(const Box& b)
{
    return {{"min_m", vec_json(b.lo)}, {"max_m", vec_json(b.hi)}, {"grid", b.grid}};
}

json pathloss_json(const PathlossParams& p)
{
    return {{"rho_dB", p.rho_dB}, {"d0_m", p.d0}, {"exponent", p.exponent}};
}

void check_array(const ArraySpec& a, const std::string& name, std::vector<std::string>& bad)
{
    if (a.rows < 1 || a.cols < 1)
        bad.push_back(name + ": rows and cols must be at least 1");
    if (a.spacing < 0.0)
        bad.push_back(name + ": spacing_m must be non-negative (0 selects half a wavelength)");
    if (std::abs(a.axis_u.norm() - 1.0) > 1e-9 || std::abs(a.axis_v.norm() - 1.0) > 1e-9
        || std::abs(a.axis_u.dot(a.axis_v)) > 1e-9)
        bad.push_back(name + ": axis_u and axis_v must be orthonormal");
}

void check_box(const Box& b, const std::string& name, std::vector<std::string>& bad)
{
    bool extent = false;
    for (int k = 0; k < 3; ++k) {
        if (!(b.lo(k) <= b.hi(k)))
            bad.push_back(name + ": min_m must not exceed max_m on axis " + std::to_string(k));
        if (b.hi(k) > b.lo(k))
            extent = true;
        if (b.grid[static_cast<std::size_t>(k)] < 1)
            bad.push_back(name + ": grid entries must be at least 1");
    }
    if (!extent)
        bad.push_back(name + ": box is a single point");
}

std::uint64_t point_key(std::uint64_t seed, const Vec3& p)
{
    // Micrometre lattice so that equal positions share a draw.
    std::uint64_t h = mix_seed(seed, 0x52495355ULL);
    for (int k = 0; k < 3; ++k)
        h = mix_seed(h, static_cast<std::uint64_t>(std::llround(p(k) * 1e6)));
    return h;
}

}  // namespace

ScenarioError::ScenarioError(std::vector<std::string> problems)
    : std::runtime_error("invalid scenario:" + join(problems)), problems_(std::move(problems))
{
}

double Scenario::wavelength() const
{
    return kSpeedOfLight / carrier_frequency_Hz;
}

double Scenario::noise_power_W() const
{
    return bandwidth_Hz * std::pow(10.0, (noise_psd_dBm_per_Hz - 30.0) / 10.0) * std::pow(10.0, noise_figure_dB / 10.0);
}

double Scenario::tx_power_W() const
{
    return std::pow(10.0, (tx_power_dBm - 30.0) / 10.0);
}

double Scenario::omega_max() const
{
    return max_phase_shift(lc, temperature_C);
}

void Scenario::validate() const
{
    std::vector<std::string> bad;
    if (!(carrier_frequency_Hz > 0.0))
        bad.push_back("carrier_frequency_Hz: must be positive");
    if (!(bandwidth_Hz > 0.0))
        bad.push_back("bandwidth_Hz: must be positive");
    check_array(bs, "bs", bad);
    check_array(ris, "ris", bad);
    check_box(user_box, "user_box", bad);
    check_box(eve_box, "eve_box", bad);
    for (const auto& [name, pl] : {std::pair{"bs_user", pathloss.bs_user}, {"bs_ris", pathloss.bs_ris},
                                   {"ris_user", pathloss.ris_user}})
        if (!(pl.d0 > 0.0))
            bad.push_back(std::string("pathloss/") + name + "/d0_m: must be positive");
    for (const auto& [name, k] : {std::pair{"bs_user", rician_K.bs_user}, {"bs_ris", rician_K.bs_ris},
                                  {"ris_user", rician_K.ris_user}})
        if (!(k >= 0.0))
            bad.push_back(std::string("rician_K/") + name + ": must be non-negative");
    try {
        lc.validate();
    } catch (const std::invalid_argument& e) {
        bad.push_back(std::string("lc: ") + e.what());
    }
    if (!(temperature_C < lc.T_c))
        bad.push_back("temperature_C: must satisfy T < T_c (" + std::to_string(lc.T_c) + " C)");
    try {
        schedule.validate();
    } catch (const std::invalid_argument& e) {
        bad.push_back(std::string("schedule: ") + e.what());
    }
    if (!(sdp.tol_primal > 0.0 && sdp.tol_psd > 0.0 && sdp.tol_eq > 0.0 && sdp.step_parameter > 0.0))
        bad.push_back("sdp: tolerances and step_parameter must be positive");
    if (sdp.max_iterations < 1)
        bad.push_back("sdp/max_iterations: must be at least 1");
    if (rotation_grid < 1)
        bad.push_back("rotation_grid: must be at least 1");
    if (!(heatmap.x_lo <= heatmap.x_hi && heatmap.y_lo <= heatmap.y_hi))
        bad.push_back("heatmap: ranges must be [min, max]");
    if (!(heatmap.resolution > 0.0))
        bad.push_back("heatmap/resolution_m: must be positive");
    if (!bad.empty())
        throw ScenarioError(std::move(bad));
}

Scenario reference_scenario()
{
    Scenario sc;
    sc.bs.center = Vec3(30.0, 0.0, 5.0);
    sc.bs.rows = 4;
    sc.bs.cols = 4;
    sc.ris.center = Vec3::Zero();
    sc.ris.rows = 20;
    sc.ris.cols = 10;
    sc.user_box.lo = Vec3(4.5, -0.5, -5.0);
    sc.user_box.hi = Vec3(5.5, 0.5, -5.0);
    sc.user_box.grid = {3, 3, 1};
    sc.eve_box.lo = Vec3(4.5, -3.0, -5.0);
    sc.eve_box.hi = Vec3(5.5, -2.0, -5.0);
    sc.eve_box.grid = {3, 3, 1};
    return sc;
}

Scenario parse_scenario(std::string_view json_text, const std::string& source)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        // Translate the byte offset into line:column.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < json_text.size(); ++i) {
            if (json_text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ScenarioError({source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what()});
    }
    if (!doc.is_object())
        throw ScenarioError({source + ": top level must be an object"});

    bool defaults = false;
    if (const auto it = doc.find("defaults"); it != doc.end()) {
        if (*it != "paper")
            throw ScenarioError({source + ": /defaults: only \"paper\" is supported"});
        defaults = true;
    }
    Scenario sc = defaults ? reference_scenario() : Scenario{};

    Reader r(defaults);
    const std::string root;
    r.object(doc, "", {"defaults", "carrier_frequency_Hz", "bandwidth_Hz", "noise_figure_dB",
                       "noise_psd_dBm_per_Hz", "tx_power_dBm", "bs", "ris", "user_box", "eve_box", "pathloss",
                       "rician_K", "lc", "temperature_C", "seed", "eval_channel_mode", "schedule", "sdp",
                       "rotation_grid", "heatmap"});
    r.number(doc, "carrier_frequency_Hz", root, sc.carrier_frequency_Hz);
    r.number(doc, "bandwidth_Hz", root, sc.bandwidth_Hz);
    r.number(doc, "noise_figure_dB", root, sc.noise_figure_dB);
    r.number(doc, "noise_psd_dBm_per_Hz", root, sc.noise_psd_dBm_per_Hz);
    r.number(doc, "tx_power_dBm", root, sc.tx_power_dBm);
    r.array_spec(doc, "bs", root, sc.bs);
    r.array_spec(doc, "ris", root, sc.ris);
    r.box(doc, "user_box", root, sc.user_box);
    r.box(doc, "eve_box", root, sc.eve_box);
    r.per_link(doc, "pathloss", root, sc.pathloss,
               [&](const json& j, const std::string& k, const std::string& p, PathlossParams& pl) { r.pathloss(j, k, p, pl); });
    r.per_link(doc, "rician_K", root, sc.rician_K,
               [&](const json& j, const std::string& k, const std::string& p, double& v) { r.number(j, k, p, v); });

    if (const json* lc = r.child(doc, "lc", root)) {
        const std::string p = "/lc";
        r.object(*lc, p, {"beta", "T_c_C", "T_r_C", "delta_n0", "cell_length_over_lambda"});
        r.number(*lc, "beta", p, sc.lc.beta);
        r.number(*lc, "T_c_C", p, sc.lc.T_c);
        r.number(*lc, "T_r_C", p, sc.lc.T_r);
        r.opt_number(*lc, "delta_n0", p, sc.lc.delta_n0);
        r.opt_number(*lc, "cell_length_over_lambda", p, sc.lc.cell_length_over_lambda);
    }
    r.number(doc, "temperature_C", root, sc.temperature_C);
    r.seed(doc, "seed", root, sc.seed);
    if (const json* m = r.child(doc, "eval_channel_mode", root)) {
        if (*m == "los_only")
            sc.eval_channel_mode = EvalChannelMode::LosOnly;
        else if (*m == "rician")
            sc.eval_channel_mode = EvalChannelMode::Rician;
        else
            r.problems.push_back("/eval_channel_mode: expected \"los_only\" or \"rician\"");
    }
    if (const json* s = r.child(doc, "schedule", root)) {
        const std::string p = "/schedule";
        r.object(*s, p, {"eta0", "multiplier", "I_max", "J_max", "eps1", "eps2", "gamma0"});
        r.number(*s, "eta0", p, sc.schedule.eta0);
        r.number(*s, "multiplier", p, sc.schedule.multiplier);
        r.integer(*s, "I_max", p, sc.schedule.I_max);
        r.integer(*s, "J_max", p, sc.schedule.J_max);
        r.number(*s, "eps1", p, sc.schedule.eps1);
        r.number(*s, "eps2", p, sc.schedule.eps2);
        r.number(*s, "gamma0", p, sc.schedule.gamma0);
    }
    if (const json* s = r.child(doc, "sdp", root)) {
        const std::string p = "/sdp";
        r.object(*s, p, {"tol_primal", "tol_psd", "tol_eq", "max_iterations", "step_parameter"});
        r.number(*s, "tol_primal", p, sc.sdp.tol_primal);
        r.number(*s, "tol_psd", p, sc.sdp.tol_psd);
        r.number(*s, "tol_eq", p, sc.sdp.tol_eq);
        r.integer(*s, "max_iterations", p, sc.sdp.max_iterations);
        r.number(*s, "step_parameter", p, sc.sdp.step_parameter);
    }
    r.integer(doc, "rotation_grid", root, sc.rotation_grid);
    if (const json* h = r.child(doc, "heatmap", root)) {
        const std::string p = "/heatmap";
        r.object(*h, p, {"x_range_m", "y_range_m", "z_m", "resolution_m"});
        r.range(*h, "x_range_m", p, sc.heatmap.x_lo, sc.heatmap.x_hi);
        r.range(*h, "y_range_m", p, sc.heatmap.y_lo, sc.heatmap.y_hi);
        r.number(*h, "z_m", p, sc.heatmap.z);
        r.number(*h, "resolution_m", p, sc.heatmap.resolution);
    }

    if (!r.problems.empty()) {
        for (auto& s : r.problems)
            s = source + ": " + s;
        throw ScenarioError(std::move(r.problems));
    }
    try {
        sc.validate();
    } catch (const ScenarioError& e) {
        std::vector<std::string> bad = e.problems();
        for (auto& s : bad)
            s = source + ": " + s;
        throw ScenarioError(std::move(bad));
    }
    return sc;
}

Scenario load_scenario(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ScenarioError({path.string() + ": cannot open file"});
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), path.string());
}

std::string canonical_json(const Scenario& sc)
{
    json lc = {{"beta", sc.lc.beta}, {"T_c_C", sc.lc.T_c}, {"T_r_C", sc.lc.T_r}};
    lc["delta_n0"] = sc.lc.delta_n0 ? json(*sc.lc.delta_n0) : json(nullptr);
    lc["cell_length_over_lambda"] = sc.lc.cell_length_over_lambda ? json(*sc.lc.cell_length_over_lambda) : json(nullptr);
    const json doc = {
        {"carrier_frequency_Hz", sc.carrier_frequency_Hz},
        {"bandwidth_Hz", sc.bandwidth_Hz},
        {"noise_figure_dB", sc.noise_figure_dB},
        {"noise_psd_dBm_per_Hz", sc.noise_psd_dBm_per_Hz},
        {"tx_power_dBm", sc.tx_power_dBm},
        {"bs", array_json(sc.bs)},
        {"ris", array_json(sc.ris)},
        {"user_box", box_json(sc.user_box)},
        {"eve_box", box_json(sc.eve_box)},
        {"pathloss", {{"bs_user", pathloss_json(sc.pathloss.bs_user)},
                      {"bs_ris", pathloss_json(sc.pathloss.bs_ris)},
                      {"ris_user", pathloss_json(sc.pathloss.ris_user)}}},
        {"rician_K", {{"bs_user", sc.rician_K.bs_user}, {"bs_ris", sc.rician_K.bs_ris}, {"ris_user", sc.rician_K.ris_user}}},
        {"lc", lc},
        {"temperature_C", sc.temperature_C},
        {"seed", sc.seed},
        {"eval_channel_mode", sc.eval_channel_mode == EvalChannelMode::LosOnly ? "los_only" : "rician"},
        {"schedule", {{"eta0", sc.schedule.eta0}, {"multiplier", sc.schedule.multiplier}, {"I_max", sc.schedule.I_max},
                      {"J_max", sc.schedule.J_max}, {"eps1", sc.schedule.eps1}, {"eps2", sc.schedule.eps2},
                      {"gamma0", sc.schedule.gamma0}}},
        {"sdp", {{"tol_primal", sc.sdp.tol_primal}, {"tol_psd", sc.sdp.tol_psd}, {"tol_eq", sc.sdp.tol_eq},
                 {"max_iterations", sc.sdp.max_iterations}, {"step_parameter", sc.sdp.step_parameter}}},
        {"rotation_grid", sc.rotation_grid},
        {"heatmap", {{"x_range_m", {sc.heatmap.x_lo, sc.heatmap.x_hi}}, {"y_range_m", {sc.heatmap.y_lo, sc.heatmap.y_hi}},
                     {"z_m", sc.heatmap.z}, {"resolution_m", sc.heatmap.resolution}}},
    };
    return doc.dump();
}

std::uint64_t scenario_hash(const Scenario& sc)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char c : canonical_json(sc)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

ScenarioChannels::ScenarioChannels(const Scenario& sc) : sc_(sc)
{
    sc.validate();
    const double lambda = sc.wavelength();
    auto build = [&](const ArraySpec& a) {
        const double d = a.spacing > 0.0 ? a.spacing : 0.5 * lambda;
        return build_upa(a.rows, a.cols, d, a.center, a.axis_u, a.axis_v, lambda);
    };
    bs_ = build(sc.bs);
    ris_ = build(sc.ris);
    noise_ = sc.noise_power_W();
    q_ = los_beamformer(bs_, ris_.center, sc.tx_power_W());
    H_t_los_ = los_channel(bs_, ris_, sc.pathloss.bs_ris);
    H_t_eval_ = sc.eval_channel_mode == EvalChannelMode::Rician
                    ? rician_channel(H_t_los_, sc.rician_K.bs_ris, mix_seed(sc.seed, 0x42535249ULL))
                    : H_t_los_;
}

Eigen::VectorXcd ScenarioChannels::ris_to_point_los(const Vec3& p) const
{
    return los_channel(ris_, point_geometry(p, sc_.wavelength()), sc_.pathloss.ris_user).adjoint().col(0);
}

Eigen::VectorXcd ScenarioChannels::ris_to_point_eval(const Vec3& p) const
{
    if (sc_.eval_channel_mode == EvalChannelMode::LosOnly)
        return ris_to_point_los(p);
    const Eigen::MatrixXcd los = los_channel(ris_, point_geometry(p, sc_.wavelength()), sc_.pathloss.ris_user);
    return rician_channel(los, sc_.rician_K.ris_user, point_key(sc_.seed, p)).adjoint().col(0);
}

ChannelInstance ScenarioChannels::design(const Vec3& user, const Vec3& eve) const
{
    ChannelInstance inst;
    inst.H_t = H_t_los_;
    inst.h_r_u = ris_to_point_los(user);
    inst.h_r_e = ris_to_point_los(eve);
    inst.h_d_u = Eigen::VectorXcd::Zero(bs_.n_elements());
    inst.h_d_e = Eigen::VectorXcd::Zero(bs_.n_elements());
    inst.noise_power = noise_;
    return inst;
}

ChannelInstance ScenarioChannels::evaluation(const Vec3& user, const Vec3& eve) const
{
    ChannelInstance inst;
    inst.H_t = H_t_eval_;
    inst.h_r_u = ris_to_point_eval(user);
    inst.h_r_e = ris_to_point_eval(eve);
    inst.h_d_u = Eigen::VectorXcd::Zero(bs_.n_elements());
    inst.h_d_e = Eigen::VectorXcd::Zero(bs_.n_elements());
    inst.noise_power = noise_;
    return inst;
}

InstanceBuilder ScenarioChannels::design_builder() const
{
    return [this](const Vec3& u, const Vec3& e) { return design(u, e); };
}

InstanceBuilder ScenarioChannels::evaluation_builder() const
{
    return [this](const Vec3& u, const Vec3& e) { return evaluation(u, e); };
}

DesignProblem make_design_problem(const Scenario& sc, const ScenarioChannels& ch)
{
    const PositionGrid users = make_grid(sc.user_box, GridLabel::UserArea);
    const PositionGrid eves = make_grid(sc.eve_box, GridLabel::EveArea);
    DesignProblem dp;
    for (const Vec3& pu : users.points)
        dp.A_u.push_back(quadratic_form(ch.design(pu, eves.points.front()), Link::User, ch.beamformer().q));
    for (const Vec3& pe : eves.points)
        dp.A_e.push_back(quadratic_form(ch.design(users.points.front(), pe), Link::Eavesdropper, ch.beamformer().q));
    dp.omega_max = sc.omega_max();
    dp.seed = sc.seed;
    dp.rotation_grid = sc.rotation_grid;
    return dp;
}

}  // namespace lcris
