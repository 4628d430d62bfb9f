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

#include "lcris/experiments.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

namespace lcris {

namespace {

constexpr const char* kVersion = "lcris 0.1.0";

// Runs fn(i) for i in [0, n) on a small worker pool. Results must be written
// to index-addressed slots, so completion order never affects output.
template <class F>
void parallel_for(std::size_t n, F&& fn)
{
    const std::size_t workers = std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            }
        });
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

std::vector<double> axis_points(double lo, double hi, double step)
{
    const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = lo + static_cast<double>(i) * step;
    return v;
}

std::string hex64(std::uint64_t v)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace

std::string_view to_string(Orientation o)
{
    return o == Orientation::Horizontal ? "h" : "v";
}

void stamp(ResultTable& table, const Scenario& sc, const std::string& command)
{
    table.set_meta("scenario_hash", hex64(scenario_hash(sc)));
    table.set_meta("seed", std::to_string(sc.seed));
    table.set_meta("provenance", std::string(kVersion) + " " + command);
}

ResultTable run_lc_curve(const LcParams& lc, const std::vector<double>& T_range)
{
    lc.validate();
    for (double T : T_range)
        if (!(T < lc.T_c))
            throw std::domain_error("run_lc_curve: temperature " + format_double(T) + " C is not below T_c");
    ResultTable t({"T_celsius", "omega_max_rad", "range_class"});
    for (double T : T_range) {
        const double w = max_phase_shift(lc, T);
        t.add_row({T, w, static_cast<double>(classify_range(w).regime)});
    }
    return t;
}

ConvergenceRun run_convergence(const Scenario& sc)
{
    const ScenarioChannels ch(sc);
    const DesignProblem dp = make_design_problem(sc, ch);
    ConvergenceRun run{ResultTable({"outer_iter", "inner_iter", "gap", "n_false", "gamma"}),
                       optimize_phases(dp, sc.schedule, sc.sdp)};
    for (const auto& r : run.report.iterations)
        run.table.add_row({static_cast<double>(r.outer), static_cast<double>(r.inner), r.gap,
                           static_cast<double>(r.n_false), r.gamma});
    stamp(run.table, sc, "convergence");
    run.table.set_meta("status", std::string(to_string(run.report.status)));
    run.table.set_meta("final_gamma", format_double(run.report.final_gamma));
    run.table.set_meta("secrecy_rate_bits", format_double(run.report.secrecy_rate_bits));
    return run;
}

double received_power_dB(const ScenarioChannels& ch, const Eigen::VectorXd& phases, const Vec3& p)
{
    ChannelInstance inst;
    inst.H_t = ch.H_t_eval();
    inst.h_r_u = ch.ris_to_point_eval(p);
    inst.h_r_e = inst.h_r_u;
    inst.h_d_u = Eigen::VectorXcd::Zero(ch.bs().n_elements());
    inst.h_d_e = inst.h_d_u;
    const double power = std::norm(effective_channel(inst, Link::User, phases).dot(ch.beamformer().q));
    return power > 0.0 ? std::max(kPowerFloor_dB, 10.0 * std::log10(power)) : kPowerFloor_dB;
}

ResultTable run_heatmap(const Scenario& sc, const PhaseVector& phases, const HeatmapPlane& plane)
{
    if (!(plane.resolution > 0.0) || plane.x_hi < plane.x_lo || plane.y_hi < plane.y_lo)
        throw std::invalid_argument("run_heatmap: invalid plane grid");
    const ScenarioChannels ch(sc);
    if (phases.omega.size() != ch.ris().n_elements())
        throw std::invalid_argument("run_heatmap: phase vector length does not match the RIS");
    const auto xs = axis_points(plane.x_lo, plane.x_hi, plane.resolution);
    const auto ys = axis_points(plane.y_lo, plane.y_hi, plane.resolution);
    std::vector<double> power(xs.size() * ys.size());
    parallel_for(power.size(), [&](std::size_t k) {
        const Vec3 p(xs[k / ys.size()], ys[k % ys.size()], plane.z);
        power[k] = received_power_dB(ch, phases.omega, p);
    });
    ResultTable t({"x", "y", "power_dB"});
    for (std::size_t k = 0; k < power.size(); ++k)
        t.add_row({xs[k / ys.size()], ys[k % ys.size()], power[k]});
    stamp(t, sc, "heatmap");
    return t;
}

double mean_box_power_dB(const ScenarioChannels& ch, const Eigen::VectorXd& phases, const Box& box)
{
    const PositionGrid g = make_grid(box, GridLabel::EveArea);
    double sum = 0.0;
    for (const Vec3& p : g.points)
        sum += std::pow(10.0, received_power_dB(ch, phases, p) / 10.0);
    const double mean = sum / static_cast<double>(g.points.size());
    return mean > 0.0 ? std::max(kPowerFloor_dB, 10.0 * std::log10(mean)) : kPowerFloor_dB;
}

Scenario place_eavesdropper(const Scenario& sc, Orientation o, double gap)
{
    if (!(gap > 0.0))
        throw std::invalid_argument("place_eavesdropper: distance must be positive");
    Scenario out = sc;
    Box& e = out.eve_box;
    e = sc.user_box;
    e.grid = sc.eve_box.grid;
    const int axis = o == Orientation::Horizontal ? 1 : 0;
    const double width = sc.user_box.hi(axis) - sc.user_box.lo(axis);
    e.hi(axis) = sc.user_box.lo(axis) - gap;
    e.lo(axis) = e.hi(axis) - width;
    return out;
}

PairedRun run_paired(const Scenario& sc)
{
    const ScenarioChannels ch(sc);
    const DesignProblem dp = make_design_problem(sc, ch);
    PairedRun run;
    run.optimized = optimize_phases(dp, sc.schedule, sc.sdp);
    run.neglect = neglect_baseline(dp, sc.schedule, sc.sdp);
    const PositionGrid users = make_grid(sc.user_box, GridLabel::UserArea);
    const PositionGrid eves = make_grid(sc.eve_box, GridLabel::EveArea);
    const InstanceBuilder eval = ch.evaluation_builder();
    run.sr_optimized_bits = worst_case_secrecy_rate(eval, run.optimized.final_phases.omega, ch.beamformer(), users, eves);
    run.sr_neglect_bits = worst_case_secrecy_rate(eval, run.neglect.final_phases.omega, ch.beamformer(), users, eves);
    return run;
}

SweepRun run_distance_sweep(const Scenario& tmpl, Orientation o, const std::vector<double>& distances)
{
    if (distances.empty())
        throw std::invalid_argument("run_distance_sweep: no distances");
    for (double d : distances)
        if (!(d > 0.0))
            throw std::invalid_argument("run_distance_sweep: distances must be positive");
    SweepRun sweep{ResultTable({"distance", "orientation", "sr_optimized_bits", "sr_neglect_bits"}),
                   std::vector<PairedRun>(distances.size())};
    parallel_for(distances.size(), [&](std::size_t i) {
        spdlog::debug("sweep {} distance {} m", to_string(o), distances[i]);
        sweep.runs[i] = run_paired(place_eavesdropper(tmpl, o, distances[i]));
    });
    std::string statuses;
    for (std::size_t i = 0; i < distances.size(); ++i) {
        const PairedRun& r = sweep.runs[i];
        sweep.table.add_row({distances[i], o == Orientation::Horizontal ? 0.0 : 1.0, r.sr_optimized_bits,
                             r.sr_neglect_bits});
        statuses += (i ? " " : "") + std::string(to_string(r.optimized.status)) + "/"
                    + std::string(to_string(r.neglect.status));
    }
    std::string dlist;
    for (std::size_t i = 0; i < distances.size(); ++i)
        dlist += (i ? "," : "") + format_double(distances[i]);
    stamp(sweep.table, tmpl, "sweep --orientation " + std::string(to_string(o)) + " --distances " + dlist);
    sweep.table.set_meta("status", statuses);
    return sweep;
}

}  // namespace lcris
