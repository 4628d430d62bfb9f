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

// Command-line front end: lc-curve, optimize, convergence, heatmap, sweep.
// Exit status: 0 converged, 2 iteration cap reached, 1 error.
// Log verbosity follows SPDLOG_LEVEL (e.g. SPDLOG_LEVEL=debug).

#include "lcris/experiments.hpp"

#include <CLI11.hpp>
#include <spdlog/cfg/env.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <iostream>
#include <optional>
#include <sstream>

using namespace lcris;

namespace {

struct Common {
    std::string scenario_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_option("--scenario", c.scenario_path, "Scenario JSON (reference configuration if omitted)");
    cmd->add_option("--out", c.out_path, "Output CSV path (stdout if omitted)");
    cmd->add_option("--seed", c.seed, "Override the scenario seed");
}

Scenario resolve(const Common& c)
{
    Scenario sc = c.scenario_path.empty() ? reference_scenario() : load_scenario(c.scenario_path);
    if (c.seed)
        sc.seed = *c.seed;
    return sc;
}

void emit(const ResultTable& t, const Common& c)
{
    if (c.out_path.empty())
        std::cout << t.to_csv();
    else
        t.write_csv(c.out_path);
}

std::vector<double> parse_list(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        if (used != item.size())
            throw std::invalid_argument("bad number in list: " + item);
        out.push_back(v);
    }
    return out;
}

int exit_code(SolveStatus s)
{
    return s == SolveStatus::Converged ? 0 : 2;
}

ResultTable phase_table(const Scenario& sc, const SolveReport& r, const std::string& command)
{
    ResultTable t({"element", "omega_rad"});
    for (Eigen::Index i = 0; i < r.final_phases.omega.size(); ++i)
        t.add_row({static_cast<double>(i), r.final_phases.omega(i)});
    stamp(t, sc, command);
    t.set_meta("status", std::string(to_string(r.status)));
    t.set_meta("omega_max_rad", format_double(sc.omega_max()));
    t.set_meta("final_gamma", format_double(r.final_gamma));
    t.set_meta("secrecy_rate_bits", format_double(r.secrecy_rate_bits));
    t.set_meta("n_false", std::to_string(r.n_false));
    return t;
}

}  // namespace

int main(int argc, char** argv)
{
    spdlog::set_default_logger(spdlog::stderr_color_mt("lcris"));
    spdlog::set_level(spdlog::level::warn);
    spdlog::cfg::load_env_levels();

    CLI::App app{"Temperature-aware phase-shift design for liquid-crystal RIS"};
    app.require_subcommand(1);

    Common lc_opts, opt_opts, conv_opts, heat_opts, sweep_opts;
    std::string temperatures;
    auto* lc_cmd = app.add_subcommand("lc-curve", "Phase budget versus temperature");
    add_common(lc_cmd, lc_opts);
    lc_cmd->add_option("--temperatures", temperatures, "Comma-separated temperatures in C (default 0..120 step 1)");

    auto* opt_cmd = app.add_subcommand("optimize", "Design phases; writes element,omega_rad");
    add_common(opt_cmd, opt_opts);
    bool neglect = false;
    opt_cmd->add_flag("--neglect", neglect, "Design for a full 2*pi range, then clamp");

    auto* conv_cmd = app.add_subcommand("convergence", "Per-iteration gap, N_false and gamma trace");
    add_common(conv_cmd, conv_opts);

    auto* heat_cmd = app.add_subcommand("heatmap", "Received power over the scenario's plane grid");
    add_common(heat_cmd, heat_opts);
    std::string phase_source = "optimized";
    heat_cmd->add_option("--phases", phase_source, "Phase design to evaluate")
        ->check(CLI::IsMember({"optimized", "neglect"}));

    auto* sweep_cmd = app.add_subcommand("sweep", "Secrecy rate versus user/eavesdropper gap");
    add_common(sweep_cmd, sweep_opts);
    std::string orientation = "h";
    std::string distances = "0.5,1,1.5,2";
    sweep_cmd->add_option("--orientation", orientation, "h: eavesdropper to the left, v: below")
        ->check(CLI::IsMember({"h", "v"}));
    sweep_cmd->add_option("--distances", distances, "Comma-separated gaps in meters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*lc_cmd) {
            const Scenario sc = resolve(lc_opts);
            std::vector<double> temps;
            if (temperatures.empty())
                for (int T = 0; T <= 120; ++T)
                    temps.push_back(T);
            else
                temps = parse_list(temperatures);
            ResultTable t = run_lc_curve(sc.lc, temps);
            stamp(t, sc, "lc-curve");
            emit(t, lc_opts);
            return 0;
        }
        if (*opt_cmd) {
            const Scenario sc = resolve(opt_opts);
            const ScenarioChannels ch(sc);
            const DesignProblem dp = make_design_problem(sc, ch);
            const SolveReport r = neglect ? neglect_baseline(dp, sc.schedule, sc.sdp)
                                          : optimize_phases(dp, sc.schedule, sc.sdp);
            emit(phase_table(sc, r, neglect ? "optimize --neglect" : "optimize"), opt_opts);
            return exit_code(r.status);
        }
        if (*conv_cmd) {
            const ConvergenceRun run = run_convergence(resolve(conv_opts));
            emit(run.table, conv_opts);
            return exit_code(run.report.status);
        }
        if (*heat_cmd) {
            const Scenario sc = resolve(heat_opts);
            const ScenarioChannels ch(sc);
            const DesignProblem dp = make_design_problem(sc, ch);
            const SolveReport r = phase_source == "neglect" ? neglect_baseline(dp, sc.schedule, sc.sdp)
                                                            : optimize_phases(dp, sc.schedule, sc.sdp);
            ResultTable t = run_heatmap(sc, r.final_phases, sc.heatmap);
            t.set_meta("provenance", *t.meta("provenance") + " --phases " + phase_source);
            t.set_meta("status", std::string(to_string(r.status)));
            emit(t, heat_opts);
            return exit_code(r.status);
        }
        if (*sweep_cmd) {
            const Scenario sc = resolve(sweep_opts);
            const Orientation o = orientation == "h" ? Orientation::Horizontal : Orientation::Vertical;
            const SweepRun sweep = run_distance_sweep(sc, o, parse_list(distances));
            emit(sweep.table, sweep_opts);
            for (const auto& r : sweep.runs)
                if (r.optimized.status != SolveStatus::Converged || r.neglect.status != SolveStatus::Converged)
                    return 2;
            return 0;
        }
    } catch (const std::exception& e) {
        spdlog::error("{}", e.what());
        return 1;
    }
    return 1;
}
