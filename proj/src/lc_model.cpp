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

#include "lcris/lc_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lcris {

void LcParams::validate() const
{
    std::string errors;
    if (!(T_r < T_c))
        errors += " T_r < T_c;";
    if (!(beta > 0.0 && beta < 1.0))
        errors += " 0 < beta < 1;";
    if (delta_n0 && !(*delta_n0 >= 0.0))
        errors += " delta_n0 >= 0;";
    if (cell_length_over_lambda && !(*cell_length_over_lambda > 0.0))
        errors += " cell_length_over_lambda > 0;";
    if (!std::isfinite(T_c) || !std::isfinite(T_r) || !std::isfinite(beta))
        errors += " finite parameters;";
    if (!errors.empty())
        throw std::invalid_argument("LcParams violates:" + errors);
}

std::string_view to_string(RangeRegime r)
{
    switch (r) {
    case RangeRegime::Full: return "Full";
    case RangeRegime::Constrained: return "Constrained";
    case RangeRegime::Unsupported: return "Unsupported";
    }
    return "?";
}

double haller_birefringence(const LcParams& lc, double T_celsius)
{
    if (!lc.delta_n0)
        throw std::invalid_argument("haller_birefringence: delta_n0 not set");
    if (!(T_celsius < lc.T_c))
        throw std::domain_error("haller_birefringence: requires T < T_c");
    const double ratio = (T_celsius + kKelvinOffset) / (lc.T_c + kKelvinOffset);
    return *lc.delta_n0 * std::pow(1.0 - ratio, lc.beta);
}

double raw_phase_range(const LcParams& lc, double T_celsius)
{
    if (!lc.cell_length_over_lambda)
        throw std::invalid_argument("raw_phase_range: cell_length_over_lambda not set");
    return kTwoPi * *lc.cell_length_over_lambda * haller_birefringence(lc, T_celsius);
}

double max_phase_shift(const LcParams& lc, double T_celsius)
{
    if (!(T_celsius < lc.T_c))
        throw std::domain_error("max_phase_shift: requires T < T_c (model undefined at or above the clearing point)");
    return kTwoPi * std::pow((lc.T_c - T_celsius) / (lc.T_c - lc.T_r), lc.beta);
}

RangeClass classify_range(double omega_max)
{
    if (omega_max >= kTwoPi)
        return {RangeRegime::Full, omega_max};
    if (omega_max > kPi)
        return {RangeRegime::Constrained, omega_max};
    return {RangeRegime::Unsupported, omega_max};
}

}  // namespace lcris
