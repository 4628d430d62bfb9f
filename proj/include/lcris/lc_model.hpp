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

#ifndef LCRIS_LC_MODEL_HPP
#define LCRIS_LC_MODEL_HPP

#include <optional>
#include <string_view>

namespace lcris {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kKelvinOffset = 273.15;

// Liquid-crystal material constants. Temperatures are in degrees Celsius.
struct LcParams {
    double beta = 0.25;   // Haller exponent, 0 < beta < 1
    double T_c = 127.0;   // clearing temperature
    double T_r = 17.0;    // temperature at which the cell spans exactly 2*pi
    std::optional<double> delta_n0;                 // raw Haller model only
    std::optional<double> cell_length_over_lambda;  // raw Haller model only

    // Throws std::invalid_argument listing every violated invariant.
    void validate() const;
};

struct TemperatureContext {
    double T = 17.0;  // operating temperature, degrees Celsius
};

enum class RangeRegime { Full, Constrained, Unsupported };

struct RangeClass {
    RangeRegime regime;
    double omega_max;
};

std::string_view to_string(RangeRegime r);

/// Haller approximation dn = dn0 * (1 - T/T_c)^beta with both temperatures
/// converted to kelvin. Requires lc.delta_n0. Throws std::domain_error for
/// T >= T_c.
double haller_birefringence(const LcParams& lc, double T_celsius);

/// Phase range of a cell of length l: 2*pi*(l/lambda)*dn(T). Requires both
/// optional raw-model fields.
double raw_phase_range(const LcParams& lc, double T_celsius);

/// Maximum differential phase shift 2*pi*((T_c - T)/(T_c - T_r))^beta.
/// Equals 2*pi at T_r, grows above 2*pi below T_r and vanishes at T_c.
double max_phase_shift(const LcParams& lc, double T_celsius);

inline double max_phase_shift(const LcParams& lc, const TemperatureContext& t)
{
    return max_phase_shift(lc, t.T);
}

RangeClass classify_range(double omega_max);

}  // namespace lcris

#endif
