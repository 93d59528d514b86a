// thzlink - sub-THz wireless link planning toolkit
// Copyright (C) 2026 thzlink contributors
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
//
// Per-mechanism propagation losses for line-of-sight sub-THz links:
// free-space path loss, water-vapor molecular absorption (line-by-line
// summation + Beer-Lambert law), rain attenuation (ITU-R P.838-3 power-law
// regression) and cloud/fog attenuation (ITU-R P.840-6 double-Debye model),
// plus their total over a frequency grid.

#ifndef THZLINK_CHANNEL_HPP
#define THZLINK_CHANNEL_HPP

#include <array>
#include <vector>

#include "thzlink/spectroscopy.hpp"

namespace thzlink {

// Pressure-broadened line profile used by the line-by-line sum.
// van_vleck_weisskopf is the standard choice for sub-THz radio propagation;
// lorentzian is provided as an alternate for comparison.
enum class LineShape { van_vleck_weisskopf, lorentzian };

struct AtmosphereState {
    double pressure_pa = 101325.0;     // [Pa], > 0
    double temperature_k = 296.0;      // [K], > 0
    double water_mixing_ratio = 0.0;   // volume fraction q in [0, 1)
};

struct WeatherState {
    double rain_rate_mm_per_h = 0.0;        // [mm/h], >= 0
    double fog_liquid_water_g_per_m3 = 0.0; // [g/m^3], >= 0
};

// Per-mechanism losses at one frequency and distance. All components are in
// dB and non-negative; total_db is their sum.
struct LossBreakdown {
    double frequency_ghz = 0.0; // [GHz]
    double distance_m = 0.0;    // [m]
    double fspl_db = 0.0;       // [dB]
    double absorption_db = 0.0; // [dB]
    double rain_db = 0.0;       // [dB]
    double fog_db = 0.0;        // [dB]
    double total_db = 0.0;      // [dB]
};

// Losses sampled on a strictly increasing frequency grid at a fixed
// distance, atmosphere and weather.
struct LossSpectrum {
    std::vector<LossBreakdown> grid;
    double distance_m = 0.0; // [m]
    AtmosphereState atmosphere;
    WeatherState weather;
};

// Water-vapor absorption coefficient [1/m] at frequency_ghz:
//   k(f) = sum_i n_abs * S_i * F(f; f_i, gamma_i)
// with n_abs = q*p/(kB*T) the absorber number density [1/m^3], S_i the line
// intensity converted to [GHz m^2], F the line shape [1/GHz] and
//   gamma_i = (gamma_air*(1-q) + gamma_self*q) * (p/p_ref) * (T_ref/T)^n_i
// converted from cm^-1/atm to GHz. Lines at zero frequency are skipped (the
// van Vleck-Weisskopf profile is undefined there). Throws
// errors::InvalidAtmosphere / errors::NonPositiveInput.
double absorption_coefficient(double frequency_ghz, const LineCatalog &catalog,
                              const AtmosphereState &atmosphere,
                              LineShape shape = LineShape::van_vleck_weisskopf);

// Beer-Lambert attenuation in dB: 10*log10(e) * k * d.
double beer_lambert_db(double k_per_m, double distance_m);

// Friis free-space path loss: 20*log10(4*pi*d*f/c). Throws
// errors::NonPositiveInput unless frequency and distance are positive.
double fspl_db(double frequency_ghz, double distance_m);

// Raw power-law regression coefficients for the rain model, for
// cross-checking against the committed data file.
enum class RainCoefficientTable { k_horizontal, k_vertical, alpha_horizontal, alpha_vertical };
struct RainRegression {
    std::vector<std::array<double, 3>> terms; // rows of (a_j, b_j, c_j)
    double m = 0.0;
    double c = 0.0;
};
const RainRegression &rain_regression(RainCoefficientTable table);

// Power-law coefficients k, alpha at frequency_ghz, combined for the given
// path elevation and polarization tilt angles (0/0 = horizontal
// polarization, 90 deg tilt = vertical). Valid for 1..1000 GHz; throws
// errors::FrequencyOutOfModelRange outside.
struct RainCoefficients {
    double k = 0.0;
    double alpha = 0.0;
};
RainCoefficients rain_coefficients(double frequency_ghz,
                                   double elevation_deg = 0.0,
                                   double tilt_deg = 0.0);

// Specific rain attenuation gamma_R = k * R^alpha [dB/km], horizontal
// polarization, 0 deg elevation. R = 0 returns 0 at any frequency; for
// R > 0 the 1..1000 GHz validity range is enforced.
double rain_attenuation_db_per_km(double frequency_ghz,
                                  double rain_rate_mm_per_h);
double rain_attenuation_db_per_km(double frequency_ghz,
                                  double rain_rate_mm_per_h,
                                  double elevation_deg, double tilt_deg);

// Specific cloud/fog attenuation gamma_c = K_l(f, T) * M [dB/km], with K_l
// from the double-Debye water permittivity model. The model is specified up
// to 200 GHz; above that a result is still produced and
// *extrapolation_warning (when non-null) is set to true.
double fog_attenuation_db_per_km(double frequency_ghz,
                                 double liquid_water_g_per_m3,
                                 double temperature_k,
                                 bool *extrapolation_warning = nullptr);

// All components at one frequency/distance; weather per-km rates are scaled
// by distance (uniform rain/fog along the path).
LossBreakdown total_loss(double frequency_ghz, double distance_m,
                         const AtmosphereState &atmosphere,
                         const WeatherState &weather,
                         const LineCatalog &catalog,
                         LineShape shape = LineShape::van_vleck_weisskopf);

// LossBreakdown on the regular grid f_lo, f_lo+step, ..., <= f_hi.
LossSpectrum loss_spectrum(double f_lo_ghz, double f_hi_ghz, double step_ghz,
                           double distance_m,
                           const AtmosphereState &atmosphere,
                           const WeatherState &weather,
                           const LineCatalog &catalog,
                           LineShape shape = LineShape::van_vleck_weisskopf);

} // namespace thzlink

#endif // THZLINK_CHANNEL_HPP
