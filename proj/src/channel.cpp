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

#include "thzlink/channel.hpp"

#include <cmath>
#include <string>

#include "thzlink/constants.hpp"
#include "thzlink/errors.hpp"

namespace thzlink {

namespace {

constexpr double kPi = 3.14159265358979323846;

void validate_atmosphere(const AtmosphereState &atm) {
    if (atm.pressure_pa <= 0.0)
        throw errors::InvalidAtmosphere("pressure must be > 0 Pa, got " +
                                        std::to_string(atm.pressure_pa));
    if (atm.temperature_k <= 0.0)
        throw errors::InvalidAtmosphere("temperature must be > 0 K, got " +
                                        std::to_string(atm.temperature_k));
    if (atm.water_mixing_ratio < 0.0 || atm.water_mixing_ratio >= 1.0)
        throw errors::InvalidAtmosphere(
            "water mixing ratio must lie in [0, 1), got " +
            std::to_string(atm.water_mixing_ratio));
}

} // namespace

double absorption_coefficient(double frequency_ghz, const LineCatalog &catalog,
                              const AtmosphereState &atmosphere,
                              LineShape shape) {
    if (frequency_ghz <= 0.0)
        throw errors::NonPositiveInput("frequency must be > 0 GHz");
    validate_atmosphere(atmosphere);

    const double q = atmosphere.water_mixing_ratio;
    if (q == 0.0)
        return 0.0; // no absorber molecules

    // Absorber number density [1/m^3].
    const double n_abs = q * atmosphere.pressure_pa /
                         (constants::kBoltzmann * atmosphere.temperature_k);
    const double pressure_ratio =
        atmosphere.pressure_pa / constants::kReferencePressurePa;
    const double t_ratio =
        constants::kReferenceTemperatureK / atmosphere.temperature_k;

    double k = 0.0; // [1/m]
    for (const SpectralLine &line : catalog.lines) {
        const double f0 = line.center_frequency_ghz;
        if (f0 <= 0.0)
            continue; // resonance profile undefined at zero frequency

        // Pressure-broadened HWHM [GHz]: air/self mix, pressure scaling,
        // temperature scaling with the line's exponent.
        const double gamma =
            (line.air_halfwidth * (1.0 - q) + line.self_halfwidth * q) *
            pressure_ratio * std::pow(t_ratio, line.temperature_exponent) *
            constants::kGhzPerInverseCm;

        // Intensity [cm^-1/(molecule cm^-2)] -> [GHz m^2] per molecule.
        const double s = line.intensity * constants::kGhzPerInverseCm * 1e-4;

        const double df = frequency_ghz - f0;
        double profile; // [1/GHz]
        if (shape == LineShape::van_vleck_weisskopf) {
            const double fr = frequency_ghz / f0;
            profile = (fr * fr / kPi) *
                      (gamma / (df * df + gamma * gamma) +
                       gamma / ((frequency_ghz + f0) * (frequency_ghz + f0) +
                                gamma * gamma));
        } else {
            profile = (1.0 / kPi) * gamma / (df * df + gamma * gamma);
        }
        k += n_abs * s * profile;
    }
    return k;
}

double beer_lambert_db(double k_per_m, double distance_m) {
    if (k_per_m < 0.0)
        throw errors::NonPositiveInput("absorption coefficient must be >= 0");
    if (distance_m < 0.0)
        throw errors::NonPositiveInput("distance must be >= 0 m");
    return constants::kDbPerNeper * k_per_m * distance_m;
}

double fspl_db(double frequency_ghz, double distance_m) {
    if (frequency_ghz <= 0.0)
        throw errors::NonPositiveInput("frequency must be > 0 GHz");
    if (distance_m <= 0.0)
        throw errors::NonPositiveInput("distance must be > 0 m");
    const double f_hz = frequency_ghz * 1e9;
    return 20.0 *
           std::log10(4.0 * kPi * distance_m * f_hz / constants::kSpeedOfLight);
}

double fog_attenuation_db_per_km(double frequency_ghz,
                                 double liquid_water_g_per_m3,
                                 double temperature_k,
                                 bool *extrapolation_warning) {
    if (frequency_ghz <= 0.0)
        throw errors::NonPositiveInput("frequency must be > 0 GHz");
    if (temperature_k <= 0.0)
        throw errors::NonPositiveInput("temperature must be > 0 K");
    if (liquid_water_g_per_m3 < 0.0)
        throw errors::NonPositiveInput("liquid water density must be >= 0");
    if (extrapolation_warning != nullptr)
        *extrapolation_warning = frequency_ghz > 200.0; // model stated up to 200 GHz

    // Double-Debye permittivity of liquid water.
    const double theta = 300.0 / temperature_k;
    const double eps0 = 77.66 + 103.3 * (theta - 1.0);
    const double eps1 = 0.0671 * eps0;
    const double eps2 = 3.52;
    const double fp = 20.20 - 146.0 * (theta - 1.0) +
                      316.0 * (theta - 1.0) * (theta - 1.0); // [GHz]
    const double fs = 39.8 * fp;                             // [GHz]
    const double f = frequency_ghz;

    const double eps_imag =
        f * (eps0 - eps1) / (fp * (1.0 + (f / fp) * (f / fp))) +
        f * (eps1 - eps2) / (fs * (1.0 + (f / fs) * (f / fs)));
    const double eps_real = (eps0 - eps1) / (1.0 + (f / fp) * (f / fp)) +
                            (eps1 - eps2) / (1.0 + (f / fs) * (f / fs)) + eps2;
    const double eta = (2.0 + eps_real) / eps_imag;

    // Specific attenuation coefficient K_l [ (dB/km) / (g/m^3) ].
    const double k_l = 0.819 * f / (eps_imag * (1.0 + eta * eta));
    return k_l * liquid_water_g_per_m3;
}

LossBreakdown total_loss(double frequency_ghz, double distance_m,
                         const AtmosphereState &atmosphere,
                         const WeatherState &weather,
                         const LineCatalog &catalog, LineShape shape) {
    if (weather.rain_rate_mm_per_h < 0.0)
        throw errors::NonPositiveInput("rain rate must be >= 0 mm/h");
    if (weather.fog_liquid_water_g_per_m3 < 0.0)
        throw errors::NonPositiveInput("fog liquid water must be >= 0 g/m^3");

    LossBreakdown loss;
    loss.frequency_ghz = frequency_ghz;
    loss.distance_m = distance_m;
    loss.fspl_db = fspl_db(frequency_ghz, distance_m);
    loss.absorption_db = beer_lambert_db(
        absorption_coefficient(frequency_ghz, catalog, atmosphere, shape),
        distance_m);
    const double km = distance_m / 1000.0;
    loss.rain_db =
        rain_attenuation_db_per_km(frequency_ghz, weather.rain_rate_mm_per_h) *
        km;
    // Fog shares the air temperature; uniform water content along the path.
    loss.fog_db = fog_attenuation_db_per_km(frequency_ghz,
                                            weather.fog_liquid_water_g_per_m3,
                                            atmosphere.temperature_k) *
                  km;
    loss.total_db =
        loss.fspl_db + loss.absorption_db + loss.rain_db + loss.fog_db;
    return loss;
}

LossSpectrum loss_spectrum(double f_lo_ghz, double f_hi_ghz, double step_ghz,
                           double distance_m,
                           const AtmosphereState &atmosphere,
                           const WeatherState &weather,
                           const LineCatalog &catalog, LineShape shape) {
    if (f_lo_ghz > f_hi_ghz)
        throw errors::EmptyBand("band [" + std::to_string(f_lo_ghz) + ", " +
                                std::to_string(f_hi_ghz) + "] GHz is empty");
    if (step_ghz <= 0.0)
        throw errors::NonPositiveInput("grid step must be > 0 GHz");

    LossSpectrum spectrum;
    spectrum.distance_m = distance_m;
    spectrum.atmosphere = atmosphere;
    spectrum.weather = weather;

    // Index-based grid; the epsilon keeps f_hi itself on the grid when
    // (f_hi - f_lo) is an exact multiple of the step.
    const auto n_steps = static_cast<std::size_t>(
        std::floor((f_hi_ghz - f_lo_ghz) / step_ghz + 1e-9));
    spectrum.grid.reserve(n_steps + 1);
    for (std::size_t i = 0; i <= n_steps; ++i) {
        const double f = f_lo_ghz + static_cast<double>(i) * step_ghz;
        spectrum.grid.push_back(
            total_loss(f, distance_m, atmosphere, weather, catalog, shape));
    }
    return spectrum;
}

} // namespace thzlink
