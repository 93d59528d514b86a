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
// ITU-R P.838-3 specific rain attenuation: gamma_R = k * R^alpha, with
// log10(k) and alpha given by sums of log-Gaussian terms plus an affine
// part in log10(f). The coefficient tables below are also committed as
// data/itu_r_p838_3_coefficients.csv; a unit test keeps the two in sync.

#include <cmath>
#include <string>

#include "thzlink/channel.hpp"
#include "thzlink/errors.hpp"

namespace thzlink {

namespace {

// rows: (a_j, b_j, c_j); tail: m, c of the affine term.
const RainRegression kKH{{{-5.33980, -0.10008, 1.13098},
                          {-0.35351, 1.26970, 0.45400},
                          {-0.23789, 0.86036, 0.15354},
                          {-0.94158, 0.64552, 0.16817}},
                         -0.18961,
                         0.71147};

const RainRegression kKV{{{-3.80595, 0.56934, 0.81061},
                          {-3.44965, -0.22911, 0.51059},
                          {-0.39902, 0.73042, 0.11899},
                          {0.50167, 1.07319, 0.27195}},
                         -0.16398,
                         0.63297};

const RainRegression kAlphaH{{{-0.14318, 1.82442, -0.55187},
                              {0.29591, 0.77564, 0.19822},
                              {0.32177, 0.63773, 0.13164},
                              {-5.37610, -0.96230, 1.47828},
                              {16.1721, -3.29980, 3.43990}},
                             0.67849,
                             -1.95537};

const RainRegression kAlphaV{{{-0.07771, 2.33840, -0.76284},
                              {0.56727, 0.95545, 0.54039},
                              {-0.20238, 1.14520, 0.26809},
                              {-48.2991, 0.791669, 0.116226},
                              {48.5833, 0.791459, 0.116479}},
                             -0.053739,
                             0.83433};

double evaluate_regression(const RainRegression &reg, double frequency_ghz) {
    const double x = std::log10(frequency_ghz);
    double sum = 0.0;
    for (const auto &[a, b, c] : reg.terms) {
        const double t = (x - b) / c;
        sum += a * std::exp(-t * t);
    }
    return sum + reg.m * x + reg.c;
}

} // namespace

const RainRegression &rain_regression(RainCoefficientTable table) {
    switch (table) {
    case RainCoefficientTable::k_horizontal:
        return kKH;
    case RainCoefficientTable::k_vertical:
        return kKV;
    case RainCoefficientTable::alpha_horizontal:
        return kAlphaH;
    default:
        return kAlphaV;
    }
}

RainCoefficients rain_coefficients(double frequency_ghz, double elevation_deg,
                                   double tilt_deg) {
    if (frequency_ghz < 1.0 || frequency_ghz > 1000.0)
        throw errors::FrequencyOutOfModelRange(
            "rain model is valid for 1..1000 GHz, got " +
            std::to_string(frequency_ghz) + " GHz");

    const double k_h = std::pow(10.0, evaluate_regression(kKH, frequency_ghz));
    const double k_v = std::pow(10.0, evaluate_regression(kKV, frequency_ghz));
    const double a_h = evaluate_regression(kAlphaH, frequency_ghz);
    const double a_v = evaluate_regression(kAlphaV, frequency_ghz);

    // Polarization/elevation combining of the horizontal and vertical
    // coefficients; elevation 0, tilt 0 reduces to pure horizontal.
    constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
    const double cos_el = std::cos(elevation_deg * kDegToRad);
    const double cos2tau = std::cos(2.0 * tilt_deg * kDegToRad);
    const double mix = cos_el * cos_el * cos2tau;

    RainCoefficients out;
    out.k = 0.5 * (k_h + k_v + (k_h - k_v) * mix);
    out.alpha =
        (k_h * a_h + k_v * a_v + (k_h * a_h - k_v * a_v) * mix) / (2.0 * out.k);
    return out;
}

double rain_attenuation_db_per_km(double frequency_ghz,
                                  double rain_rate_mm_per_h,
                                  double elevation_deg, double tilt_deg) {
    if (rain_rate_mm_per_h < 0.0)
        throw errors::NonPositiveInput("rain rate must be >= 0 mm/h");
    if (rain_rate_mm_per_h == 0.0)
        return 0.0; // no rain, no range restriction
    const RainCoefficients c =
        rain_coefficients(frequency_ghz, elevation_deg, tilt_deg);
    return c.k * std::pow(rain_rate_mm_per_h, c.alpha); // [dB/km]
}

double rain_attenuation_db_per_km(double frequency_ghz,
                                  double rain_rate_mm_per_h) {
    return rain_attenuation_db_per_km(frequency_ghz, rain_rate_mm_per_h, 0.0,
                                      0.0);
}

} // namespace thzlink
