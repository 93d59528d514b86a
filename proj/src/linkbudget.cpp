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

#include "thzlink/linkbudget.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "thzlink/constants.hpp"
#include "thzlink/errors.hpp"

namespace thzlink {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

// Gaussian tail probability Q(x).
double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

// Leading coefficient of the Gray-coded M-QAM BER approximation; BER at SNR
// s (linear) is coeff * Q(sqrt(3*s/(M-1))). Cross constellations (odd
// log2(M)) use 1 - 1/sqrt(2M) in place of the square 1 - 1/sqrt(M).
double ber_coefficient(int order) {
    const int bits = static_cast<int>(std::lround(std::log2(order)));
    const bool cross = bits % 2 != 0; // 8, 32, 128: odd bits per symbol
    const double inner =
        cross ? 1.0 - 1.0 / std::sqrt(2.0 * order) : 1.0 - 1.0 / std::sqrt(order);
    return 4.0 / bits * inner;
}

void require_valid_order(int order) {
    if (order < 4 || !is_power_of_two(order))
        throw errors::NonPositiveInput(
            "modulation order must be a power of 2 >= 4, got " +
            std::to_string(order));
}

} // namespace

double LinkScenario::tx_gain_at(double frequency_ghz) const {
    return tx_aperture ? antenna_gain_from_aperture(
                             tx_aperture->diameter_m, tx_aperture->efficiency,
                             frequency_ghz)
                       : tx_gain_dbi;
}

double LinkScenario::rx_gain_at(double frequency_ghz) const {
    return rx_aperture ? antenna_gain_from_aperture(
                             rx_aperture->diameter_m, rx_aperture->efficiency,
                             frequency_ghz)
                       : rx_gain_dbi;
}

void LinkScenario::validate() const {
    if (carrier_frequency_ghz <= 0.0)
        throw errors::ConfigError("carrier frequency must be > 0 GHz");
    if (symbol_rate_gbd <= 0.0)
        throw errors::ConfigError("symbol rate must be > 0 Gbd");
    if (noise_bandwidth_ghz < symbol_rate_gbd)
        throw errors::ConfigError(
            "noise bandwidth must be >= the symbol rate");
    if (implementation_margin_db < 0.0)
        throw errors::ConfigError("implementation margin must be >= 0 dB");
    if (code_rate <= 0.0 || code_rate > 1.0)
        throw errors::ConfigError("code rate must lie in (0, 1]");
    if (polarizations != 1 && polarizations != 2)
        throw errors::ConfigError("polarizations must be 1 or 2");
    if (max_qam_order < 4 || !is_power_of_two(max_qam_order))
        throw errors::ConfigError(
            "max QAM order must be a power of 2 >= 4");
    if (target_ber <= 0.0 || target_ber >= 0.5)
        throw errors::ConfigError("target BER must lie in (0, 0.5)");
    for (const auto &aperture : {tx_aperture, rx_aperture}) {
        if (!aperture)
            continue;
        if (aperture->diameter_m <= 0.0)
            throw errors::ConfigError("aperture diameter must be > 0 m");
        if (aperture->efficiency <= 0.0 || aperture->efficiency > 1.0)
            throw errors::ConfigError(
                "aperture efficiency must lie in (0, 1]");
    }
}

double antenna_gain_from_aperture(double diameter_m, double efficiency,
                                  double frequency_ghz) {
    if (diameter_m <= 0.0)
        throw errors::NonPositiveInput("aperture diameter must be > 0 m");
    if (efficiency <= 0.0 || efficiency > 1.0)
        throw errors::NonPositiveInput("aperture efficiency must lie in (0, 1]");
    if (frequency_ghz <= 0.0)
        throw errors::NonPositiveInput("frequency must be > 0 GHz");
    const double electrical_size =
        kPi * diameter_m * frequency_ghz * 1e9 / constants::kSpeedOfLight;
    return 10.0 * std::log10(efficiency * electrical_size * electrical_size);
}

double noise_power_dbm(double bandwidth_ghz, double noise_figure_db) {
    if (bandwidth_ghz <= 0.0)
        throw errors::NonPositiveInput("bandwidth must be > 0 GHz");
    return constants::kThermalNoiseDbmPerHz + noise_figure_db +
           10.0 * std::log10(bandwidth_ghz * 1e9);
}

double snr_db(const LinkScenario &scenario, const LossBreakdown &loss) {
    scenario.validate();
    if (std::abs(loss.frequency_ghz - scenario.carrier_frequency_ghz) > 1e-6)
        throw errors::InconsistentFrequency(
            "loss evaluated at " + std::to_string(loss.frequency_ghz) +
            " GHz, scenario carrier is " +
            std::to_string(scenario.carrier_frequency_ghz) + " GHz");
    const double f = scenario.carrier_frequency_ghz;
    return scenario.tx_power_dbm + scenario.tx_gain_at(f) +
           scenario.rx_gain_at(f) - loss.total_db -
           noise_power_dbm(scenario.noise_bandwidth_ghz,
                           scenario.noise_figure_db) -
           scenario.implementation_margin_db;
}

double qam_ber(int order, double snr_db) {
    require_valid_order(order);
    const double snr = std::pow(10.0, snr_db / 10.0);
    return ber_coefficient(order) *
           q_function(std::sqrt(3.0 * snr / (order - 1)));
}

double required_snr_for_ber(int order, double target_ber) {
    require_valid_order(order);
    if (target_ber <= 0.0)
        throw errors::NonPositiveInput("target BER must be > 0");
    // BER is largest as SNR -> 0+, where Q(0) = 1/2.
    if (target_ber >= 0.5 * ber_coefficient(order))
        throw errors::NoSolution(
            "target BER " + std::to_string(target_ber) +
            " is unreachable for order " + std::to_string(order));

    double lo = -40.0, hi = 80.0; // [dB]; BER is monotone decreasing in SNR
    while (hi - lo > 0.005) {
        const double mid = 0.5 * (lo + hi);
        if (qam_ber(order, mid) > target_ber)
            lo = mid;
        else
            hi = mid;
    }
    return hi; // the feasible side: qam_ber(order, hi) <= target_ber
}

std::vector<ModulationScheme> build_qam_ladder(double target_ber,
                                               int max_order) {
    std::vector<ModulationScheme> ladder;
    for (int order = 4; order <= max_order; order *= 2) {
        ModulationScheme scheme;
        scheme.order = order;
        scheme.bits_per_symbol = std::log2(static_cast<double>(order));
        scheme.required_snr_db = required_snr_for_ber(order, target_ber);
        ladder.push_back(scheme);
    }
    return ladder;
}

std::optional<ModulationScheme>
max_modulation(double snr_db, const std::vector<ModulationScheme> &ladder,
               int max_qam_order) {
    if (ladder.empty())
        throw errors::EmptyLadder("modulation ladder is empty");
    std::optional<ModulationScheme> best;
    for (const ModulationScheme &scheme : ladder) {
        if (scheme.order > max_qam_order)
            continue;
        if (scheme.required_snr_db <= snr_db) // ties admit the rung
            best = scheme;
    }
    return best;
}

double net_rate_gbps(const ModulationScheme &scheme,
                     const LinkScenario &scenario) {
    return scenario.symbol_rate_gbd * scheme.bits_per_symbol *
           scenario.code_rate * scenario.polarizations;
}

std::vector<RatePoint> rate_vs_distance(const LinkScenario &scenario,
                                        std::vector<double> distances_m,
                                        const AtmosphereState &atmosphere,
                                        const WeatherState &weather,
                                        const LineCatalog &catalog) {
    scenario.validate();
    for (double d : distances_m)
        if (d <= 0.0)
            throw errors::NonPositiveInput("distances must be > 0 m");
    std::sort(distances_m.begin(), distances_m.end());

    const std::vector<ModulationScheme> ladder =
        build_qam_ladder(scenario.target_ber, scenario.max_qam_order);

    std::vector<RatePoint> points;
    points.reserve(distances_m.size());
    for (double d : distances_m) {
        const LossBreakdown loss = total_loss(
            scenario.carrier_frequency_ghz, d, atmosphere, weather, catalog);
        RatePoint point;
        point.distance_m = d;
        point.snr_db = snr_db(scenario, loss);
        const auto scheme =
            max_modulation(point.snr_db, ladder, scenario.max_qam_order);
        if (scheme) {
            point.selected_order = scheme->order;
            point.net_rate_gbps = net_rate_gbps(*scheme, scenario);
        }
        points.push_back(point);
    }
    return points;
}

} // namespace thzlink
