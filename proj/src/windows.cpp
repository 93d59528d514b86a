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

#include "thzlink/windows.hpp"

#include <cmath>
#include <string>

#include "thzlink/errors.hpp"

namespace thzlink {

std::vector<TransmissionWindow> find_windows(const LossSpectrum &spectrum,
                                             double threshold_db_per_km) {
    if (spectrum.grid.empty())
        throw errors::EmptySpectrum("loss spectrum has no grid points");
    if (threshold_db_per_km <= 0.0)
        throw errors::NonPositiveInput("threshold must be > 0 dB/km");
    if (spectrum.distance_m <= 0.0)
        throw errors::NonPositiveInput("spectrum distance must be > 0 m");

    // Windows are defined on molecular absorption only, normalized to dB/km.
    const double per_km = 1000.0 / spectrum.distance_m;

    std::vector<TransmissionWindow> windows;
    std::size_t i = 0;
    const std::size_t n = spectrum.grid.size();
    while (i < n) {
        if (spectrum.grid[i].absorption_db * per_km >= threshold_db_per_km) {
            ++i;
            continue;
        }
        // Start of a sub-threshold run; extend it as far as possible.
        TransmissionWindow window;
        window.f_lo_ghz = spectrum.grid[i].frequency_ghz;
        window.min_absorption_db_per_km =
            spectrum.grid[i].absorption_db * per_km;
        window.max_absorption_db_per_km = window.min_absorption_db_per_km;
        std::size_t j = i;
        while (j + 1 < n && spectrum.grid[j + 1].absorption_db * per_km <
                                threshold_db_per_km) {
            ++j;
            const double a = spectrum.grid[j].absorption_db * per_km;
            window.min_absorption_db_per_km =
                std::min(window.min_absorption_db_per_km, a);
            window.max_absorption_db_per_km =
                std::max(window.max_absorption_db_per_km, a);
        }
        window.f_hi_ghz = spectrum.grid[j].frequency_ghz;
        windows.push_back(window);
        i = j + 1;
    }
    return windows;
}

UsableBand usable_bandwidth(const TransmissionWindow &window,
                            const LinkScenario &scenario, double distance_m,
                            const AtmosphereState &atmosphere,
                            const LineCatalog &catalog,
                            double grid_step_ghz) {
    if (window.f_lo_ghz >= window.f_hi_ghz)
        throw errors::EmptyBand("window edges are not ascending");
    if (distance_m <= 0.0)
        throw errors::NonPositiveInput("distance must be > 0 m");
    if (grid_step_ghz <= 0.0)
        throw errors::NonPositiveInput("grid step must be > 0 GHz");
    scenario.validate();

    // The link closes where the clear-air total loss stays within the budget
    // left for the lowest ladder rung.
    const double lowest_rung_snr_db =
        required_snr_for_ber(4, scenario.target_ber);
    const double fixed_budget_db =
        scenario.tx_power_dbm -
        noise_power_dbm(scenario.noise_bandwidth_ghz,
                        scenario.noise_figure_db) -
        scenario.implementation_margin_db - lowest_rung_snr_db;

    const WeatherState clear_air;
    const auto n_steps = static_cast<std::size_t>(std::floor(
        (window.f_hi_ghz - window.f_lo_ghz) / grid_step_ghz + 1e-9));

    // Longest feasible run of consecutive grid points; ties keep the
    // lowest-frequency run.
    std::size_t best_start = 0, best_len = 0;
    std::size_t run_start = 0, run_len = 0;
    for (std::size_t i = 0; i <= n_steps; ++i) {
        const double f =
            window.f_lo_ghz + static_cast<double>(i) * grid_step_ghz;
        const LossBreakdown loss =
            total_loss(f, distance_m, atmosphere, clear_air, catalog);
        const double max_loss_db = fixed_budget_db + scenario.tx_gain_at(f) +
                                   scenario.rx_gain_at(f);
        if (loss.total_db <= max_loss_db) {
            if (run_len == 0)
                run_start = i;
            ++run_len;
            if (run_len > best_len) {
                best_len = run_len;
                best_start = run_start;
            }
        } else {
            run_len = 0;
        }
    }

    UsableBand usable;
    if (best_len == 0)
        return usable; // no grid point closes: width 0, not an error
    FrequencyBand band;
    band.f_lo_ghz =
        window.f_lo_ghz + static_cast<double>(best_start) * grid_step_ghz;
    band.f_hi_ghz = window.f_lo_ghz +
                    static_cast<double>(best_start + best_len - 1) *
                        grid_step_ghz;
    usable.width_ghz = band.f_hi_ghz - band.f_lo_ghz;
    usable.band = band;
    return usable;
}

BandPlan select_band(BandStrategy strategy, const TransmissionWindow &window,
                     double required_bandwidth_ghz, double target_distance_m) {
    if (window.f_lo_ghz >= window.f_hi_ghz)
        throw errors::EmptyBand("window edges are not ascending");

    BandPlan plan;
    plan.strategy = strategy;
    plan.target_distance_m = target_distance_m;

    if (strategy == BandStrategy::whole_window) {
        plan.sub_bands.push_back({window.f_lo_ghz, window.f_hi_ghz});
        return plan;
    }

    if (required_bandwidth_ghz <= 0.0)
        throw errors::NonPositiveInput("required bandwidth must be > 0 GHz");
    const double width = window.f_hi_ghz - window.f_lo_ghz;

    if (strategy == BandStrategy::center) {
        if (required_bandwidth_ghz > width)
            throw errors::InsufficientWindow(
                "window width " + std::to_string(width) +
                " GHz cannot fit " + std::to_string(required_bandwidth_ghz) +
                " GHz");
        const double mid = 0.5 * (window.f_lo_ghz + window.f_hi_ghz);
        plan.sub_bands.push_back({mid - 0.5 * required_bandwidth_ghz,
                                  mid + 0.5 * required_bandwidth_ghz});
        return plan;
    }

    // edges: two disjoint half-width sub-bands abutting the window edges.
    if (required_bandwidth_ghz >= width)
        throw errors::InsufficientWindow(
            "window width " + std::to_string(width) +
            " GHz cannot fit two disjoint edge bands of total " +
            std::to_string(required_bandwidth_ghz) + " GHz");
    plan.sub_bands.push_back(
        {window.f_lo_ghz, window.f_lo_ghz + 0.5 * required_bandwidth_ghz});
    plan.sub_bands.push_back(
        {window.f_hi_ghz - 0.5 * required_bandwidth_ghz, window.f_hi_ghz});
    return plan;
}

} // namespace thzlink
