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

#include "thzlink/arrays.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "thzlink/errors.hpp"

namespace thzlink {

BeamGeometry BeamGeometry::from_opening_angle(double opening_angle_deg) {
    if (opening_angle_deg <= 0.0 || opening_angle_deg > 180.0)
        throw errors::AngleOutOfRange(
            "opening angle must lie in (0, 180] degrees, got " +
            std::to_string(opening_angle_deg));
    BeamGeometry geometry;
    geometry.opening_angle_deg = opening_angle_deg;
    geometry.max_scan_angle_deg = 0.5 * opening_angle_deg;
    geometry.element_beamwidth_3db_deg = opening_angle_deg;
    return geometry;
}

double element_gain_dbi(double opening_angle_deg, double kappa) {
    if (opening_angle_deg <= 0.0 || opening_angle_deg > 180.0)
        throw errors::AngleOutOfRange(
            "opening angle must lie in (0, 180] degrees, got " +
            std::to_string(opening_angle_deg));
    if (kappa <= 0.0)
        throw errors::NonPositiveInput("kappa must be > 0");
    return 10.0 * std::log10(kappa / (opening_angle_deg * opening_angle_deg));
}

RatePoint subarray_rate(const SubarrayConfig &config,
                        const AtmosphereState &atmosphere,
                        const LineCatalog &catalog) {
    if (config.n_elements < 1)
        throw errors::NonPositiveInput("element count must be >= 1");
    if (config.link_distance_m <= 0.0)
        throw errors::NonPositiveInput("link distance must be > 0 m");

    const double gain_e =
        element_gain_dbi(config.opening_angle_deg, config.kappa);
    const double combining =
        10.0 * std::log10(static_cast<double>(config.n_elements));

    // Symmetric link: the same sub-array model on both ends; everything else
    // is inherited from the base scenario.
    LinkScenario scenario = config.base_scenario;
    scenario.tx_power_dbm = config.per_element_power_dbm + combining;
    scenario.tx_aperture.reset();
    scenario.rx_aperture.reset();
    scenario.tx_gain_dbi = combining + gain_e;
    scenario.rx_gain_dbi = combining + gain_e;

    const WeatherState clear_air; // clear-air evaluation
    const LossBreakdown loss =
        total_loss(scenario.carrier_frequency_ghz, config.link_distance_m,
                   atmosphere, clear_air, catalog);

    RatePoint point;
    point.distance_m = config.link_distance_m;
    point.snr_db = snr_db(scenario, loss);
    const auto ladder =
        build_qam_ladder(scenario.target_ber, scenario.max_qam_order);
    const auto scheme =
        max_modulation(point.snr_db, ladder, scenario.max_qam_order);
    if (scheme) {
        point.selected_order = scheme->order;
        point.net_rate_gbps = net_rate_gbps(*scheme, scenario);
    }
    return point;
}

std::vector<SubarrayPoint> subarray_sweep(std::vector<int> n_elements,
                                          std::vector<double> angle_grid_deg,
                                          const SubarrayConfig &config,
                                          const AtmosphereState &atmosphere,
                                          const LineCatalog &catalog) {
    if (n_elements.empty() || angle_grid_deg.empty())
        throw errors::NonPositiveInput("sweep grids must be nonempty");
    std::sort(n_elements.begin(), n_elements.end());
    std::sort(angle_grid_deg.begin(), angle_grid_deg.end());

    std::vector<SubarrayPoint> table;
    table.reserve(n_elements.size() * angle_grid_deg.size());
    for (int n : n_elements) {
        for (double angle : angle_grid_deg) {
            SubarrayConfig cell = config;
            cell.n_elements = n;
            cell.opening_angle_deg = angle;
            const RatePoint rate = subarray_rate(cell, atmosphere, catalog);
            table.push_back({n, angle, rate.snr_db, rate.net_rate_gbps});
        }
    }
    return table;
}

} // namespace thzlink
