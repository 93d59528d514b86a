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

#include "thzlink/scenario_config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "thzlink/errors.hpp"

namespace thzlink {

namespace {

std::string trim(const std::string &s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double to_double(const std::string &key, const std::string &value) {
    double out = 0.0;
    const char *first = value.c_str();
    const char *last = first + value.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last)
        throw errors::ConfigError("key '" + key + "': '" + value +
                                  "' is not a number");
    return out;
}

int to_int(const std::string &key, const std::string &value) {
    int out = 0;
    const char *first = value.c_str();
    const char *last = first + value.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last)
        throw errors::ConfigError("key '" + key + "': '" + value +
                                  "' is not an integer");
    return out;
}

// Whitespace- or comma-separated list.
std::vector<std::string> split_list(const std::string &value) {
    std::vector<std::string> items;
    std::string current;
    for (char ch : value) {
        if (ch == ' ' || ch == '\t' || ch == ',') {
            if (!current.empty()) {
                items.push_back(current);
                current.clear();
            }
        } else {
            current.push_back(ch);
        }
    }
    if (!current.empty())
        items.push_back(current);
    return items;
}

std::vector<double> to_double_list(const std::string &key,
                                   const std::string &value) {
    std::vector<double> out;
    for (const std::string &item : split_list(value))
        out.push_back(to_double(key, item));
    return out;
}

std::vector<int> to_int_list(const std::string &key,
                             const std::string &value) {
    std::vector<int> out;
    for (const std::string &item : split_list(value))
        out.push_back(to_int(key, item));
    return out;
}

std::string directory_of(const std::string &path) {
    const auto pos = path.find_last_of('/');
    return pos == std::string::npos ? std::string(".") : path.substr(0, pos);
}

std::string resolve_path(const std::string &base_dir,
                         const std::string &value) {
    if (base_dir.empty() || value.empty() || value.front() == '/')
        return value;
    return base_dir + "/" + value;
}

void ensure_aperture(std::optional<ApertureSpec> &aperture) {
    if (!aperture)
        aperture = ApertureSpec{0.225, 0.8};
}

// One "section.key = value" assignment; base_dir resolves relative paths
// (empty for command-line overrides, which are relative to the CWD).
void assign(ScenarioConfig &config, const std::string &section,
            const std::string &key, const std::string &value,
            const std::string &base_dir) {
    const std::string full = section + "." + key;

    if (section == "catalog") {
        if (key == "path")
            config.catalog.path = resolve_path(base_dir, value);
        else if (key == "molecule")
            config.catalog.molecule = to_int(full, value);
        else if (key == "f_lo_ghz")
            config.catalog.f_lo_ghz = to_double(full, value);
        else if (key == "f_hi_ghz")
            config.catalog.f_hi_ghz = to_double(full, value);
        else
            throw errors::ConfigError("unknown key '" + full + "'");
        return;
    }

    if (section == "link") {
        LinkScenario &link = config.link;
        if (key == "carrier_frequency_ghz")
            link.carrier_frequency_ghz = to_double(full, value);
        else if (key == "symbol_rate_gbd")
            link.symbol_rate_gbd = to_double(full, value);
        else if (key == "noise_bandwidth_ghz")
            link.noise_bandwidth_ghz = to_double(full, value);
        else if (key == "tx_power_dbm")
            link.tx_power_dbm = to_double(full, value);
        else if (key == "antenna_diameter_m") {
            ensure_aperture(link.tx_aperture);
            ensure_aperture(link.rx_aperture);
            link.tx_aperture->diameter_m = to_double(full, value);
            link.rx_aperture->diameter_m = link.tx_aperture->diameter_m;
        } else if (key == "aperture_efficiency") {
            ensure_aperture(link.tx_aperture);
            ensure_aperture(link.rx_aperture);
            link.tx_aperture->efficiency = to_double(full, value);
            link.rx_aperture->efficiency = link.tx_aperture->efficiency;
        } else if (key == "tx_gain_dbi") {
            // An explicit gain replaces the aperture model on that side.
            link.tx_aperture.reset();
            link.tx_gain_dbi = to_double(full, value);
        } else if (key == "rx_gain_dbi") {
            link.rx_aperture.reset();
            link.rx_gain_dbi = to_double(full, value);
        } else if (key == "noise_figure_db")
            link.noise_figure_db = to_double(full, value);
        else if (key == "implementation_margin_db")
            link.implementation_margin_db = to_double(full, value);
        else if (key == "code_rate")
            link.code_rate = to_double(full, value);
        else if (key == "polarizations")
            link.polarizations = to_int(full, value);
        else if (key == "max_qam_order")
            link.max_qam_order = to_int(full, value);
        else if (key == "target_ber")
            link.target_ber = to_double(full, value);
        else
            throw errors::ConfigError("unknown key '" + full + "'");
        return;
    }

    if (section == "atmosphere") {
        if (key == "pressure_pa")
            config.atmosphere.pressure_pa = to_double(full, value);
        else if (key == "temperature_k")
            config.atmosphere.temperature_k = to_double(full, value);
        else if (key == "water_mixing_ratio")
            config.atmosphere.water_mixing_ratio = to_double(full, value);
        else
            throw errors::ConfigError("unknown key '" + full + "'");
        return;
    }

    if (section == "weather") {
        if (key == "rain_rate_mm_per_h")
            config.weather.rain_rate_mm_per_h = to_double(full, value);
        else if (key == "fog_liquid_water_g_per_m3")
            config.weather.fog_liquid_water_g_per_m3 = to_double(full, value);
        else
            throw errors::ConfigError("unknown key '" + full + "'");
        return;
    }

    if (section == "sweep") {
        if (key == "distances_m")
            config.sweep.distances_m = to_double_list(full, value);
        else if (key == "f_lo_ghz")
            config.sweep.f_lo_ghz = to_double(full, value);
        else if (key == "f_hi_ghz")
            config.sweep.f_hi_ghz = to_double(full, value);
        else if (key == "f_step_ghz")
            config.sweep.f_step_ghz = to_double(full, value);
        else if (key == "spectrum_distance_m")
            config.sweep.spectrum_distance_m = to_double(full, value);
        else
            throw errors::ConfigError("unknown key '" + full + "'");
        return;
    }

    if (section == "subarray") {
        if (key == "n_elements")
            config.subarray.n_elements = to_int_list(full, value);
        else if (key == "angle_min_deg")
            config.subarray.angle_min_deg = to_double(full, value);
        else if (key == "angle_max_deg")
            config.subarray.angle_max_deg = to_double(full, value);
        else if (key == "angle_step_deg")
            config.subarray.angle_step_deg = to_double(full, value);
        else if (key == "per_element_power_dbm")
            config.subarray.per_element_power_dbm = to_double(full, value);
        else if (key == "link_distance_m")
            config.subarray.link_distance_m = to_double(full, value);
        else if (key == "kappa")
            config.subarray.kappa = to_double(full, value);
        else
            throw errors::ConfigError("unknown key '" + full + "'");
        return;
    }

    if (section == "windows") {
        if (key == "threshold_db_per_km")
            config.windows.threshold_db_per_km = to_double(full, value);
        else if (key == "eval_distance_m")
            config.windows.eval_distance_m = to_double(full, value);
        else if (key == "grid_step_ghz")
            config.windows.grid_step_ghz = to_double(full, value);
        else
            throw errors::ConfigError("unknown key '" + full + "'");
        return;
    }

    if (section == "output") {
        if (key == "path")
            config.output_path = resolve_path(base_dir, value);
        else
            throw errors::ConfigError("unknown key '" + full + "'");
        return;
    }

    throw errors::ConfigError("unknown section '" + section + "'");
}

} // namespace

ScenarioConfig ScenarioConfig::from_file(const std::string &path) {
    std::ifstream stream(path);
    if (!stream)
        throw errors::ConfigError("cannot open config file: " + path);
    const std::string base_dir = directory_of(path);

    ScenarioConfig config;
    std::string raw;
    std::string section;
    std::size_t line_number = 0;
    while (std::getline(stream, raw)) {
        ++line_number;
        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#' || line.front() == ';')
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw errors::ConfigError(path + ":" +
                                          std::to_string(line_number) +
                                          ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw errors::ConfigError(path + ":" +
                                      std::to_string(line_number) +
                                      ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty())
            throw errors::ConfigError(path + ":" +
                                      std::to_string(line_number) +
                                      ": key outside any [section]");
        try {
            assign(config, section, key, value, base_dir);
        } catch (const errors::ConfigError &e) {
            throw errors::ConfigError(path + ":" +
                                      std::to_string(line_number) + ": " +
                                      e.what());
        }
    }
    return config;
}

void ScenarioConfig::apply_override(const std::string &key,
                                    const std::string &value) {
    const auto dot = key.find('.');
    if (dot == std::string::npos || dot == 0 || dot == key.size() - 1)
        throw errors::ConfigError("override key '" + key +
                                  "' must look like section.key");
    assign(*this, key.substr(0, dot), key.substr(dot + 1), trim(value), "");
}

void ScenarioConfig::validate() const {
    link.validate();

    if (atmosphere.pressure_pa <= 0.0 || atmosphere.temperature_k <= 0.0 ||
        atmosphere.water_mixing_ratio < 0.0 ||
        atmosphere.water_mixing_ratio >= 1.0)
        throw errors::ConfigError(
            "atmosphere: need pressure > 0, temperature > 0, mixing ratio in "
            "[0, 1)");
    if (weather.rain_rate_mm_per_h < 0.0 ||
        weather.fog_liquid_water_g_per_m3 < 0.0)
        throw errors::ConfigError("weather: rates must be >= 0");

    if (catalog.molecule < 1 || catalog.f_lo_ghz < 0.0 ||
        catalog.f_lo_ghz >= catalog.f_hi_ghz)
        throw errors::ConfigError(
            "catalog: need molecule >= 1 and a band with 0 <= f_lo < f_hi");

    if (sweep.distances_m.empty())
        throw errors::ConfigError("sweep: distances_m must be nonempty");
    for (double d : sweep.distances_m)
        if (d <= 0.0)
            throw errors::ConfigError("sweep: distances must be > 0 m");
    if (sweep.f_lo_ghz > sweep.f_hi_ghz || sweep.f_lo_ghz <= 0.0)
        throw errors::ConfigError("sweep: need 0 < f_lo <= f_hi");
    if (sweep.f_step_ghz <= 0.0)
        throw errors::ConfigError("sweep: f_step_ghz must be > 0");
    if (sweep.spectrum_distance_m <= 0.0)
        throw errors::ConfigError("sweep: spectrum_distance_m must be > 0");

    if (subarray.n_elements.empty())
        throw errors::ConfigError("subarray: n_elements must be nonempty");
    for (int n : subarray.n_elements)
        if (n < 1)
            throw errors::ConfigError("subarray: element counts must be >= 1");
    if (subarray.angle_min_deg <= 0.0 ||
        subarray.angle_max_deg > 180.0 ||
        subarray.angle_min_deg > subarray.angle_max_deg)
        throw errors::ConfigError(
            "subarray: need 0 < angle_min <= angle_max <= 180");
    if (subarray.angle_step_deg <= 0.0)
        throw errors::ConfigError("subarray: angle_step_deg must be > 0");
    if (subarray.link_distance_m <= 0.0)
        throw errors::ConfigError("subarray: link_distance_m must be > 0");
    if (subarray.kappa <= 0.0)
        throw errors::ConfigError("subarray: kappa must be > 0");

    if (windows.threshold_db_per_km <= 0.0)
        throw errors::ConfigError("windows: threshold must be > 0 dB/km");
    if (windows.eval_distance_m <= 0.0)
        throw errors::ConfigError("windows: eval_distance_m must be > 0");
    if (windows.grid_step_ghz <= 0.0)
        throw errors::ConfigError("windows: grid_step_ghz must be > 0");
}

} // namespace thzlink
