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
// Scenario files: INI-style key/value text with [section] headers driving
// all CLI commands. Unknown sections or keys are rejected. Relative paths
// are resolved against the config file's directory.

#ifndef THZLINK_SCENARIO_CONFIG_HPP
#define THZLINK_SCENARIO_CONFIG_HPP

#include <string>
#include <vector>

#include "thzlink/arrays.hpp"
#include "thzlink/channel.hpp"
#include "thzlink/linkbudget.hpp"

namespace thzlink {

struct CatalogConfig {
    std::string path;        // .par catalog file
    int molecule = 1;        // molecule id filter (1 = water)
    double f_lo_ghz = 0.0;   // load band [GHz]
    double f_hi_ghz = 1100.0;
};

struct SweepConfig {
    std::vector<double> distances_m = {100, 200, 500, 1000,
                                       2000, 3000, 5000, 10000}; // [m]
    double f_lo_ghz = 100.0;          // spectrum band [GHz]
    double f_hi_ghz = 1000.0;
    double f_step_ghz = 1.0;
    double spectrum_distance_m = 1000.0; // [m], fixed distance of the spectrum
};

struct SubarraySweepConfig {
    std::vector<int> n_elements = {4, 8, 16};
    double angle_min_deg = 5.0;   // [deg]
    double angle_max_deg = 60.0;  // [deg]
    double angle_step_deg = 2.5;  // [deg]
    double per_element_power_dbm = 0.0; // [dBm]
    double link_distance_m = 10.0;      // [m]
    double kappa = kPencilBeamKappa;    // [deg^2]
};

struct WindowSearchConfig {
    double threshold_db_per_km = 10.0; // [dB/km]
    double eval_distance_m = 1000.0;   // [m], usable-bandwidth distance
    double grid_step_ghz = 1.0;        // [GHz]
};

struct ScenarioConfig {
    CatalogConfig catalog;
    LinkScenario link;
    AtmosphereState atmosphere{101325.0, 296.0, 0.01};
    WeatherState weather;
    SweepConfig sweep;
    SubarraySweepConfig subarray;
    WindowSearchConfig windows;
    std::string output_path; // empty = stdout

    // Parses an INI-style file. Throws errors::ConfigError on unreadable
    // files, syntax errors, unknown sections/keys, or non-numeric values.
    static ScenarioConfig from_file(const std::string &path);

    // Applies one "section.key=value" override (same key set as the file).
    void apply_override(const std::string &key, const std::string &value);

    // Checks every owning type's invariants; throws errors::ConfigError.
    void validate() const;
};

} // namespace thzlink

#endif // THZLINK_SCENARIO_CONFIG_HPP
