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
// Command-line front end. All commands are driven by a scenario config file
// plus repeatable --set section.key=value overrides; output is CSV with one
// header row, '.' decimal separator and 6 significant digits, so identical
// inputs produce byte-identical files.

#include "thzlink/cli_app.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "CLI11.hpp"

#include "thzlink/arrays.hpp"
#include "thzlink/channel.hpp"
#include "thzlink/errors.hpp"
#include "thzlink/linkbudget.hpp"
#include "thzlink/scenario_config.hpp"
#include "thzlink/spectroscopy.hpp"
#include "thzlink/windows.hpp"

namespace thzlink {

namespace {

// Fixed 6-significant-digit formatting; the C locale guarantees '.' as the
// decimal separator, keeping output byte-deterministic.
std::string g6(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

struct CommonOptions {
    std::string config_path;
    std::string catalog_path;
    std::string out_path;
    std::vector<std::string> overrides;
    double threshold_db_per_km = 0.0;
};

void add_common_options(CLI::App *cmd, CommonOptions &opts) {
    cmd->add_option("--config", opts.config_path,
                    "scenario config file (INI-style sections)");
    cmd->add_option("--catalog", opts.catalog_path,
                    "line catalog file (.par), overrides the config");
    cmd->add_option("--out", opts.out_path,
                    "output file (default: standard output)");
    cmd->add_option("--set", opts.overrides,
                    "override a config value, section.key=value (repeatable)")
        ->take_all();
    cmd->add_option("--threshold", opts.threshold_db_per_km,
                    "transmission-window absorption threshold [dB/km]");
}

ScenarioConfig make_scenario(const CommonOptions &opts, CLI::App *cmd,
                             bool config_required) {
    ScenarioConfig config;
    if (!opts.config_path.empty())
        config = ScenarioConfig::from_file(opts.config_path);
    else if (config_required)
        throw errors::ConfigError("--config is required for this command");

    for (const std::string &item : opts.overrides) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw errors::ConfigError("--set expects section.key=value, got '" +
                                      item + "'");
        config.apply_override(item.substr(0, eq), item.substr(eq + 1));
    }
    // Dedicated flags win over the file and --set.
    if (!opts.catalog_path.empty())
        config.catalog.path = opts.catalog_path;
    if (!opts.out_path.empty())
        config.output_path = opts.out_path;
    if (cmd->count("--threshold") > 0)
        config.windows.threshold_db_per_km = opts.threshold_db_per_km;

    config.validate();
    return config;
}

LineCatalog load_catalog_from(const ScenarioConfig &config) {
    if (config.catalog.path.empty())
        throw errors::ConfigError(
            "no catalog file set (catalog.path or --catalog)");
    return load_catalog_file(config.catalog.path, config.catalog.molecule,
                             config.catalog.f_lo_ghz, config.catalog.f_hi_ghz);
}

void write_output(const ScenarioConfig &config, const std::string &text,
                  std::ostream &out) {
    if (config.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file)
        throw errors::IoError("cannot open output file: " +
                              config.output_path);
    file << text;
}

std::string run_spectrum(const ScenarioConfig &config) {
    const LineCatalog catalog = load_catalog_from(config);
    const LossSpectrum spectrum = loss_spectrum(
        config.sweep.f_lo_ghz, config.sweep.f_hi_ghz, config.sweep.f_step_ghz,
        config.sweep.spectrum_distance_m, config.atmosphere, config.weather,
        catalog);
    std::string csv = "frequency_ghz,fspl_db,absorption_db,rain_db,fog_db,"
                      "total_db\n";
    for (const LossBreakdown &row : spectrum.grid) {
        csv += g6(row.frequency_ghz) + ',' + g6(row.fspl_db) + ',' +
               g6(row.absorption_db) + ',' + g6(row.rain_db) + ',' +
               g6(row.fog_db) + ',' + g6(row.total_db) + '\n';
    }
    return csv;
}

std::string run_rate_distance(const ScenarioConfig &config) {
    const LineCatalog catalog = load_catalog_from(config);
    const std::vector<RatePoint> points =
        rate_vs_distance(config.link, config.sweep.distances_m,
                         config.atmosphere, config.weather, catalog);
    std::string csv = "distance_m,snr_db,qam_order,net_rate_gbps\n";
    for (const RatePoint &point : points) {
        csv += g6(point.distance_m) + ',' + g6(point.snr_db) + ',';
        csv += point.selected_order ? std::to_string(*point.selected_order)
                                    : std::string("none");
        csv += ',' + g6(point.net_rate_gbps) + '\n';
    }
    return csv;
}

std::string run_subarray(const ScenarioConfig &config) {
    const LineCatalog catalog = load_catalog_from(config);

    SubarrayConfig subarray;
    subarray.per_element_power_dbm = config.subarray.per_element_power_dbm;
    subarray.link_distance_m = config.subarray.link_distance_m;
    subarray.kappa = config.subarray.kappa;
    subarray.base_scenario = config.link;

    std::vector<double> angles;
    const auto n_steps = static_cast<std::size_t>(std::floor(
        (config.subarray.angle_max_deg - config.subarray.angle_min_deg) /
            config.subarray.angle_step_deg +
        1e-9));
    for (std::size_t i = 0; i <= n_steps; ++i)
        angles.push_back(config.subarray.angle_min_deg +
                         static_cast<double>(i) *
                             config.subarray.angle_step_deg);

    const std::vector<SubarrayPoint> table =
        subarray_sweep(config.subarray.n_elements, angles, subarray,
                       config.atmosphere, catalog);
    std::string csv = "n_elements,opening_angle_deg,net_rate_gbps\n";
    for (const SubarrayPoint &cell : table)
        csv += std::to_string(cell.n_elements) + ',' +
               g6(cell.opening_angle_deg) + ',' + g6(cell.net_rate_gbps) +
               '\n';
    return csv;
}

std::string run_windows(const ScenarioConfig &config) {
    const LineCatalog catalog = load_catalog_from(config);
    // Windows are defined on molecular absorption alone, so the spectrum is
    // evaluated in clear air (weather would only fill the unused columns).
    const WeatherState clear_air;
    const LossSpectrum spectrum = loss_spectrum(
        config.sweep.f_lo_ghz, config.sweep.f_hi_ghz, config.sweep.f_step_ghz,
        config.windows.eval_distance_m, config.atmosphere, clear_air, catalog);
    const std::vector<TransmissionWindow> windows =
        find_windows(spectrum, config.windows.threshold_db_per_km);

    std::string csv =
        "f_lo_ghz,f_hi_ghz,width_ghz,usable_width_at_distance_ghz\n";
    for (const TransmissionWindow &window : windows) {
        const UsableBand usable = usable_bandwidth(
            window, config.link, config.windows.eval_distance_m,
            config.atmosphere, catalog, config.windows.grid_step_ghz);
        csv += g6(window.f_lo_ghz) + ',' + g6(window.f_hi_ghz) + ',' +
               g6(window.f_hi_ghz - window.f_lo_ghz) + ',' +
               g6(usable.width_ghz) + '\n';
    }
    return csv;
}

std::string run_parse_catalog(const ScenarioConfig &config, bool show_lines) {
    const LineCatalog catalog = load_catalog_from(config);
    std::string text = "lines: " + std::to_string(catalog.lines.size()) + '\n';
    if (catalog.lines.empty())
        text += "range_ghz: n/a\n";
    else
        text += "range_ghz: " + g6(catalog.lines.front().center_frequency_ghz) +
                " .. " + g6(catalog.lines.back().center_frequency_ghz) + '\n';
    if (show_lines) {
        text += "center_frequency_ghz,intensity,air_halfwidth,self_halfwidth,"
                "lower_state_energy,temperature_exponent\n";
        for (const SpectralLine &line : catalog.lines)
            text += g6(line.center_frequency_ghz) + ',' + g6(line.intensity) +
                    ',' + g6(line.air_halfwidth) + ',' +
                    g6(line.self_halfwidth) + ',' +
                    g6(line.lower_state_energy) + ',' +
                    g6(line.temperature_exponent) + '\n';
    }
    return text;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
    CLI::App app{"sub-THz wireless link planning toolkit"};
    app.require_subcommand(1);

    CommonOptions opts;
    bool show_lines = false;

    CLI::App *spectrum =
        app.add_subcommand("spectrum", "per-mechanism loss spectrum CSV");
    CLI::App *rate = app.add_subcommand("rate-distance",
                                        "net data rate over distance CSV");
    CLI::App *subarray = app.add_subcommand(
        "subarray", "element count vs opening angle rate table CSV");
    CLI::App *windows_cmd = app.add_subcommand(
        "windows", "transmission windows and usable bandwidth CSV");
    CLI::App *parse_catalog = app.add_subcommand(
        "parse-catalog", "line catalog summary (count, frequency range)");
    for (CLI::App *cmd : {spectrum, rate, subarray, windows_cmd, parse_catalog})
        add_common_options(cmd, opts);
    parse_catalog->add_flag("--lines", show_lines, "print the per-line table");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2; // usage problems are config-class errors
    }

    try {
        if (parse_catalog->parsed()) {
            // parse-catalog works from --catalog alone; a config is optional.
            ScenarioConfig config = make_scenario(opts, parse_catalog, false);
            if (config.catalog.path.empty())
                throw errors::ConfigError(
                    "parse-catalog needs --catalog or a config with "
                    "catalog.path");
            write_output(config, run_parse_catalog(config, show_lines), out);
            return 0;
        }
        CLI::App *active = app.get_subcommands().front();
        const ScenarioConfig config = make_scenario(opts, active, true);
        std::string csv;
        if (spectrum->parsed())
            csv = run_spectrum(config);
        else if (rate->parsed())
            csv = run_rate_distance(config);
        else if (subarray->parsed())
            csv = run_subarray(config);
        else
            csv = run_windows(config);
        write_output(config, csv, out);
        return 0;
    } catch (const errors::ConfigError &e) {
        err << "config error: " << e.what() << '\n';
        return 2;
    } catch (const errors::IoError &e) {
        err << "data error: " << e.what() << '\n';
        return 3;
    } catch (const errors::MalformedRecord &e) {
        err << "catalog error: " << e.what() << '\n';
        return 3;
    } catch (const errors::NonPositiveWidth &e) {
        err << "catalog error: " << e.what() << '\n';
        return 3;
    } catch (const errors::Error &e) {
        err << "numerical error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return 4;
    }
}

} // namespace thzlink
