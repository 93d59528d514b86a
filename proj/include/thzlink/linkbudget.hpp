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
// Link budget: losses -> SNR -> highest feasible QAM order at a BER
// threshold -> net data rate, over a set of link distances.

#ifndef THZLINK_LINKBUDGET_HPP
#define THZLINK_LINKBUDGET_HPP

#include <optional>
#include <vector>

#include "thzlink/channel.hpp"

namespace thzlink {

struct ApertureSpec {
    double diameter_m = 0.0;  // > 0
    double efficiency = 0.0;  // (0, 1]
};

// Full transmit/receive parameter set of one link. Antenna gains are either
// explicit (tx_gain_dbi/rx_gain_dbi) or derived from a circular-aperture
// spec; when an aperture is set it wins and the gain follows frequency.
struct LinkScenario {
    double carrier_frequency_ghz = 300.0; // [GHz]
    double symbol_rate_gbd = 64.0;        // [Gbd], > 0
    double noise_bandwidth_ghz = 64.0;    // [GHz], >= symbol_rate_gbd
    double tx_power_dbm = 0.0;            // [dBm], linear-regime PA
    std::optional<ApertureSpec> tx_aperture = ApertureSpec{0.225, 0.8};
    std::optional<ApertureSpec> rx_aperture = ApertureSpec{0.225, 0.8};
    double tx_gain_dbi = 0.0;             // [dBi], used when tx_aperture unset
    double rx_gain_dbi = 0.0;             // [dBi], used when rx_aperture unset
    double noise_figure_db = 10.0;        // [dB]
    double implementation_margin_db = 0.0;// [dB], >= 0
    double code_rate = 0.893;             // (0, 1]
    int polarizations = 1;                // 1 or 2
    int max_qam_order = 128;              // power of 2, >= 4
    double target_ber = 2e-2;             // pre-FEC BER threshold, (0, 0.5)

    double tx_gain_at(double frequency_ghz) const; // [dBi]
    double rx_gain_at(double frequency_ghz) const; // [dBi]
    void validate() const; // throws errors::ConfigError
};

// One QAM rung: order, bits per symbol, and the SNR needed to hit the
// configured BER threshold.
struct ModulationScheme {
    int order = 0;
    double bits_per_symbol = 0.0;
    double required_snr_db = 0.0; // [dB]
};

struct RatePoint {
    double distance_m = 0.0;          // [m]
    double snr_db = 0.0;              // [dB]
    std::optional<int> selected_order;// nullopt = outage
    double net_rate_gbps = 0.0;       // [Gbps], 0 on outage
};

// Boresight gain of a circular aperture: 10*log10(eta * (pi*D*f/c)^2).
double antenna_gain_from_aperture(double diameter_m, double efficiency,
                                  double frequency_ghz);

// Thermal noise power: -174 dBm/Hz + NF + 10*log10(B in Hz).
double noise_power_dbm(double bandwidth_ghz, double noise_figure_db);

// tx_power + gains - total loss - noise - implementation margin. Throws
// errors::InconsistentFrequency when the loss was evaluated at a different
// frequency than the scenario carrier.
double snr_db(const LinkScenario &scenario, const LossBreakdown &loss);

// Gray-coded M-QAM bit error rate over AWGN at the given SNR (approximation;
// square constellations for even log2(M), cross constellations for odd).
double qam_ber(int order, double snr_db);

// Inverts qam_ber by bisection (0.005 dB bracket). Throws errors::NoSolution
// when the target BER is above what the constellation can reach.
double required_snr_for_ber(int order, double target_ber);

// Rungs {4, 8, 16, 32, 64, 128} up to max_order, each with its required SNR
// at target_ber; sorted ascending by order.
std::vector<ModulationScheme> build_qam_ladder(double target_ber,
                                               int max_order = 128);

// Highest rung with required_snr_db <= snr (ties admit) and order <= cap;
// nullopt when even the lowest rung fails (outage). Ladder must be sorted
// ascending by order; throws errors::EmptyLadder when empty.
std::optional<ModulationScheme>
max_modulation(double snr_db, const std::vector<ModulationScheme> &ladder,
               int max_qam_order);

// symbol_rate * log2(M) * code_rate * polarizations [Gbps].
double net_rate_gbps(const ModulationScheme &scheme,
                     const LinkScenario &scenario);

// For each distance: total_loss -> snr -> modulation selection -> net rate.
// Distances must be positive; they are evaluated in ascending order. Outage
// yields a valid RatePoint with net_rate 0 (sweeps never abort).
std::vector<RatePoint> rate_vs_distance(const LinkScenario &scenario,
                                        std::vector<double> distances_m,
                                        const AtmosphereState &atmosphere,
                                        const WeatherState &weather,
                                        const LineCatalog &catalog);

} // namespace thzlink

#endif // THZLINK_LINKBUDGET_HPP
