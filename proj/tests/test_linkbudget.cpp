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

#include <cmath>

#include "doctest.h"

#include "test_helpers.hpp"
#include "thzlink/constants.hpp"
#include "thzlink/errors.hpp"
#include "thzlink/linkbudget.hpp"

using namespace thzlink;

namespace {

constexpr double kPi = 3.14159265358979323846;

const AtmosphereState kHumidAir{101325.0, 296.0, 0.01};

// 300 GHz / 64 GBd / 22.5 cm dishes / NF 10 dB reference link (the library
// defaults, spelled out so the test stays meaningful if defaults move).
LinkScenario reference_link() {
    LinkScenario link;
    link.carrier_frequency_ghz = 300.0;
    link.symbol_rate_gbd = 64.0;
    link.noise_bandwidth_ghz = 64.0;
    link.tx_power_dbm = 0.0;
    link.tx_aperture = ApertureSpec{0.225, 0.8};
    link.rx_aperture = ApertureSpec{0.225, 0.8};
    link.noise_figure_db = 10.0;
    link.implementation_margin_db = 0.0;
    link.code_rate = 0.893;
    link.polarizations = 1;
    link.max_qam_order = 128;
    link.target_ber = 2e-2;
    return link;
}

} // namespace

TEST_CASE("aperture gain anchor and scaling") {
    CHECK(antenna_gain_from_aperture(0.225, 0.8, 300.0) ==
          doctest::Approx(56.0235587219).epsilon(1e-9));

    // pi*D*f/c = 1 makes the electrical size unity: 0 dBi at full efficiency.
    const double d_unity = constants::kSpeedOfLight / (kPi * 300.0e9);
    CHECK(antenna_gain_from_aperture(d_unity, 1.0, 300.0) ==
          doctest::Approx(0.0).epsilon(1e-12));

    // Doubling the diameter (or frequency) adds 20*log10(2).
    const double six = 20.0 * std::log10(2.0);
    CHECK(antenna_gain_from_aperture(0.45, 0.8, 300.0) -
              antenna_gain_from_aperture(0.225, 0.8, 300.0) ==
          doctest::Approx(six).epsilon(1e-12));
    CHECK(antenna_gain_from_aperture(0.225, 0.8, 600.0) -
              antenna_gain_from_aperture(0.225, 0.8, 300.0) ==
          doctest::Approx(six).epsilon(1e-12));

    CHECK_THROWS_AS(antenna_gain_from_aperture(0.0, 0.8, 300.0),
                    errors::NonPositiveInput);
    CHECK_THROWS_AS(antenna_gain_from_aperture(0.225, 1.5, 300.0),
                    errors::NonPositiveInput);
}

TEST_CASE("noise power follows -174 dBm/Hz plus NF plus bandwidth") {
    CHECK(noise_power_dbm(1e-9, 0.0) == doctest::Approx(-174.0).epsilon(1e-12));
    CHECK(noise_power_dbm(64.0, 10.0) ==
          doctest::Approx(-55.9382002602).epsilon(1e-9));
    CHECK(noise_power_dbm(64.0, 13.0) - noise_power_dbm(64.0, 10.0) ==
          doctest::Approx(3.0).epsilon(1e-12));
    CHECK_THROWS_AS(noise_power_dbm(0.0, 10.0), errors::NonPositiveInput);
}

TEST_CASE("scenario gains follow the aperture unless overridden") {
    LinkScenario link = reference_link();
    CHECK(link.tx_gain_at(300.0) == doctest::Approx(56.0235587219).epsilon(1e-9));
    CHECK(link.rx_gain_at(600.0) - link.rx_gain_at(300.0) ==
          doctest::Approx(20.0 * std::log10(2.0)).epsilon(1e-12));

    link.rx_aperture.reset();
    link.rx_gain_dbi = 40.0;
    CHECK(link.rx_gain_at(300.0) == 40.0);
    CHECK(link.rx_gain_at(600.0) == 40.0); // fixed gain ignores frequency
}

TEST_CASE("scenario invariants are validated") {
    CHECK_NOTHROW(reference_link().validate());
    LinkScenario bad = reference_link();
    bad.symbol_rate_gbd = 0.0;
    CHECK_THROWS_AS(bad.validate(), errors::ConfigError);
    bad = reference_link();
    bad.noise_bandwidth_ghz = 32.0; // narrower than the symbol rate
    CHECK_THROWS_AS(bad.validate(), errors::ConfigError);
    bad = reference_link();
    bad.code_rate = 1.2;
    CHECK_THROWS_AS(bad.validate(), errors::ConfigError);
    bad = reference_link();
    bad.polarizations = 3;
    CHECK_THROWS_AS(bad.validate(), errors::ConfigError);
    bad = reference_link();
    bad.max_qam_order = 48; // not a power of two
    CHECK_THROWS_AS(bad.validate(), errors::ConfigError);
    bad = reference_link();
    bad.target_ber = 0.5;
    CHECK_THROWS_AS(bad.validate(), errors::ConfigError);
    bad = reference_link();
    bad.tx_aperture = ApertureSpec{0.225, 0.0};
    CHECK_THROWS_AS(bad.validate(), errors::ConfigError);
}

TEST_CASE("snr anchor for the reference link at 1 km") {
    const LinkScenario link = reference_link();
    const LossBreakdown loss = total_loss(300.0, 1000.0, kHumidAir,
                                          WeatherState{},
                                          testing::fixture_catalog());
    CHECK(snr_db(link, loss) == doctest::Approx(24.2336088844).epsilon(1e-8));
}

TEST_CASE("snr shifts affinely with transmit power and margin") {
    LinkScenario link = reference_link();
    const LossBreakdown loss = total_loss(300.0, 1000.0, kHumidAir,
                                          WeatherState{},
                                          testing::fixture_catalog());
    const double base = snr_db(link, loss);
    link.tx_power_dbm = 10.0;
    CHECK(snr_db(link, loss) == doctest::Approx(base + 10.0).epsilon(1e-12));
    link.tx_power_dbm = 0.0;
    link.implementation_margin_db = 3.0;
    CHECK(snr_db(link, loss) == doctest::Approx(base - 3.0).epsilon(1e-12));
}

TEST_CASE("snr rejects a loss computed at a different frequency") {
    const LinkScenario link = reference_link();
    const LossBreakdown loss = total_loss(301.0, 1000.0, kHumidAir,
                                          WeatherState{},
                                          testing::fixture_catalog());
    CHECK_THROWS_AS(snr_db(link, loss), errors::InconsistentFrequency);
}

TEST_CASE("required snr per constellation at the 2e-2 threshold") {
    CHECK(required_snr_for_ber(4, 2e-2) == doctest::Approx(6.250947).epsilon(2e-3));
    CHECK(required_snr_for_ber(8, 2e-2) == doctest::Approx(9.930715).epsilon(2e-3));
    CHECK(required_snr_for_ber(16, 2e-2) == doctest::Approx(12.710796).epsilon(2e-3));
    CHECK(required_snr_for_ber(32, 2e-2) == doctest::Approx(15.727603).epsilon(2e-3));
    CHECK(required_snr_for_ber(64, 2e-2) == doctest::Approx(18.429504).epsilon(2e-3));
    CHECK(required_snr_for_ber(128, 2e-2) == doctest::Approx(21.287447).epsilon(2e-3));
}

TEST_CASE("ber decreases with snr and the inversion lands on the target") {
    for (int order : {4, 8, 16, 32, 64, 128}) {
        CHECK(qam_ber(order, 10.0) > qam_ber(order, 15.0));
        CHECK(qam_ber(order, 15.0) > qam_ber(order, 20.0));
        const double snr = required_snr_for_ber(order, 2e-2);
        const double ber = qam_ber(order, snr);
        CHECK(ber <= 2e-2);        // returned bracket side is feasible
        CHECK(ber > 0.95 * 2e-2);  // and tight: 0.005 dB wide
    }
    CHECK_THROWS_AS(qam_ber(5, 10.0), errors::NonPositiveInput);
    CHECK_THROWS_AS(qam_ber(2, 10.0), errors::NonPositiveInput);
}

TEST_CASE("unreachable ber targets raise NoSolution") {
    // 4-QAM: BER -> coeff/2 = 0.5 as SNR falls, so 0.5 is unreachable.
    CHECK_THROWS_AS(required_snr_for_ber(4, 0.5), errors::NoSolution);
    CHECK_THROWS_AS(required_snr_for_ber(4, 0.7), errors::NoSolution);
    CHECK_THROWS_AS(required_snr_for_ber(4, 0.0), errors::NonPositiveInput);
    CHECK_NOTHROW(required_snr_for_ber(4, 0.49));
}

TEST_CASE("qam ladder is complete and ordered") {
    const std::vector<ModulationScheme> ladder = build_qam_ladder(2e-2);
    REQUIRE(ladder.size() == 6);
    int expected_order = 4;
    for (const ModulationScheme &rung : ladder) {
        CHECK(rung.order == expected_order);
        CHECK(rung.bits_per_symbol ==
              doctest::Approx(std::log2(expected_order)).epsilon(1e-12));
        expected_order *= 2;
    }
    for (std::size_t i = 1; i < ladder.size(); ++i)
        CHECK(ladder[i].required_snr_db > ladder[i - 1].required_snr_db);

    CHECK(build_qam_ladder(2e-2, 64).size() == 5);
    CHECK(build_qam_ladder(2e-2, 4).size() == 1);
}

TEST_CASE("modulation selection picks the highest feasible rung") {
    const std::vector<ModulationScheme> ladder = build_qam_ladder(2e-2);

    CHECK_FALSE(max_modulation(0.0, ladder, 128).has_value()); // outage
    CHECK(max_modulation(30.0, ladder, 128)->order == 128);
    CHECK(max_modulation(30.0, ladder, 64)->order == 64); // hardware cap
    CHECK(max_modulation(13.0, ladder, 128)->order == 16);

    // A rung is admitted when the SNR meets it exactly.
    const double snr16 = ladder[2].required_snr_db;
    CHECK(max_modulation(snr16, ladder, 128)->order == 16);
    CHECK(max_modulation(std::nextafter(snr16, 0.0), ladder, 128)->order == 8);

    CHECK_THROWS_AS(max_modulation(30.0, {}, 128), errors::EmptyLadder);
}

TEST_CASE("net rate composes symbol rate, bits, code rate, polarizations") {
    LinkScenario link = reference_link();
    link.code_rate = 1.0;
    const ModulationScheme qam64{64, 6.0, 18.4};
    CHECK(net_rate_gbps(qam64, link) == doctest::Approx(384.0).epsilon(1e-12));

    // The reference coding rate and the dual-polarization variants.
    link.code_rate = 0.893;
    CHECK(net_rate_gbps({16, 4.0, 0.0}, link) ==
          doctest::Approx(228.608).epsilon(1e-12));
    CHECK(net_rate_gbps({64, 6.0, 0.0}, link) ==
          doctest::Approx(342.912).epsilon(1e-12));
    CHECK(net_rate_gbps({128, 7.0, 0.0}, link) ==
          doctest::Approx(400.064).epsilon(1e-12));
    link.polarizations = 2;
    CHECK(net_rate_gbps({64, 6.0, 0.0}, link) ==
          doctest::Approx(685.824).epsilon(1e-12));
    CHECK(net_rate_gbps({128, 7.0, 0.0}, link) ==
          doctest::Approx(800.128).epsilon(1e-12));
}

TEST_CASE("rate over distance for the reference link") {
    const LinkScenario link = reference_link();
    const std::vector<RatePoint> points =
        rate_vs_distance(link, {1000.0, 100.0, 10000.0}, kHumidAir,
                         WeatherState{}, testing::fixture_catalog());
    REQUIRE(points.size() == 3);

    // Input distances come back sorted ascending.
    CHECK(points[0].distance_m == 100.0);
    CHECK(points[1].distance_m == 1000.0);
    CHECK(points[2].distance_m == 10000.0);

    REQUIRE(points[1].selected_order.has_value());
    CHECK(*points[1].selected_order == 128);
    CHECK(points[1].snr_db == doctest::Approx(24.2336088844).epsilon(1e-8));
    CHECK(points[1].net_rate_gbps == doctest::Approx(400.064).epsilon(1e-12));

    // 10 km of water-vapor absorption kills the link: outage, not an error.
    CHECK_FALSE(points[2].selected_order.has_value());
    CHECK(points[2].net_rate_gbps == 0.0);

    // Net rate never grows with distance.
    CHECK(points[0].net_rate_gbps >= points[1].net_rate_gbps);
    CHECK(points[1].net_rate_gbps >= points[2].net_rate_gbps);

    CHECK_THROWS_AS(rate_vs_distance(link, {1000.0, -5.0}, kHumidAir,
                                     WeatherState{},
                                     testing::fixture_catalog()),
                    errors::NonPositiveInput);
}

TEST_CASE("rung selection is invariant to a common power/loss offset") {
    // Raising tx power by X and the margin by X must select the same rung.
    LinkScenario link = reference_link();
    LinkScenario shifted = reference_link();
    shifted.tx_power_dbm += 17.0;
    shifted.implementation_margin_db += 17.0;
    const std::vector<double> distances{200.0, 1000.0, 3000.0, 5000.0};
    const std::vector<RatePoint> a = rate_vs_distance(
        link, distances, kHumidAir, WeatherState{}, testing::fixture_catalog());
    const std::vector<RatePoint> b =
        rate_vs_distance(shifted, distances, kHumidAir, WeatherState{},
                         testing::fixture_catalog());
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].selected_order == b[i].selected_order);
        CHECK(a[i].net_rate_gbps == doctest::Approx(b[i].net_rate_gbps));
        CHECK(a[i].snr_db == doctest::Approx(b[i].snr_db).epsilon(1e-9));
    }
}
