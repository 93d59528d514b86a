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
// Small sub-array pencil-beamforming links: tradeoff between element count,
// antenna opening angle and achievable data rate. The opening angle equals
// twice the maximum beam-scanning angle and the 3-dB beamwidth of a single
// element; element gain follows the symmetric pencil-beam approximation
// G_e = kappa / Theta^2 (boresight, upper bound of the array factor).

#ifndef THZLINK_ARRAYS_HPP
#define THZLINK_ARRAYS_HPP

#include <vector>

#include "thzlink/linkbudget.hpp"

namespace thzlink {

// Directivity constant of a symmetric pencil beam with both principal-plane
// 3-dB beamwidths equal to Theta (Kraus' approximation), in square degrees.
// Value frozen by tools/calibrate_kappa.cpp.
inline constexpr double kPencilBeamKappa = 26000.0; // [deg^2]

struct BeamGeometry {
    double opening_angle_deg = 0.0;        // [deg]
    double max_scan_angle_deg = 0.0;       // [deg], = opening angle / 2
    double element_beamwidth_3db_deg = 0.0;// [deg], = opening angle

    static BeamGeometry from_opening_angle(double opening_angle_deg);
};

struct SubarrayConfig {
    int n_elements = 4;                  // >= 1, per side (symmetric link)
    double per_element_power_dbm = 0.0;  // [dBm]
    double opening_angle_deg = 15.0;     // [deg], in (0, 180]
    double link_distance_m = 10.0;       // [m], > 0
    double kappa = kPencilBeamKappa;     // [deg^2] element gain model constant
    // Symbol rate, noise figure, BER threshold, code rate, ladder cap are
    // inherited from here; tx power and antenna gains are replaced by the
    // array model.
    LinkScenario base_scenario;
};

// G_e = 10*log10(kappa / Theta^2) [dBi]; monotone decreasing in Theta.
// Throws errors::AngleOutOfRange outside (0, 180].
double element_gain_dbi(double opening_angle_deg,
                        double kappa = kPencilBeamKappa);

// Link budget of a symmetric N-element sub-array link in clear air:
//   effective tx power = per-element power + 10*log10(N)   (power combining)
//   effective tx gain  = 10*log10(N) + G_e(Theta)           (coherent gain)
// and the receive side identical. EIRP therefore grows by 20*log10(2) per
// doubling of N.
RatePoint subarray_rate(const SubarrayConfig &config,
                        const AtmosphereState &atmosphere,
                        const LineCatalog &catalog);

struct SubarrayPoint {
    int n_elements = 0;
    double opening_angle_deg = 0.0; // [deg]
    double snr_db = 0.0;            // [dB]
    double net_rate_gbps = 0.0;     // [Gbps]
};

// Full cross product of element counts and opening angles, element counts
// outer and angles inner, both ascending.
std::vector<SubarrayPoint> subarray_sweep(std::vector<int> n_elements,
                                          std::vector<double> angle_grid_deg,
                                          const SubarrayConfig &config,
                                          const AtmosphereState &atmosphere,
                                          const LineCatalog &catalog);

} // namespace thzlink

#endif // THZLINK_ARRAYS_HPP
