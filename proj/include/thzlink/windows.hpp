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
// Transmission windows: contiguous low-absorption bands below 1 THz,
// distance-dependent usable bandwidth within a window, and sub-band
// selection strategies (whole window / center / edges).

#ifndef THZLINK_WINDOWS_HPP
#define THZLINK_WINDOWS_HPP

#include <optional>
#include <vector>

#include "thzlink/linkbudget.hpp"

namespace thzlink {

// Maximal contiguous band whose per-km absorption stays below a threshold.
struct TransmissionWindow {
    double f_lo_ghz = 0.0; // [GHz]
    double f_hi_ghz = 0.0; // [GHz], > f_lo_ghz
    double min_absorption_db_per_km = 0.0; // [dB/km] within the window
    double max_absorption_db_per_km = 0.0; // [dB/km] within the window
};

enum class BandStrategy {
    whole_window, // the entire window
    center,       // sub-band of the required width centered at the midpoint
    edges         // two sub-bands of half the required width at the edges
};

struct FrequencyBand {
    double f_lo_ghz = 0.0; // [GHz]
    double f_hi_ghz = 0.0; // [GHz]
};

struct BandPlan {
    BandStrategy strategy = BandStrategy::whole_window;
    std::vector<FrequencyBand> sub_bands; // within the parent window
    double target_distance_m = 0.0;       // [m], carried metadata (0 = unset)
};

struct UsableBand {
    double width_ghz = 0.0;            // [GHz], 0 when no grid point closes
    std::optional<FrequencyBand> band; // nullopt when width is 0 and no point closes
};

// Maximal runs of grid points whose absorption, normalized to dB/km, stays
// strictly below the threshold; ordered by f_lo, edges at grid resolution.
// Throws errors::EmptySpectrum / errors::NonPositiveInput.
std::vector<TransmissionWindow> find_windows(const LossSpectrum &spectrum,
                                             double threshold_db_per_km);

// Widest contiguous sub-band of the window over which the link closes at the
// scenario's lowest ladder rung at the given distance, i.e. clear-air total
// loss <= tx power + gains - noise - margin - required SNR of the lowest
// rung. Evaluated on a grid anchored at window.f_lo with the given step;
// aperture-specified gains are re-evaluated per grid frequency. Ties go to
// the lowest-frequency run; a single feasible point yields width 0 with a
// degenerate band. No feasible point yields width 0 and no band (not an
// error).
UsableBand usable_bandwidth(const TransmissionWindow &window,
                            const LinkScenario &scenario, double distance_m,
                            const AtmosphereState &atmosphere,
                            const LineCatalog &catalog,
                            double grid_step_ghz = 1.0);

// Sub-band geometry per strategy. center requires width >= required;
// edges requires width > required (the two edge bands must stay disjoint);
// violations throw errors::InsufficientWindow.
BandPlan select_band(BandStrategy strategy, const TransmissionWindow &window,
                     double required_bandwidth_ghz,
                     double target_distance_m = 0.0);

} // namespace thzlink

#endif // THZLINK_WINDOWS_HPP
