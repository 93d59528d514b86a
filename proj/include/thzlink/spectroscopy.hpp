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
// Parsing of HITRAN 2004 fixed-width (.par) line records into a validated,
// frequency-sorted catalog of absorption lines.
//
// Record layout (160 characters, 0-based column offsets):
//   [0,2)    molecule id (I2), water = 1
//   [2,3)    isotopologue id (I1)
//   [3,15)   vacuum wavenumber (F12.6) [cm^-1]
//   [15,25)  line intensity at 296 K (E10.3) [cm^-1/(molecule cm^-2)]
//   [25,35)  Einstein A coefficient (E10.3) - ignored
//   [35,40)  air-broadened HWHM (F5.4) [cm^-1/atm]
//   [40,45)  self-broadened HWHM (F5.4) [cm^-1/atm]
//   [45,55)  lower-state energy (F10.4) [cm^-1]
//   [55,59)  temperature exponent of the air width (F4.2)
//   [59,67)  air pressure shift (F8.6) - ignored
//   [67,160) quantum labels, uncertainty/reference codes - ignored

#ifndef THZLINK_SPECTROSCOPY_HPP
#define THZLINK_SPECTROSCOPY_HPP

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace thzlink {

struct SpectralLine {
    int molecule_id = 0;
    int isotopologue_id = 0;
    double center_frequency_ghz = 0.0;  // [GHz], = wavenumber * 29.9792458
    double intensity = 0.0;             // [cm^-1/(molecule cm^-2)] at 296 K
    double air_halfwidth = 0.0;         // [cm^-1/atm], HWHM, > 0
    double self_halfwidth = 0.0;        // [cm^-1/atm], HWHM, >= 0
    double lower_state_energy = 0.0;    // [cm^-1]
    double temperature_exponent = 0.0;  // air-width temperature dependence
};

// Lines sorted ascending by center_frequency_ghz.
struct LineCatalog {
    std::vector<SpectralLine> lines;
    std::string source_label;
};

// Parses one 160-character record. Throws errors::MalformedRecord on wrong
// length, a non-numeric mandatory field, or a negative frequency/intensity/
// self-width; throws errors::NonPositiveWidth when the air HWHM is <= 0.
SpectralLine parse_line_record(std::string_view record);

// Writes the mandatory fields back at their column offsets (ignored fields
// become spaces). parse_line_record(serialize_line_record(x)) == x for any
// line whose values are representable in the fixed-width formats.
std::string serialize_line_record(const SpectralLine &line);

// Reads records line by line, keeping those whose molecule id matches and
// whose center frequency falls inside [f_lo_ghz, f_hi_ghz] (inclusive).
// Blank lines are skipped. Parse failures abort with the 1-based source line
// number prefixed to the error message. Throws errors::EmptyBand when the
// band is ill-formed (f_lo >= f_hi or f_lo < 0).
LineCatalog load_catalog(std::istream &records, int molecule_filter,
                         double f_lo_ghz, double f_hi_ghz,
                         std::string source_label = "");

// Same, reading from a file; throws errors::IoError when the file cannot be
// opened. source_label is set to the path.
LineCatalog load_catalog_file(const std::string &path, int molecule_filter,
                              double f_lo_ghz, double f_hi_ghz);

} // namespace thzlink

#endif // THZLINK_SPECTROSCOPY_HPP
