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

#ifndef THZLINK_CONSTANTS_HPP
#define THZLINK_CONSTANTS_HPP

namespace thzlink::constants {

inline constexpr double kSpeedOfLight = 299792458.0;     // [m/s], exact
inline constexpr double kBoltzmann = 1.380649e-23;       // [J/K], exact (SI 2019)

// Wavenumber-to-frequency conversion: 1 cm^-1 = 29.9792458 GHz, exact.
inline constexpr double kGhzPerInverseCm = 29.9792458;   // [GHz cm]

// Power-ratio conversion between nepers and decibels: 10*log10(e).
inline constexpr double kDbPerNeper = 4.342944819032518; // [dB]

inline constexpr double kReferencePressurePa = 101325.0; // [Pa], 1 atm
inline constexpr double kReferenceTemperatureK = 296.0;  // [K], spectroscopic reference

// Thermal noise floor at 290 K in a 1 Hz bandwidth.
inline constexpr double kThermalNoiseDbmPerHz = -174.0;  // [dBm/Hz]

} // namespace thzlink::constants

#endif // THZLINK_CONSTANTS_HPP
