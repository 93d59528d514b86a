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

#ifndef THZLINK_ERRORS_HPP
#define THZLINK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace thzlink::errors {

// Common base so callers can catch any toolkit error in one handler.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string &what) : std::runtime_error(what) {}
};

#define THZLINK_DEFINE_ERROR(NAME)                                            \
    class NAME : public Error {                                               \
      public:                                                                 \
        explicit NAME(const std::string &what) : Error(what) {}               \
    }

// Catalog record of the wrong length, or a mandatory field that does not
// parse as a number / violates a field invariant.
THZLINK_DEFINE_ERROR(MalformedRecord);
// Air-broadened halfwidth <= 0 (the pressure-broadening model needs it > 0).
THZLINK_DEFINE_ERROR(NonPositiveWidth);
// Frequency band with lower edge >= upper edge (or negative lower edge).
THZLINK_DEFINE_ERROR(EmptyBand);
// AtmosphereState invariant violated (pressure/temperature <= 0, q outside [0,1)).
THZLINK_DEFINE_ERROR(InvalidAtmosphere);
// Generic violated numeric precondition (value must be positive / non-negative).
THZLINK_DEFINE_ERROR(NonPositiveInput);
// Frequency outside a regression model's published validity range.
THZLINK_DEFINE_ERROR(FrequencyOutOfModelRange);
// Loss evaluated at a frequency that does not match the scenario carrier.
THZLINK_DEFINE_ERROR(InconsistentFrequency);
// Numeric inversion target unreachable (e.g. BER above the modulation's ceiling).
THZLINK_DEFINE_ERROR(NoSolution);
THZLINK_DEFINE_ERROR(EmptyLadder);
THZLINK_DEFINE_ERROR(EmptySpectrum);
// Window too narrow for the requested sub-band geometry.
THZLINK_DEFINE_ERROR(InsufficientWindow);
// Opening angle outside (0, 180] degrees.
THZLINK_DEFINE_ERROR(AngleOutOfRange);
// Scenario configuration problem: unknown key, bad value, violated invariant.
THZLINK_DEFINE_ERROR(ConfigError);
// File could not be opened or read (catalog and other data inputs).
THZLINK_DEFINE_ERROR(IoError);

#undef THZLINK_DEFINE_ERROR

} // namespace thzlink::errors

#endif // THZLINK_ERRORS_HPP
