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

#include "thzlink/spectroscopy.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "thzlink/constants.hpp"
#include "thzlink/errors.hpp"

namespace thzlink {

namespace {

constexpr std::size_t kRecordLength = 160;

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    return s;
}

// Fixed-width numeric field at [pos, pos+len). Field contents must be a
// single number after stripping spaces; anything else is a malformed record.
double parse_double_field(std::string_view record, std::size_t pos,
                          std::size_t len, const char *name) {
    std::string_view field = trim(record.substr(pos, len));
    if (field.empty())
        throw errors::MalformedRecord(std::string("empty mandatory field: ") +
                                      name);
    double value = 0.0;
    const char *first = field.data();
    const char *last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw errors::MalformedRecord(std::string("non-numeric field ") +
                                      name + ": '" + std::string(field) + "'");
    return value;
}

int parse_int_field(std::string_view record, std::size_t pos, std::size_t len,
                    const char *name) {
    std::string_view field = trim(record.substr(pos, len));
    if (field.empty())
        throw errors::MalformedRecord(std::string("empty mandatory field: ") +
                                      name);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw errors::MalformedRecord(std::string("non-numeric field ") +
                                      name + ": '" + std::string(field) + "'");
    return value;
}

// Writes `text` right-aligned into record[pos, pos+len).
void put_field(std::string &record, std::size_t pos, std::size_t len,
               const std::string &text) {
    std::string padded = text;
    if (padded.size() < len)
        padded.insert(0, len - padded.size(), ' ');
    record.replace(pos, len, padded.substr(padded.size() - len));
}

// FORTRAN F5.4-style halfwidth: ".0959" for values < 1, "1.234" otherwise.
std::string format_halfwidth(double value) {
    char buf[16];
    if (value < 1.0) {
        std::snprintf(buf, sizeof buf, "%6.4f", value);
        return std::string(buf + 1); // drop the leading 0
    }
    std::snprintf(buf, sizeof buf, "%5.3f", value);
    return std::string(buf);
}

} // namespace

SpectralLine parse_line_record(std::string_view record) {
    if (record.size() != kRecordLength)
        throw errors::MalformedRecord(
            "record length " + std::to_string(record.size()) + ", expected " +
            std::to_string(kRecordLength));

    SpectralLine line;
    line.molecule_id = parse_int_field(record, 0, 2, "molecule id");
    line.isotopologue_id = parse_int_field(record, 2, 1, "isotopologue id");
    const double wavenumber =
        parse_double_field(record, 3, 12, "wavenumber"); // [cm^-1]
    line.intensity = parse_double_field(record, 15, 10, "intensity");
    // [25,35) Einstein A: ignored.
    line.air_halfwidth = parse_double_field(record, 35, 5, "air halfwidth");
    line.self_halfwidth = parse_double_field(record, 40, 5, "self halfwidth");
    line.lower_state_energy =
        parse_double_field(record, 45, 10, "lower-state energy");
    line.temperature_exponent =
        parse_double_field(record, 55, 4, "temperature exponent");
    // [59,67) pressure shift and [67,160) quantum labels: ignored.

    line.center_frequency_ghz = wavenumber * constants::kGhzPerInverseCm;

    if (wavenumber < 0.0)
        throw errors::MalformedRecord("negative wavenumber");
    if (line.intensity < 0.0)
        throw errors::MalformedRecord("negative intensity");
    if (line.self_halfwidth < 0.0)
        throw errors::MalformedRecord("negative self halfwidth");
    if (line.air_halfwidth <= 0.0)
        throw errors::NonPositiveWidth("air halfwidth must be > 0, got " +
                                       std::to_string(line.air_halfwidth));
    return line;
}

std::string serialize_line_record(const SpectralLine &line) {
    std::string record(kRecordLength, ' ');
    char buf[32];

    std::snprintf(buf, sizeof buf, "%2d", line.molecule_id);
    put_field(record, 0, 2, buf);
    std::snprintf(buf, sizeof buf, "%1d", line.isotopologue_id);
    put_field(record, 2, 1, buf);
    std::snprintf(buf, sizeof buf, "%12.6f",
                  line.center_frequency_ghz / constants::kGhzPerInverseCm);
    put_field(record, 3, 12, buf);
    std::snprintf(buf, sizeof buf, "%10.3E", line.intensity);
    put_field(record, 15, 10, buf);
    put_field(record, 35, 5, format_halfwidth(line.air_halfwidth));
    put_field(record, 40, 5, format_halfwidth(line.self_halfwidth));
    std::snprintf(buf, sizeof buf, "%10.4f", line.lower_state_energy);
    put_field(record, 45, 10, buf);
    std::snprintf(buf, sizeof buf, "%4.2f", line.temperature_exponent);
    put_field(record, 55, 4, buf);
    return record;
}

LineCatalog load_catalog(std::istream &records, int molecule_filter,
                         double f_lo_ghz, double f_hi_ghz,
                         std::string source_label) {
    if (f_lo_ghz < 0.0 || f_lo_ghz >= f_hi_ghz)
        throw errors::EmptyBand("band [" + std::to_string(f_lo_ghz) + ", " +
                                std::to_string(f_hi_ghz) +
                                "] GHz is not a valid ascending band");

    LineCatalog catalog;
    catalog.source_label = std::move(source_label);

    std::string raw;
    std::size_t line_number = 0;
    while (std::getline(records, raw)) {
        ++line_number;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        if (raw.empty())
            continue;
        SpectralLine line;
        try {
            line = parse_line_record(raw);
        } catch (const errors::NonPositiveWidth &e) {
            throw errors::NonPositiveWidth(
                "line " + std::to_string(line_number) + ": " + e.what());
        } catch (const errors::Error &e) {
            throw errors::MalformedRecord(
                "line " + std::to_string(line_number) + ": " + e.what());
        }
        if (line.molecule_id != molecule_filter)
            continue;
        if (line.center_frequency_ghz < f_lo_ghz ||
            line.center_frequency_ghz > f_hi_ghz)
            continue;
        catalog.lines.push_back(line);
    }

    std::stable_sort(catalog.lines.begin(), catalog.lines.end(),
                     [](const SpectralLine &a, const SpectralLine &b) {
                         return a.center_frequency_ghz < b.center_frequency_ghz;
                     });
    return catalog;
}

LineCatalog load_catalog_file(const std::string &path, int molecule_filter,
                              double f_lo_ghz, double f_hi_ghz) {
    std::ifstream stream(path);
    if (!stream)
        throw errors::IoError("cannot open catalog file: " + path);
    return load_catalog(stream, molecule_filter, f_lo_ghz, f_hi_ghz, path);
}

} // namespace thzlink
