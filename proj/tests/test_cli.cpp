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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "doctest.h"

#include "test_helpers.hpp"
#include "thzlink/cli_app.hpp"

using namespace thzlink;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    CliResult result;
    result.code = run_cli(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> lines;
    std::stringstream stream(text);
    std::string line;
    while (std::getline(stream, line))
        lines.push_back(line);
    return lines;
}

std::string backhaul_cfg() {
    return testing::config_dir() + "/backhaul.cfg";
}

std::string temp_file(const std::string &stem) {
    return (std::filesystem::temp_directory_path() /
            (stem + "_" + std::to_string(::getpid()) + ".csv"))
        .string();
}

std::string slurp(const std::string &path) {
    std::ifstream file(path, std::ios::binary);
    std::stringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

} // namespace

TEST_CASE("help lists the commands and succeeds") {
    const CliResult result = run({"--help"});
    CHECK(result.code == 0);
    CHECK(result.out.find("spectrum") != std::string::npos);
    CHECK(result.out.find("rate-distance") != std::string::npos);
    CHECK(result.out.find("windows") != std::string::npos);
}

TEST_CASE("unknown commands and missing configs are usage errors") {
    CHECK(run({"teleport"}).code == 2);
    CHECK(run({"spectrum"}).code == 2); // needs --config
    CHECK(run({"spectrum", "--config", "/nonexistent.cfg"}).code == 2);
    CHECK(run({"spectrum", "--config", backhaul_cfg(), "--set",
               "link.warp_factor=9"})
              .code == 2);
    CHECK(run({"spectrum", "--config", backhaul_cfg(), "--set", "novalue"})
              .code == 2);
    const CliResult result = run({"spectrum"});
    CHECK(result.err.find("--config") != std::string::npos);
}

TEST_CASE("a missing catalog file is a data error") {
    const CliResult result = run({"spectrum", "--config", backhaul_cfg(),
                                  "--catalog", "/nonexistent/lines.par"});
    CHECK(result.code == 3);
    CHECK(result.err.find("lines.par") != std::string::npos);
}

TEST_CASE("spectrum emits one row per grid frequency") {
    const CliResult result = run({"spectrum", "--config", backhaul_cfg()});
    REQUIRE(result.code == 0);
    const std::vector<std::string> rows = lines_of(result.out);
    REQUIRE(rows.size() == 902); // header + 100..1000 GHz
    CHECK(rows[0] == "frequency_ghz,fspl_db,absorption_db,rain_db,fog_db,"
                     "total_db");
    CHECK(rows[1].substr(0, 4) == "100,");
    CHECK(rows[901].substr(0, 5) == "1000,");
    // Clear-air scenario: rain and fog columns are zero at 300 GHz.
    CHECK(rows[201] == "300,141.99,1.7615,0,0,143.752");
}

TEST_CASE("spectrum honors value overrides") {
    const CliResult dry = run({"spectrum", "--config", backhaul_cfg(), "--set",
                               "atmosphere.water_mixing_ratio=0"});
    REQUIRE(dry.code == 0);
    // Without water vapor the absorption column vanishes everywhere.
    const std::vector<std::string> rows = lines_of(dry.out);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::stringstream cells(rows[i]);
        std::string field;
        std::getline(cells, field, ','); // frequency
        std::getline(cells, field, ','); // fspl
        std::getline(cells, field, ','); // absorption
        CHECK(field == "0");
    }
}

TEST_CASE("rate-distance reports rung selection and outage") {
    const CliResult result = run({"rate-distance", "--config", backhaul_cfg()});
    REQUIRE(result.code == 0);
    const std::vector<std::string> rows = lines_of(result.out);
    REQUIRE(rows.size() == 9); // header + 8 configured distances
    CHECK(rows[0] == "distance_m,snr_db,qam_order,net_rate_gbps");
    CHECK(rows[4] == "1000,24.2336,128,400.064");
    // Water vapor closes the 10 km link: outage row, not an aborted sweep.
    CHECK(rows[8].substr(0, 6) == "10000,");
    CHECK(rows[8].find(",none,0") != std::string::npos);
}

TEST_CASE("subarray sweeps the configured grid") {
    const CliResult result = run(
        {"subarray", "--config", testing::config_dir() + "/subarray.cfg"});
    REQUIRE(result.code == 0);
    const std::vector<std::string> rows = lines_of(result.out);
    REQUIRE(rows.size() == 70); // header + {4,8,16} x angles 5..60 by 2.5
    CHECK(rows[0] == "n_elements,opening_angle_deg,net_rate_gbps");
    CHECK(rows[1].substr(0, 4) == "4,5,");
    CHECK(rows[24].substr(0, 4) == "8,5,");
    CHECK(rows[69].substr(0, 5) == "16,60");
    // The reference cell: 4 elements at 15 degrees runs 16-QAM.
    CHECK(rows[5] == "4,15,228.608");
}

TEST_CASE("windows reports the survey bands with usable widths") {
    const CliResult result = run({"windows", "--config", backhaul_cfg()});
    REQUIRE(result.code == 0);
    const std::vector<std::string> rows = lines_of(result.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "f_lo_ghz,f_hi_ghz,width_ghz,usable_width_at_distance_ghz");
    CHECK(rows[1] == "100,179,79,79");
    CHECK(rows[2] == "188,319,131,131");
    CHECK(rows[3] == "331,362,31,31");

    // A stricter threshold produces a different partition.
    const CliResult strict = run({"windows", "--config", backhaul_cfg(),
                                  "--threshold", "2"});
    REQUIRE(strict.code == 0);
    CHECK(strict.out != result.out);
}

TEST_CASE("parse-catalog summarizes the line list") {
    const CliResult result =
        run({"parse-catalog", "--catalog", testing::fixture_catalog_path()});
    REQUIRE(result.code == 0);
    const std::vector<std::string> rows = lines_of(result.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "lines: 17");
    CHECK(rows[1] == "range_ghz: 22.2351 .. 1097.36");

    const CliResult detailed = run({"parse-catalog", "--catalog",
                                    testing::fixture_catalog_path(),
                                    "--lines"});
    REQUIRE(detailed.code == 0);
    CHECK(lines_of(detailed.out).size() == 20); // 2 summary + header + 17

    CHECK(run({"parse-catalog"}).code == 2); // no catalog from anywhere
}

TEST_CASE("--out redirects the report to a file") {
    const std::string path = temp_file("cli_out");
    const CliResult result =
        run({"windows", "--config", backhaul_cfg(), "--out", path});
    REQUIRE(result.code == 0);
    CHECK(result.out.empty());
    CHECK(slurp(path) == run({"windows", "--config", backhaul_cfg()}).out);
    std::remove(path.c_str());

    CHECK(run({"windows", "--config", backhaul_cfg(), "--out",
               "/nonexistent_dir/x.csv"})
              .code == 3);
}

TEST_CASE("repeated in-process runs are byte-identical") {
    const CliResult first = run({"spectrum", "--config", backhaul_cfg()});
    const CliResult second = run({"spectrum", "--config", backhaul_cfg()});
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
}

#ifdef THZLINK_CLI_PATH
TEST_CASE("the installed binary is deterministic across processes") {
    const std::string out1 = temp_file("cli_proc1");
    const std::string out2 = temp_file("cli_proc2");
    const std::string base = std::string(THZLINK_CLI_PATH) +
                             " rate-distance --config " + backhaul_cfg() +
                             " --out ";
    for (const std::string &out : {out1, out2}) {
        const int status = std::system((base + out).c_str());
        REQUIRE(WIFEXITED(status));
        CHECK(WEXITSTATUS(status) == 0);
    }
    const std::string first = slurp(out1);
    CHECK_FALSE(first.empty());
    CHECK(first == slurp(out2));
    std::remove(out1.c_str());
    std::remove(out2.c_str());

    // Exit codes surface through the shell as well.
    const int bad = std::system(
        (std::string(THZLINK_CLI_PATH) + " spectrum 2>/dev/null").c_str());
    REQUIRE(WIFEXITED(bad));
    CHECK(WEXITSTATUS(bad) == 2);
}
#endif
