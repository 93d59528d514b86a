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

#ifndef THZLINK_CLI_APP_HPP
#define THZLINK_CLI_APP_HPP

#include <ostream>
#include <string>
#include <vector>

namespace thzlink {

// Runs the CLI: subcommands spectrum | rate-distance | subarray | windows |
// parse-catalog, driven by a scenario config file with --set overrides.
// CSV goes to --out or `out`; diagnostics go to `err`. Returns the process
// exit code: 0 success, 2 configuration error, 3 catalog/data error,
// 4 internal numerical failure.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace thzlink

#endif // THZLINK_CLI_APP_HPP
