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

#ifndef THZLINK_TEST_HELPERS_HPP
#define THZLINK_TEST_HELPERS_HPP

#include <string>

#include "thzlink/spectroscopy.hpp"

// Paths baked in by the build so the tests run from any working directory.
#ifndef THZLINK_DATA_DIR
#error "THZLINK_DATA_DIR must be defined by the build"
#endif
#ifndef THZLINK_CONFIG_DIR
#error "THZLINK_CONFIG_DIR must be defined by the build"
#endif

namespace thzlink::testing {

inline std::string data_dir() { return THZLINK_DATA_DIR; }
inline std::string config_dir() { return THZLINK_CONFIG_DIR; }

inline std::string fixture_catalog_path() {
    return data_dir() + "/h2o_lines.par";
}

// The bundled 17-line water-vapor catalog, full band.
inline const LineCatalog &fixture_catalog() {
    static const LineCatalog catalog =
        load_catalog_file(fixture_catalog_path(), 1, 0.0, 1100.0);
    return catalog;
}

} // namespace thzlink::testing

#endif // THZLINK_TEST_HELPERS_HPP
