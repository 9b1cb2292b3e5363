// Copyright 2026 The skewcomm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The skewcomm command-line front end as a callable function, so tests can
// drive it without spawning processes.

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "skewcomm/linalg.hpp"

namespace skewcomm::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,      // condition or consistency failure
    kExitInputError = 2,
    kExitVerification = 3, // internal verification failure
};

/// `args` excludes the program name. JSON reports go to `out`, diagnostics
/// to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// "re,im" or a bare real. Throws skewcomm::Error(MalformedInput).
Scalar parse_complex(const std::string &text);

}  // namespace skewcomm::cli
