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

// Seeded property suite covering every module invariant.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "skewcomm/json_io.hpp"
#include "skewcomm/random.hpp"

namespace skewcomm {

struct SuiteConfig {
    std::uint64_t seed = 42;
    int trials = 100;
    double tol = kDefaultTol;
    int max_dim = 8;
};

struct SuiteFailure {
    std::string property;
    int trial = 0;
    double magnitude = 0.0;  // NaN when the check threw
    Json counterexample;
};

struct PropertyTally {
    std::string name;
    int passed = 0;
    int failed = 0;
    double max_magnitude = 0.0;
};

struct SuiteOutcome {
    int passed = 0;
    int failed = 0;
    std::vector<SuiteFailure> failures;  // at most kMaxRecordedFailures per property
    int failures_omitted = 0;
    std::vector<PropertyTally> properties;
};

inline constexpr int kMaxRecordedFailures = 10;

struct PropertyOutcome {
    bool ok = true;
    double magnitude = 0.0;
};

/// A property fills `inputs` with whatever reproduces the case before it does
/// any work, so a thrown error still leaves a usable counterexample.
using PropertyFn = std::function<PropertyOutcome(Rng &, const SuiteConfig &, Json &inputs)>;

struct PropertyDef {
    std::string name;
    bool per_trial = true;  // false: deterministic, runs once
    PropertyFn run;
};

const std::vector<PropertyDef> &suite_properties();

/// Throws InvalidParameter for trials < 1, tol <= 0 or max_dim < 2.
SuiteOutcome run_suite(const SuiteConfig &config);

/// Restrict to properties whose name is listed.
SuiteOutcome run_suite(const SuiteConfig &config, const std::vector<std::string> &only);

Json to_json(const SuiteConfig &config);
Json to_json(const SuiteOutcome &outcome);

}  // namespace skewcomm
