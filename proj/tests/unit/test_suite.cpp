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

#include <set>

#include "skewcomm/errors.hpp"
#include "skewcomm/suite.hpp"
#include "test_util.hpp"

namespace skewcomm {
namespace {

int expected_checks(int trials) {
    int total = 0;
    for (const PropertyDef &p : suite_properties()) {
        total += p.per_trial ? trials : 1;
    }
    return total;
}

TEST(Suite, PropertyNamesAreUnique) {
    std::set<std::string> names;
    for (const PropertyDef &p : suite_properties()) {
        EXPECT_TRUE(names.insert(p.name).second) << p.name;
    }
    EXPECT_GE(names.size(), 25u);
}

TEST(Suite, AllPropertiesPassAtDefaultTolerance) {
    SuiteConfig cfg;
    cfg.seed = 7;
    cfg.trials = 40;
    const SuiteOutcome out = run_suite(cfg);
    EXPECT_EQ(out.failed, 0) << to_json(out).dump(2);
    EXPECT_EQ(out.passed, expected_checks(40));
    for (const PropertyTally &t : out.properties) {
        EXPECT_EQ(t.failed, 0) << t.name;
    }
}

TEST(Suite, Deterministic) {
    SuiteConfig cfg;
    cfg.seed = 42;
    cfg.trials = 5;
    EXPECT_EQ(to_json(run_suite(cfg)).dump(), to_json(run_suite(cfg)).dump());
}

TEST(Suite, SeedChangesSamples) {
    SuiteConfig a;
    a.trials = 3;
    SuiteConfig b = a;
    b.seed = a.seed + 1;
    EXPECT_NE(to_json(run_suite(a)).dump(), to_json(run_suite(b)).dump());
}

TEST(Suite, AbsurdToleranceSurfacesAsFailures) {
    SuiteConfig cfg;
    cfg.trials = 2;
    cfg.tol = 1e-18;
    const SuiteOutcome out = run_suite(cfg);
    EXPECT_GT(out.failed, 0);
    EXPECT_EQ(out.passed + out.failed, expected_checks(2));
    ASSERT_FALSE(out.failures.empty());
    bool some_magnitude = false;
    for (const SuiteFailure &f : out.failures) {
        EXPECT_FALSE(f.counterexample.empty()) << f.property;
        some_magnitude = some_magnitude || std::isfinite(f.magnitude);
    }
    EXPECT_TRUE(some_magnitude);
}

TEST(Suite, RecordedFailuresAreCapped) {
    SuiteConfig cfg;
    cfg.trials = kMaxRecordedFailures + 5;
    cfg.tol = 1e-18;
    const SuiteOutcome out = run_suite(cfg, {"ab_ba_spectrum"});
    ASSERT_EQ(out.properties.size(), 1u);
    EXPECT_EQ(out.failed, cfg.trials);
    EXPECT_EQ(static_cast<int>(out.failures.size()), kMaxRecordedFailures);
    EXPECT_EQ(out.failures_omitted, 5);
}

TEST(Suite, FilterRunsOnlyNamedProperties) {
    SuiteConfig cfg;
    cfg.trials = 3;
    const SuiteOutcome out = run_suite(cfg, {"stone_reference", "uq_relations"});
    ASSERT_EQ(out.properties.size(), 2u);
    EXPECT_EQ(out.passed, 1 + 3);
}

TEST(Suite, SmallMaxDim) {
    SuiteConfig cfg;
    cfg.trials = 10;
    cfg.max_dim = 2;
    EXPECT_EQ(run_suite(cfg).failed, 0);
}

TEST(Suite, RejectsBadConfig) {
    SuiteConfig cfg;
    cfg.trials = 0;
    EXPECT_THROW(run_suite(cfg), Error);
    cfg.trials = 1;
    cfg.tol = 0.0;
    EXPECT_THROW(run_suite(cfg), Error);
    cfg.tol = 1e-9;
    cfg.max_dim = 1;
    EXPECT_THROW(run_suite(cfg), Error);
}

TEST(Suite, JsonShape) {
    SuiteConfig cfg;
    cfg.trials = 1;
    const Json j = to_json(run_suite(cfg));
    EXPECT_TRUE(j.at("passed").is_number_integer());
    EXPECT_TRUE(j.at("failures").is_array());
    EXPECT_EQ(j.at("properties").size(), suite_properties().size());
    EXPECT_EQ(to_json(cfg).at("max_dim"), 8);
}

}  // namespace
}  // namespace skewcomm
