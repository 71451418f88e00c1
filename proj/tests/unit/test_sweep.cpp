// Copyright 2026 The fintop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <set>

#include <gtest/gtest.h>

#include "helpers.hpp"

namespace fintop {
namespace {

void expect_all_pass(const SweepReport& r) {
    for (const TheoremResult& t : r.results) {
        EXPECT_TRUE(t.pass) << t.id << ": " << to_json(t).dump();
    }
}

TEST(Sweep, RegistryIdsUnique) {
    std::set<std::string> ids;
    for (const Theorem& t : theorem_registry()) {
        EXPECT_TRUE(ids.insert(t.id).second) << t.id;
        EXPECT_FALSE(t.statement.empty()) << t.id;
    }
    EXPECT_GE(ids.size(), 50u);
}

TEST(Sweep, SmallCarriersWithMaps) {
    for (int n = 0; n <= 2; ++n) {
        const SweepReport r = sweep_theorems(n);
        EXPECT_TRUE(r.all_pass()) << to_json(r).dump();
        for (const TheoremResult& t : r.results) {
            EXPECT_FALSE(t.skipped) << t.id;
        }
    }
}

TEST(Sweep, ThreePointsSingleSpace) {
    SweepOptions o;
    o.maps = false;
    const SweepReport r = sweep_theorems(3, o);
    expect_all_pass(r);
    for (const TheoremResult& t : r.results) {
        if (t.scope == TheoremScope::space) {
            EXPECT_FALSE(t.skipped) << t.id;
            EXPECT_EQ(t.cases, 29u) << t.id;
        }
    }
}

TEST(Sweep, FourPointsSingleSpace) {
    SweepOptions o;
    o.maps = false;
    const SweepReport r = sweep_theorems(4, o);
    expect_all_pass(r);
    std::size_t ran = 0;
    for (const TheoremResult& t : r.results) {
        ran += t.skipped ? 0 : 1;
    }
    EXPECT_GE(ran, 30u);
}

TEST(Sweep, OnlyFilterAndReportShape) {
    SweepOptions o;
    o.only = {"ops.frontier-powers", "maps.composition"};
    const SweepReport r = sweep_theorems(2, o);
    ASSERT_EQ(r.results.size(), 2u);
    const Json j = to_json(r);
    EXPECT_EQ(j["n"], 2);
    EXPECT_EQ(j["all_pass"], true);
    EXPECT_EQ(j["theorems"][0]["status"], "pass");
    expect_error(ErrorKind::CarrierTooLarge, [] { sweep_theorems(5); });
}

TEST(Sweep, FailureCarriesCounterexample) {
    TheoremResult r;
    r.id = "probe";
    detail::run_law(
        r, [] { return Json{{"space", 1}}; }, []() -> Verdict { return Json{{"A", Json::array()}}; });
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(to_json(r)["counterexample"]["detail"]["A"], Json::array());
    EXPECT_EQ(to_json(r)["status"], "fail");
}

} // namespace
} // namespace fintop
