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

#include <chrono>
#include <set>

#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "helpers.hpp"

namespace fintop {
namespace {

std::vector<std::vector<Mask>> as_masks(const std::vector<TopSpace>& spaces) {
    std::vector<std::vector<Mask>> out;
    for (const TopSpace& s : spaces) {
        out.push_back(masks_of(s.opens()));
    }
    return out;
}

TEST(Enumeration, OneAndTwoPoints) {
    EXPECT_EQ(all_topologies(0).size(), 1u);
    EXPECT_EQ(all_topologies(1).size(), 1u);
    EXPECT_EQ(all_topologies(2).size(), 4u);
}

TEST(Enumeration, MatchesNaiveFilter) {
    for (int n = 0; n <= 4; ++n) {
        auto ours = as_masks(all_topologies(n));
        std::sort(ours.begin(), ours.end());
        EXPECT_EQ(ours, oracle::naive_topologies(n)) << "n=" << n;
    }
}

TEST(Enumeration, MatchesPreorderEnumerator) {
    for (int n = 0; n <= 5; ++n) {
        auto ours = as_masks(all_topologies(n));
        std::sort(ours.begin(), ours.end());
        EXPECT_EQ(ours, oracle::preorder_topologies(n)) << "n=" << n;
    }
}

TEST(Enumeration, CanonicalOrderAndValidity) {
    const auto spaces = all_topologies(4);
    for (std::size_t i = 1; i < spaces.size(); ++i) {
        EXPECT_LT(masks_of(spaces[i - 1].opens()), masks_of(spaces[i].opens()));
    }
    for (const TopSpace& s : spaces) {
        EXPECT_TRUE(validate_topology(4, s.opens()).ok());
    }
}

TEST(Enumeration, Classes) {
    const std::size_t expected[] = {1, 1, 3, 9, 33};
    for (int n = 0; n <= 4; ++n) {
        const auto reps = enumerate_topologies(EnumConfig{n, {}, {}, EnumMode::up_to_homeomorphism});
        EXPECT_EQ(reps.size(), expected[n]);
        EXPECT_EQ(reps.size(), oracle::orbit_count(n, oracle::naive_topologies(n)));
        for (const TopSpace& s : reps) {
            EXPECT_EQ(canonical_opens(s), s.opens());
        }
    }
}

TEST(Enumeration, EveryLabeledSpaceHasOneRepresentative) {
    const auto reps = enumerate_topologies(EnumConfig{3, {}, {}, EnumMode::up_to_homeomorphism});
    for (const TopSpace& s : all_topologies(3)) {
        int hits = 0;
        for (const TopSpace& r : reps) {
            hits += are_homeomorphic(s, r) ? 1 : 0;
        }
        EXPECT_EQ(hits, 1);
    }
}

TEST(Enumeration, CountsWithFilters) {
    EXPECT_EQ(count_topologies(2, [](const TopSpace& s) { return is_connected(s); }), 3u);
    EXPECT_EQ(count_topologies(0), 1u);
    std::size_t t0 = 0;
    for (const auto& t : oracle::naive_topologies(3)) {
        t0 += oracle::is_t0(3, t) ? 1 : 0;
    }
    EXPECT_EQ(count_topologies(3, is_t0), t0);
    EXPECT_EQ(t0, 19u);
    EXPECT_EQ(count_topologies(5), 6942u);
    expect_error(ErrorKind::CarrierTooLarge, [] { count_topologies(6); });
}

TEST(Enumeration, ParallelCountsMatch) {
    for (int n = 0; n <= 4; ++n) {
        for (unsigned threads : {1u, 2u, 3u}) {
            EXPECT_EQ(count_topologies_parallel(n, {}, EnumMode::labeled, threads), count_topologies(n));
            EXPECT_EQ(count_topologies_parallel(n, is_t0, EnumMode::up_to_homeomorphism, threads),
                      count_topologies(n, is_t0, EnumMode::up_to_homeomorphism));
        }
    }
}

TEST(Enumeration, CountsInvariantUnderRelabeling) {
    const std::vector<int> perm{2, 0, 3, 1};
    std::set<std::vector<Mask>> relabeled;
    for (const TopSpace& s : all_topologies(4)) {
        relabeled.insert(masks_of(relabel(s, perm).opens()));
    }
    EXPECT_EQ(relabeled.size(), 355u);
}

TEST(Enumeration, NamedPredicates) {
    ASSERT_TRUE(find_predicate("t1").has_value());
    EXPECT_FALSE(find_predicate("nope").has_value());
    EXPECT_EQ(count_topologies(3, *find_predicate("t1")), 1u);
    std::size_t connected = 0;
    for (const auto& t : oracle::naive_topologies(3)) {
        connected += oracle::is_connected(3, t) ? 1 : 0;
    }
    EXPECT_EQ(count_topologies(3, *find_predicate("connected")), connected);
}

} // namespace
} // namespace fintop
