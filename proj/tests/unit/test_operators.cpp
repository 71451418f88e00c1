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

#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "helpers.hpp"

namespace fintop {
namespace {

TEST(Operators, Interior) {
    for (const TopSpace& s : {sierpinski(), discrete(2), indiscrete(2)}) {
        EXPECT_EQ(interior(s, s.none()), s.none());
        EXPECT_EQ(interior(s, s.full()), s.full());
    }
    EXPECT_EQ(interior(sierpinski(), set(2, {0})), PointSet::empty(2));
}

TEST(Operators, Closure) {
    EXPECT_EQ(closure(sierpinski(), sierpinski().full()), sierpinski().full());
    EXPECT_EQ(closure(sierpinski(), set(2, {1})), set(2, {0, 1}));
    for (PointSet a : subsets(3)) {
        EXPECT_EQ(closure(discrete(3), a), a);
    }
}

TEST(Operators, ExteriorBoundary) {
    const TopSpace s = sierpinski();
    EXPECT_EQ(exterior(s, s.none()), s.full());
    EXPECT_EQ(exterior(s, s.full()), s.none());
    EXPECT_EQ(exterior(s, set(2, {1})), s.none());
    EXPECT_EQ(boundary(s, s.none()), s.none());
    EXPECT_EQ(boundary(s, set(2, {1})), set(2, {0}));
    for (PointSet a : subsets(3)) {
        EXPECT_TRUE(boundary(discrete(3), a).is_empty());
    }
}

TEST(Operators, AgreeWithOracleOnEveryThreePointSpace) {
    for (const TopSpace& s : all_topologies(3)) {
        const auto t = masks_of(s.opens());
        for (PointSet a : subsets(3)) {
            EXPECT_EQ(interior(s, a).bits(), oracle::interior(t, a.bits()));
            EXPECT_EQ(closure(s, a).bits(), oracle::closure(3, t, a.bits()));
            EXPECT_EQ(exterior(s, a).bits(), oracle::interior(t, 7u & ~a.bits()));
            EXPECT_EQ(boundary(s, a).bits(), oracle::closure(3, t, a.bits()) & ~oracle::interior(t, a.bits()));
        }
    }
}

TEST(Operators, PointRoles) {
    const RoleFlags d = point_roles(discrete(2), set(2, {0}), 0);
    EXPECT_TRUE(d.isolated);
    EXPECT_FALSE(d.limit);
    const RoleFlags s = point_roles(sierpinski(), set(2, {1}), 0);
    EXPECT_TRUE(s.adherent);
    EXPECT_TRUE(s.limit);
    EXPECT_TRUE(s.boundary);
    for (int p = 0; p < 2; ++p) {
        const RoleFlags e = point_roles(sierpinski(), PointSet::empty(2), p);
        EXPECT_EQ(e, (RoleFlags{false, true, false, false, false, false}));
    }
}

TEST(Operators, RolePartition) {
    for (const TopSpace& s : all_topologies(3)) {
        for (PointSet a : subsets(3)) {
            for (int p = 0; p < 3; ++p) {
                const RoleFlags r = point_roles(s, a, p);
                EXPECT_EQ(int(r.interior) + int(r.exterior) + int(r.boundary), 1);
                EXPECT_EQ(r.adherent, !r.exterior);
                EXPECT_FALSE(r.limit && r.isolated);
            }
        }
    }
}

TEST(Operators, LimitIsolated) {
    for (PointSet a : subsets(3)) {
        EXPECT_TRUE(limit_set(discrete(3), a).is_empty());
    }
    EXPECT_TRUE(isolated_set(indiscrete(3), set(3, {0, 1})).is_empty());
    EXPECT_EQ(limit_set(sierpinski(), set(2, {1})), set(2, {0}));
}

TEST(Operators, Density) {
    const TopSpace s = sierpinski();
    EXPECT_TRUE(density_report(s, s.full()).dense);
    EXPECT_TRUE(density_report(indiscrete(2), set(2, {0})).dense);
    const DensityReport r = density_report(discrete(2), set(2, {0}));
    EXPECT_FALSE(r.dense);
    EXPECT_FALSE(r.nowhere_dense);
    EXPECT_TRUE(density_report(s, set(2, {0})).nowhere_dense);
}

TEST(Operators, PairRelation) {
    EXPECT_EQ(pair_relation(sierpinski(), set(2, {1}), set(2, {1})), PairRelation::glued);
    EXPECT_EQ(pair_relation(discrete(2), set(2, {0}), set(2, {1})), PairRelation::free);
    EXPECT_EQ(pair_relation(sierpinski(), set(2, {0}), set(2, {1})), PairRelation::neither);
}

TEST(Operators, DenseIn) {
    EXPECT_TRUE(is_dense_in(sierpinski(), set(2, {1}), set(2, {1})));
    EXPECT_TRUE(is_dense_in(indiscrete(3), set(3, {0}), set(3, {0, 1, 2})));
    EXPECT_FALSE(is_dense_in(discrete(2), set(2, {0}), set(2, {0, 1})));
}

TEST(Operators, FrontierPowersStabilise) {
    for (int n = 0; n <= 4; ++n) {
        for (const TopSpace& s : all_topologies(n)) {
            for (PointSet a : subsets(n)) {
                const PointSet f2 = boundary(s, boundary(s, a));
                EXPECT_EQ(boundary(s, f2), f2);
            }
        }
    }
}

} // namespace
} // namespace fintop
