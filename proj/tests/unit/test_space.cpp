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

#include "fintop/carrier.hpp"
#include "fintop/space.hpp"

#include "../support/oracles.hpp"
#include "helpers.hpp"

namespace fintop {
namespace {

TEST(Carrier, FamilyUnion) {
    EXPECT_EQ(family_union(Family(3)), PointSet::empty(3));
    EXPECT_EQ(family_union(fam(3, {{0}, {1, 2}})), set(3, {0, 1, 2}));
    EXPECT_EQ(family_union(fam(3, {{0, 1}, {1, 2}})).bits(), 0b011u | 0b110u);
}

TEST(Carrier, FamilyIntersection) {
    EXPECT_EQ(family_intersection(fam(3, {{0, 1, 2}})), set(3, {0, 1, 2}));
    EXPECT_EQ(family_intersection(fam(3, {{0, 1}, {1, 2}})).bits(), 0b011u & 0b110u);
    expect_error(ErrorKind::EmptyFamilyIntersection, [] { family_intersection(Family(3)); });
}

TEST(Carrier, SubsetsAscending) {
    std::vector<Mask> seen;
    for (PointSet a : subsets(0)) {
        seen.push_back(a.bits());
    }
    EXPECT_EQ(seen, std::vector<Mask>{0});
    seen.clear();
    for (PointSet a : subsets(2)) {
        seen.push_back(a.bits());
    }
    EXPECT_EQ(seen, (std::vector<Mask>{0, 1, 2, 3}));
    for (int n = 0; n <= 8; ++n) {
        std::size_t count = 0;
        Mask prev = 0;
        for (PointSet a : subsets(n)) {
            if (count > 0) {
                EXPECT_LT(prev, a.bits());
            }
            prev = a.bits();
            ++count;
            EXPECT_EQ(a.complement().complement(), a);
        }
        EXPECT_EQ(count, std::size_t{1} << n);
    }
    expect_error(ErrorKind::CarrierTooLarge, [] { subsets(25); });
}

TEST(Carrier, FamilyCanonical) {
    const Family f = fam(3, {{2}, {0}, {2}, {}});
    EXPECT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0].bits(), 0u);
    EXPECT_EQ(f[1].bits(), 1u);
    EXPECT_EQ(f[2].bits(), 4u);
    expect_error(ErrorKind::PointOutOfRange, [] { PointSet(2, 0b100); });
}

TEST(Carrier, FamilyBoundsOnRandomFamilies) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        std::vector<PointSet> members;
        const int k = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < k; ++i) {
            members.push_back(PointSet(n, rng() & full_mask(n)));
        }
        const Family f(n, members);
        for (PointSet m : f) {
            EXPECT_TRUE(m.subset_of(family_union(f)));
            EXPECT_TRUE(family_intersection(f).subset_of(m));
        }
    }
}

TEST(SpaceCore, Validate) {
    EXPECT_TRUE(validate_topology(1, fam(1, {{}, {0}})).ok());
    EXPECT_EQ(validate_topology(2, fam(2, {{}, {0}, {1}, {0, 1}})).space(), discrete(2));

    const auto bad = validate_topology(2, fam(2, {{}, {0}, {1}}));
    ASSERT_FALSE(bad.ok());
    const auto v = bad.violations();
    ASSERT_EQ(v.size(), 2u);
    EXPECT_EQ(v[0].kind, ViolationKind::MissingCarrier);
    EXPECT_EQ(v[1].kind, ViolationKind::NotUnionClosed);
    EXPECT_EQ(v[1].witness, (std::vector<PointSet>{set(2, {0}), set(2, {1})}));
    EXPECT_THROW(bad.space(), InvalidTopology);
}

TEST(SpaceCore, ValidateMatchesAxiomOracle) {
    for (std::uint64_t pick = 0; pick < (1u << 8); ++pick) {
        std::vector<Mask> masks;
        for (Mask m = 0; m < 8; ++m) {
            if ((pick >> m) & 1u) {
                masks.push_back(m);
            }
        }
        EXPECT_EQ(validate_topology(3, masks).ok(), oracle::is_topology(3, masks)) << pick;
    }
}

TEST(SpaceCore, DiscreteIndiscrete) {
    EXPECT_EQ(discrete(1), indiscrete(1));
    EXPECT_EQ(indiscrete(3).opens(), fam(3, {{}, {0, 1, 2}}));
    EXPECT_EQ(discrete(2).opens().size(), 4u);
}

TEST(SpaceCore, ClosedSets) {
    EXPECT_EQ(closed_sets(discrete(2)).size(), 4u);
    EXPECT_EQ(closed_sets(indiscrete(3)), fam(3, {{}, {0, 1, 2}}));
    EXPECT_EQ(closed_sets(sierpinski()), fam(2, {{}, {0}, {0, 1}}));
    EXPECT_EQ(clopen_sets(discrete(2)).size(), 4u);
    EXPECT_EQ(clopen_sets(sierpinski()).size(), 2u);
}

TEST(SpaceCore, Neighborhoods) {
    const TopSpace s = sierpinski();
    EXPECT_EQ(neighborhoods(s, PointSet::empty(2)), s.opens());
    EXPECT_EQ(neighborhoods(s, set(2, {0})), fam(2, {{0, 1}}));
    EXPECT_EQ(neighborhoods(s, set(2, {1}), NeighborhoodKind::closed), fam(2, {{0, 1}}));
}

TEST(SpaceCore, MinimalOpen) {
    EXPECT_EQ(minimal_open(discrete(3), 1), set(3, {1}));
    EXPECT_EQ(minimal_open(indiscrete(3), 1), set(3, {0, 1, 2}));
    EXPECT_EQ(minimal_open(sierpinski(), 0), set(2, {0, 1}));
    expect_error(ErrorKind::PointOutOfRange, [] { minimal_open(sierpinski(), 2); });
}

TEST(SpaceCore, Compare) {
    EXPECT_EQ(compare(discrete(2), indiscrete(2)), Comparison::strictly_finer);
    EXPECT_EQ(compare(indiscrete(2), discrete(2)), Comparison::strictly_coarser);
    EXPECT_EQ(compare(sierpinski(), sierpinski()), Comparison::equal);
    EXPECT_EQ(compare(sierpinski(), mirror_sierpinski()), Comparison::incomparable);
    EXPECT_TRUE(is_finer(sierpinski(), sierpinski()));
    EXPECT_TRUE(is_coarser(indiscrete(2), sierpinski()));
    expect_error(ErrorKind::CarrierMismatch, [] { compare(discrete(2), discrete(3)); });
}

TEST(SpaceCore, Meet) {
    const std::vector<TopSpace> a{discrete(2), indiscrete(2)};
    EXPECT_EQ(meet_topologies(a), indiscrete(2));
    const std::vector<TopSpace> b{sierpinski(), mirror_sierpinski()};
    EXPECT_EQ(meet_topologies(b), indiscrete(2));
    const std::vector<TopSpace> c{sierpinski()};
    EXPECT_EQ(meet_topologies(c), sierpinski());
    expect_error(ErrorKind::EmptyList, [] { meet_topologies(std::vector<TopSpace>{}); });
}

TEST(SpaceCore, OnePointExtension) {
    EXPECT_EQ(one_point_extension(indiscrete(1)).opens(), fam(2, {{}, {1}, {0, 1}}));
    EXPECT_EQ(one_point_extension(discrete(0)).opens(), fam(1, {{}, {0}}));
    const TopSpace e = one_point_extension(sierpinski());
    EXPECT_TRUE(e.is_open(e.full()));
    EXPECT_TRUE(e.is_open(set(3, {2})));
}

} // namespace
} // namespace fintop
