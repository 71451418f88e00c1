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

TEST(Constructors, BaseConditions) {
    EXPECT_TRUE(check_base_conditions(2, fam(2, {{0}, {1}})).ok());
    EXPECT_TRUE(check_base_conditions(2, fam(2, {{0, 1}})).ok());
    const BaseCheck c = check_base_conditions(3, fam(3, {{0, 1}, {1, 2}}));
    EXPECT_EQ(c.status, BaseStatus::intersection_not_union);
    ASSERT_TRUE(c.witness.has_value());
    EXPECT_EQ(c.witness->first, set(3, {0, 1}));
    EXPECT_EQ(c.witness->second, set(3, {1, 2}));
    EXPECT_EQ(check_base_conditions(3, fam(3, {{0}, {1}})).status, BaseStatus::not_covering);
    EXPECT_THROW(topology_from_base(3, fam(3, {{0, 1}, {1, 2}})), InvalidBase);
}

TEST(Constructors, TopologyFromBase) {
    EXPECT_EQ(topology_from_base(2, fam(2, {{0}, {1}})), discrete(2));
    EXPECT_EQ(topology_from_base(1, fam(1, {{0}})), discrete(1));
    for (const TopSpace& s : all_topologies(3)) {
        EXPECT_EQ(topology_from_base(3, s.opens()), s);
        EXPECT_TRUE(is_base_for(s, s.opens()));
    }
}

TEST(Constructors, IsBaseFor) {
    EXPECT_TRUE(is_base_for(discrete(3), fam(3, {{0}, {1}, {2}})));
    EXPECT_FALSE(is_base_for(indiscrete(2), fam(2, {{0}})));
    EXPECT_FALSE(is_base_for(discrete(2), fam(2, {{0, 1}})));
}

TEST(Constructors, BaseGeneratesSame) {
    EXPECT_EQ(base_generates_same(2, fam(2, {{0}, {1}}), fam(2, {{}, {0}, {1}, {0, 1}})), BaseRelation::equal);
    EXPECT_EQ(base_generates_same(2, fam(2, {{0, 1}}), fam(2, {{0}, {1}})), BaseRelation::t1_coarser);
    EXPECT_EQ(base_generates_same(2, fam(2, {{0}, {1}}), fam(2, {{0, 1}})), BaseRelation::t2_coarser);
    EXPECT_EQ(base_generates_same(2, fam(2, {{1}, {0, 1}}), fam(2, {{0}, {0, 1}})), BaseRelation::incomparable);
    EXPECT_EQ(base_generates_same(2, fam(2, {{0, 1}}), fam(2, {{0, 1}})), BaseRelation::equal);
}

TEST(Constructors, Subbase) {
    EXPECT_EQ(topology_from_subbase(3, fam(3, {{0, 1}, {1, 2}})).opens(),
              fam(3, {{}, {1}, {0, 1}, {1, 2}, {0, 1, 2}}));
    for (const TopSpace& s : all_topologies(3)) {
        std::vector<PointSet> nonempty;
        for (PointSet u : s.opens()) {
            if (!u.is_empty()) {
                nonempty.push_back(u);
            }
        }
        EXPECT_EQ(topology_from_subbase(3, Family(3, nonempty)), s);
    }
    expect_error(ErrorKind::SubbaseDoesNotCover, [] { topology_from_subbase(2, fam(2, {{0}})); });
}

TEST(Constructors, Subspace) {
    const TopSpace s = space(3, {{}, {0}, {0, 1}, {0, 1, 2}});
    const Subspace whole = subspace(s, s.full());
    EXPECT_EQ(whole.space, s);
    EXPECT_EQ(whole.inclusion, FiniteMap::identity(3));
    for (int p = 0; p < 3; ++p) {
        EXPECT_EQ(subspace(s, PointSet::singleton(3, p)).space, discrete(1));
    }
    EXPECT_EQ(subspace(discrete(3), set(3, {0, 2})).space, discrete(2));
    const Subspace y = subspace(s, set(3, {1, 2}));
    EXPECT_EQ(y.space.opens(), fam(2, {{}, {0}, {0, 1}}));
    EXPECT_EQ(y.inclusion.table(), (std::vector<int>{1, 2}));
}

TEST(Constructors, Product) {
    EXPECT_EQ(product(indiscrete(2), indiscrete(2)).space, indiscrete(4));
    EXPECT_EQ(product(discrete(2), discrete(2)).space, discrete(4));
    for (const TopSpace& s : all_topologies(3)) {
        EXPECT_TRUE(are_homeomorphic(product(s, discrete(1)).space, s));
    }
    const Product p = product(sierpinski(), sierpinski());
    EXPECT_EQ(p.space.opens().size(), 6u);
    EXPECT_EQ(p.encoding.decode(3), std::make_pair(1, 1));
    expect_error(ErrorKind::CarrierTooLarge, [] { product(discrete(5), discrete(5)); });
}

TEST(Constructors, Quotient) {
    for (const TopSpace& s : all_topologies(3)) {
        EXPECT_TRUE(are_homeomorphic(quotient(s, Partition::singletons(3)).space, s));
    }
    EXPECT_EQ(quotient(discrete(3), Partition(3, {set(3, {0, 1}), set(3, {2})})).space, discrete(2));
    const Quotient q = quotient(sierpinski(), Partition(2, {set(2, {0, 1})}));
    EXPECT_EQ(q.space, discrete(1));
    EXPECT_EQ(q.projection.table(), (std::vector<int>{0, 0}));
    expect_error(ErrorKind::NotAPartition, [] { Partition(3, {set(3, {0, 1}), set(3, {1, 2})}); });
    expect_error(ErrorKind::NotAPartition, [] { Partition(3, {set(3, {0, 1})}); });
}

TEST(Constructors, Metric) {
    EXPECT_EQ(metric_topology(MetricTable(1, {{0}})), discrete(1));
    EXPECT_EQ(metric_topology(MetricTable(3, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}})), discrete(3));
    EXPECT_EQ(metric_topology(MetricTable(3, {{0, 5, 9}, {5, 0, 4}, {9, 4, 0}})), discrete(3));
    try {
        MetricTable(2, {{0, 0}, {0, 0}});
        ADD_FAILURE() << "zero distance accepted";
    } catch (const InvalidMetric& e) {
        EXPECT_EQ(e.axiom(), MetricAxiom::positivity);
    }
    try {
        MetricTable(3, {{0, 1, 5}, {1, 0, 1}, {5, 1, 0}});
        ADD_FAILURE() << "triangle violation accepted";
    } catch (const InvalidMetric& e) {
        EXPECT_EQ(e.axiom(), MetricAxiom::triangle);
    }
    EXPECT_THROW(MetricTable(2, {{0, 1}, {2, 0}}), InvalidMetric);
}

TEST(Constructors, Metrizable) {
    EXPECT_TRUE(is_metrizable(discrete(4)));
    EXPECT_FALSE(is_metrizable(indiscrete(2)));
    EXPECT_TRUE(is_metrizable(discrete(1)));
    EXPECT_FALSE(is_metrizable(sierpinski()));
}

TEST(Constructors, Alexandroff) {
    EXPECT_EQ(alexandroff(discrete(1)), discrete(2));
    EXPECT_EQ(alexandroff(indiscrete(2)).opens(), fam(3, {{}, {2}, {0, 1}, {0, 1, 2}}));
    for (int n = 0; n <= 3; ++n) {
        for (const TopSpace& s : all_topologies(n)) {
            const TopSpace a = alexandroff(s);
            EXPECT_EQ(subspace(a, PointSet(n + 1, full_mask(n))).space.opens(), s.opens());
            EXPECT_TRUE(is_compact(a));
        }
    }
}

} // namespace
} // namespace fintop
