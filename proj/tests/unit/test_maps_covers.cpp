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

std::vector<FiniteMap> all_maps(int n1, int n2) {
    std::vector<FiniteMap> out;
    std::vector<int> t(static_cast<std::size_t>(n1), 0);
    while (true) {
        out.emplace_back(n1, n2, t);
        int i = 0;
        while (i < n1 && ++t[static_cast<std::size_t>(i)] == n2) {
            t[static_cast<std::size_t>(i++)] = 0;
        }
        if (i == n1) {
            return out;
        }
    }
}

TEST(Maps, CheckMap) {
    for (const TopSpace& s : all_topologies(3)) {
        const MapReport r = check_map(FiniteMap::identity(3), s, s);
        EXPECT_TRUE(r.continuous && r.open_map && r.closed_map && r.homeomorphism);
        EXPECT_TRUE(is_continuous(FiniteMap::constant(2, 3, 1), sierpinski(), s));
    }
    EXPECT_FALSE(is_continuous(FiniteMap::identity(2), indiscrete(2), discrete(2)));
    EXPECT_TRUE(is_continuous(FiniteMap::identity(2), discrete(2), indiscrete(2)));
}

TEST(Maps, ContinuityAgreesWithPreimageOracle) {
    const auto spaces = all_topologies(3);
    for (const TopSpace& a : spaces) {
        for (const TopSpace& b : spaces) {
            for (const FiniteMap& f : all_maps(3, 3)) {
                ASSERT_EQ(is_continuous(f, a, b),
                          oracle::is_continuous(f.table(), masks_of(a.opens()), masks_of(b.opens())));
            }
        }
    }
}

TEST(Maps, ContinuousAt) {
    for (const FiniteMap& f : all_maps(2, 2)) {
        for (int p = 0; p < 2; ++p) {
            EXPECT_TRUE(is_continuous_at(f, discrete(2), sierpinski(), p));
            EXPECT_TRUE(is_continuous_at(f, sierpinski(), indiscrete(2), p));
        }
    }
    // Swap on the Sierpinski space: f(0) = 1 has the neighbourhood {1},
    // whose preimage {0} is not open.
    const FiniteMap swap(2, 2, {1, 0});
    EXPECT_FALSE(is_continuous_at(swap, sierpinski(), sierpinski(), 0));
    EXPECT_TRUE(is_continuous_at(swap, sierpinski(), sierpinski(), 1));
}

TEST(Maps, LimitsAt) {
    const FiniteMap f(1, 2, {0});
    EXPECT_EQ(limits_at(indiscrete(2), set(2, {1}), f, discrete(2), 0), set(2, {0}));
    EXPECT_EQ(limits_at(indiscrete(2), set(2, {1}), f, indiscrete(2), 0), set(2, {0, 1}));
    expect_error(ErrorKind::NotALimitPoint, [&] { limits_at(discrete(2), set(2, {1}), f, discrete(2), 0); });
}

TEST(Maps, FindHomeomorphism) {
    const TopSpace s = space(3, {{}, {0}, {0, 1}, {0, 1, 2}});
    EXPECT_EQ(find_homeomorphism(s, s), FiniteMap::identity(3));
    EXPECT_EQ(find_homeomorphism(sierpinski(), mirror_sierpinski()), FiniteMap(2, 2, {1, 0}));
    EXPECT_FALSE(find_homeomorphism(discrete(2), indiscrete(2)).has_value());
    EXPECT_EQ(self_homeomorphisms(discrete(3)).size(), 6u);
    EXPECT_EQ(self_homeomorphisms(s).size(), 1u);
}

TEST(Maps, Restrict) {
    const TopSpace s = sierpinski();
    EXPECT_EQ(restrict(FiniteMap::identity(2), s, s, s.full()), FiniteMap::identity(2));
    const FiniteMap empty = restrict(FiniteMap::identity(2), s, s, s.none());
    EXPECT_EQ(empty.dom(), 0);
    EXPECT_TRUE(is_continuous(empty, subspace(s, s.none()).space, s));
}

TEST(Maps, Embeddings) {
    const FiniteMap inc(2, 3, {1, 2});
    const TopSpace chain = space(3, {{}, {0}, {0, 1}, {0, 1, 2}});
    EXPECT_TRUE(is_embedding(inc, subspace(chain, set(3, {1, 2})).space, chain));
    EXPECT_TRUE(embeddings_equivalent(FiniteMap(1, 2, {0}), FiniteMap(1, 2, {1}), discrete(1), discrete(2)));
    EXPECT_FALSE(embeddings_equivalent(FiniteMap(1, 2, {0}), FiniteMap(1, 2, {1}), discrete(1), sierpinski()));
}

TEST(Covers, Classify) {
    const TopSpace s = sierpinski();
    const CoverReport whole = classify_cover(s, fam(2, {{0, 1}}), s.full());
    EXPECT_TRUE(whole.is_cover && whole.open_cover && whole.closed_cover && whole.locally_finite);
    EXPECT_EQ(whole.fundamental, true);

    const CoverReport singles = classify_cover(discrete(3), fam(3, {{0}, {1}, {2}}), discrete(3).full());
    EXPECT_TRUE(singles.open_cover);
    EXPECT_EQ(singles.fundamental, true);

    const CoverReport mixed = classify_cover(s, fam(2, {{0}, {1}}), s.full());
    EXPECT_TRUE(mixed.is_cover);
    EXPECT_FALSE(mixed.closed_cover);
    // Both pieces are one-point spaces, so {0} is open piecewise but not in s.
    EXPECT_EQ(mixed.fundamental, false);

    EXPECT_FALSE(classify_cover(s, fam(2, {{0}}), s.full()).is_cover);
}

TEST(Covers, SubcoverRefinement) {
    const Family c = fam(3, {{0, 1}, {2}});
    EXPECT_TRUE(is_subcover(c, c, PointSet::full(3)));
    EXPECT_TRUE(is_refinement(discrete(3), fam(3, {{0, 1, 2}}), fam(3, {{0}, {0, 1, 2}})));
    EXPECT_TRUE(is_refinement(discrete(3), fam(3, {{0}, {1}, {2}}), c));
    EXPECT_FALSE(is_refinement(discrete(3), c, fam(3, {{0}, {1}, {2}})));
}

TEST(Covers, Pasting) {
    const TopSpace s = sierpinski();
    for (const FiniteMap& f : all_maps(2, 2)) {
        EXPECT_EQ(verify_pasting(s, s, f, fam(2, {{0, 1}})), true);
    }
    expect_error(ErrorKind::NotFundamental, [] {
        verify_pasting(indiscrete(2), indiscrete(2), FiniteMap::identity(2), fam(2, {{0}, {1}}));
    });
}

TEST(Covers, MinimalSubcover) {
    const TopSpace d = discrete(3);
    EXPECT_EQ(minimal_subcover(d, fam(3, {{0, 1, 2}, {0}}), d.full()), fam(3, {{0, 1, 2}}));
    EXPECT_EQ(minimal_subcover(d, fam(3, {{0}, {1}, {2}}), d.full()), fam(3, {{0}, {1}, {2}}));
    EXPECT_EQ(minimal_subcover(d, fam(3, {{0, 1}, {1, 2}, {0, 2}}), d.full()), fam(3, {{0, 1}, {0, 2}}));
    expect_error(ErrorKind::NotACover, [&] { minimal_subcover(d, fam(3, {{0}}), d.full()); });
}

TEST(Covers, MinimalSubcoverMatchesExhaustiveSearch) {
    std::vector<Mask> pool;
    for (Mask m = 1; m < 8; ++m) {
        pool.push_back(m);
    }
    // Every cover of size <= 3 drawn from nonempty subsets, on discrete(3).
    for (Mask a : pool) {
        for (Mask b : pool) {
            for (Mask c : pool) {
                const std::vector<Mask> cover{a, b, c};
                const Family f = Family::from_masks(3, {a, b, c});
                const int best = oracle::min_subcover_size(f.masks(), 7);
                if (best < 0) {
                    continue;
                }
                EXPECT_EQ(static_cast<int>(minimal_subcover(discrete(3), f, PointSet::full(3)).size()), best);
            }
        }
    }
}

} // namespace
} // namespace fintop
