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

/// @file covers.hpp
/// Covers of a finite space: open, closed, locally finite and fundamental
/// covers, subcovers and refinements, the pasting property, and exact
/// minimum subcovers.
///
/// Fundamentality is always decided by scanning all 2^n subsets, never by
/// the open-cover or closed-cover sufficient conditions; those conditions
/// are left for the tests to confirm.

#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "maps.hpp"

namespace fintop {

namespace detail {

/// Traces {S ∩ V : V ∈ pool}, sorted.
inline std::vector<Mask> traces(PointSet s, const Family& pool) {
    std::vector<Mask> out;
    out.reserve(pool.size());
    for (PointSet v : pool) {
        out.push_back(s.bits() & v.bits());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline Family piecewise_sets(const TopSpace& s, const Family& cover, const Family& pool) {
    std::vector<std::vector<Mask>> allowed;
    allowed.reserve(cover.size());
    for (PointSet piece : cover) {
        allowed.push_back(traces(piece, pool));
    }
    std::vector<PointSet> out;
    for (PointSet u : subsets(s.carrier())) {
        bool ok = true;
        for (std::size_t i = 0; i < cover.size() && ok; ++i) {
            ok = std::binary_search(allowed[i].begin(), allowed[i].end(),
                                    cover[i].bits() & u.bits());
        }
        if (ok) {
            out.push_back(u);
        }
    }
    return Family(s.carrier(), std::move(out));
}

} // namespace detail

/// {U ⊆ X : S ∩ U is open in the subspace S for every member S}.
inline Family piecewise_open_sets(const TopSpace& s, const Family& cover) {
    return detail::piecewise_sets(s, cover, s.opens());
}

/// {U ⊆ X : S ∩ U is closed in the subspace S for every member S}.
inline Family piecewise_closed_sets(const TopSpace& s, const Family& cover) {
    return detail::piecewise_sets(s, cover, s.closeds());
}

struct CoverReport {
    bool is_cover = false;
    bool open_cover = false;
    bool closed_cover = false;
    /// Degenerate on finite carriers: any cover has only finitely many
    /// members, so this equals is_cover. Evaluated literally anyway.
    bool locally_finite = false;
    /// Only evaluated when the target is the whole carrier.
    std::optional<bool> fundamental;

    friend bool operator==(const CoverReport&, const CoverReport&) = default;
};

inline CoverReport classify_cover(const TopSpace& s, const Family& cover, PointSet target) {
    target = s.as_subset(target);
    for (PointSet c : cover) {
        s.check_subset(c);
    }
    CoverReport r;
    r.is_cover = target.subset_of(family_union(cover));
    r.open_cover = r.is_cover && std::all_of(cover.begin(), cover.end(), [&](PointSet c) {
                       return s.is_open(PointSet::raw(s.carrier(), c.bits()));
                   });
    r.closed_cover = r.is_cover && std::all_of(cover.begin(), cover.end(), [&](PointSet c) {
                         return s.is_closed(PointSet::raw(s.carrier(), c.bits()));
                     });

    bool every_point_ok = true;
    for (int p = 0; p < s.carrier() && every_point_ok; ++p) {
        bool has_good_neighborhood = false;
        for (PointSet u : s.opens()) {
            if (!u.contains(p)) {
                continue;
            }
            const auto touching = std::count_if(cover.begin(), cover.end(),
                                                [&](PointSet c) { return c.meets(u); });
            // Any count of members is finite here.
            if (touching >= 0) {
                has_good_neighborhood = true;
                break;
            }
        }
        every_point_ok = has_good_neighborhood;
    }
    r.locally_finite = r.is_cover && every_point_ok;

    if (target == s.full()) {
        r.fundamental = r.is_cover && piecewise_open_sets(s, cover).subfamily_of(s.opens());
    }
    return r;
}

inline bool is_fundamental_cover(const TopSpace& s, const Family& cover) {
    return classify_cover(s, cover, s.full()).fundamental.value_or(false);
}

/// `sub` is drawn from `cover` and still covers `target`.
inline bool is_subcover(const Family& sub, const Family& cover, PointSet target) {
    return sub.subfamily_of(cover) && target.subset_of(family_union(sub));
}

/// `ref` covers the carrier and each member sits inside some member of `cover`.
inline bool is_refinement(const TopSpace& s, const Family& ref, const Family& cover) {
    if (!s.full().subset_of(family_union(ref))) {
        return false;
    }
    return std::all_of(ref.begin(), ref.end(), [&](PointSet r) {
        return std::any_of(cover.begin(), cover.end(), [&](PointSet c) { return r.subset_of(c); });
    });
}

/// The pasting implication for a fundamental cover: if every restriction of
/// `f` to a member is continuous then `f` is continuous. Returns the truth
/// value of the implication.
inline bool verify_pasting(const TopSpace& s1, const TopSpace& s2, const FiniteMap& f,
                           const Family& cover) {
    require_map_between(f, s1, s2);
    if (!is_fundamental_cover(s1, cover)) {
        throw Error(ErrorKind::NotFundamental, to_string(cover) + " is not a fundamental cover");
    }
    bool pieces_continuous = true;
    for (PointSet piece : cover) {
        const Subspace sub = subspace(s1, piece);
        if (!is_continuous(restrict(f, s1, s2, piece), sub.space, s2)) {
            pieces_continuous = false;
            break;
        }
    }
    return !pieces_continuous || is_continuous(f, s1, s2);
}

namespace detail {

class SubcoverSearch {
public:
    SubcoverSearch(const Family& cover, Mask need) : members_(cover.masks()), need_(need) {
        suffix_.assign(members_.size() + 1, 0);
        for (std::size_t i = members_.size(); i-- > 0;) {
            suffix_[i] = suffix_[i + 1] | members_[i];
        }
    }

    /// First covering combination of exactly k members, in lexicographic
    /// order of member indices.
    bool search(std::size_t k) {
        chosen_.clear();
        return dfs(0, 0, k);
    }

    const std::vector<std::size_t>& chosen() const noexcept { return chosen_; }

private:
    bool dfs(std::size_t start, Mask covered, std::size_t k) {
        if (chosen_.size() == k) {
            return (need_ & ~covered) == 0;
        }
        if ((need_ & ~(covered | suffix_[start])) != 0) {
            return false;
        }
        const std::size_t left = k - chosen_.size();
        for (std::size_t i = start; i + left <= members_.size(); ++i) {
            chosen_.push_back(i);
            if (dfs(i + 1, covered | members_[i], k)) {
                return true;
            }
            chosen_.pop_back();
        }
        return false;
    }

    std::vector<Mask> members_;
    Mask need_;
    std::vector<Mask> suffix_;
    std::vector<std::size_t> chosen_;
};

} // namespace detail

/// A subcover of minimum size; among those, the lexicographically least by
/// member bitmasks.
inline Family minimal_subcover(const TopSpace& s, const Family& cover, PointSet target) {
    target = s.as_subset(target);
    if (!target.subset_of(family_union(cover))) {
        throw Error(ErrorKind::NotACover, to_string(cover) + " does not cover " + to_string(target));
    }
    detail::SubcoverSearch search(cover, target.bits());
    for (std::size_t k = 0; k <= cover.size(); ++k) {
        if (search.search(k)) {
            std::vector<PointSet> out;
            for (std::size_t i : search.chosen()) {
                out.push_back(PointSet::raw(s.carrier(), cover[i].bits()));
            }
            return Family(s.carrier(), std::move(out));
        }
    }
    throw InvariantBroken("minimal_subcover: a cover has no subcover");
}

} // namespace fintop
