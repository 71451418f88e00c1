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

/// @file operators.hpp
/// Interior, closure, exterior and boundary of a subset, together with the
/// pointwise classification of points relative to a subset.
///
/// interior() and closure() are computed from the families of open and
/// closed sets. point_roles() is computed from neighbourhood quantifiers
/// alone, so agreement between the two is a real check rather than a
/// tautology.

#pragma once

#include <string_view>

#include "space.hpp"

namespace fintop {

/// Union of the open sets contained in `a`. The pointwise reading (points
/// with an open neighbourhood inside `a`) is computed too and must agree.
inline PointSet interior(const TopSpace& s, PointSet a) {
    a = s.as_subset(a);
    Mask out = 0;
    for (PointSet u : s.opens()) {
        if (u.subset_of(a)) {
            out |= u.bits();
        }
    }
    Mask pointwise = 0;
    for (int p : a.points()) {
        if (s.minimal_open(p).subset_of(a)) {
            pointwise |= Mask{1} << p;
        }
    }
    detail::ensure(out == pointwise, "interior: union of open subsets and interior points disagree");
    return PointSet::raw(s.carrier(), out);
}

/// Intersection of the closed sets that include `a`.
inline PointSet closure(const TopSpace& s, PointSet a) {
    a = s.as_subset(a);
    Mask out = full_mask(s.carrier());
    const auto& closeds = s.closeds().members();
#ifdef FINTOP_FAULT_CLOSURE_OFF_BY_ONE
    // Test fixture only: skips the first closed set (always ∅).
    for (std::size_t i = 1; i < closeds.size(); ++i) {
#else
    for (std::size_t i = 0; i < closeds.size(); ++i) {
#endif
        if (a.subset_of(closeds[i])) {
            out &= closeds[i].bits();
        }
    }
    return PointSet::raw(s.carrier(), out);
}

/// Interior of the complement.
inline PointSet exterior(const TopSpace& s, PointSet a) {
    return interior(s, s.as_subset(a).complement());
}

inline PointSet boundary(const TopSpace& s, PointSet a) {
    return closure(s, a) - interior(s, a);
}

struct RoleFlags {
    bool interior = false;
    bool exterior = false;
    bool boundary = false;
    bool adherent = false;
    bool limit = false;
    bool isolated = false;

    friend bool operator==(const RoleFlags&, const RoleFlags&) = default;
};

/// Classifies `p` relative to `a` by quantifying over the open
/// neighbourhoods of {p}.
inline RoleFlags point_roles(const TopSpace& s, PointSet a, int p) {
    s.check_point(p);
    a = s.as_subset(a);
    const PointSet rest = a.complement();
    const PointSet a_without_p = a.without(p);

    bool some_inside = false;
    bool some_avoiding = false;
    bool all_meet = true;
    bool all_meet_both = true;
    bool all_meet_off_p = true;
    bool some_isolating = false;
    for (PointSet u : s.opens()) {
        if (!u.contains(p)) {
            continue;
        }
        some_inside = some_inside || u.subset_of(a);
        some_avoiding = some_avoiding || !u.meets(a);
        all_meet = all_meet && u.meets(a);
        all_meet_both = all_meet_both && u.meets(a) && u.meets(rest);
        all_meet_off_p = all_meet_off_p && u.meets(a_without_p);
        some_isolating = some_isolating || (u.bits() & a.bits()) == (Mask{1} << p);
    }

    // Second reading of interior points: p lies in an open subset of a.
    bool in_open_subset = false;
    for (PointSet u : s.opens()) {
        if (u.subset_of(a) && u.contains(p)) {
            in_open_subset = true;
            break;
        }
    }
    detail::ensure(in_open_subset == some_inside, "interior point: the two defining formulas disagree");

    RoleFlags r;
    r.interior = some_inside;
    r.exterior = some_avoiding;
    r.boundary = all_meet_both;
    r.adherent = all_meet;
    r.limit = all_meet_off_p;
    r.isolated = some_isolating;
    return r;
}

/// Points every neighbourhood of which meets `a` away from the point itself.
inline PointSet limit_set(const TopSpace& s, PointSet a) {
    Mask out = 0;
    for (int p = 0; p < s.carrier(); ++p) {
        if (point_roles(s, a, p).limit) {
            out |= Mask{1} << p;
        }
    }
    return PointSet::raw(s.carrier(), out);
}

/// Points with a neighbourhood meeting `a` in exactly that point.
inline PointSet isolated_set(const TopSpace& s, PointSet a) {
    Mask out = 0;
    for (int p = 0; p < s.carrier(); ++p) {
        if (point_roles(s, a, p).isolated) {
            out |= Mask{1} << p;
        }
    }
    return PointSet::raw(s.carrier(), out);
}

struct DensityReport {
    bool dense = false;
    bool dense_in_itself = false;
    bool nowhere_dense = false;
    bool perfect = false;

    friend bool operator==(const DensityReport&, const DensityReport&) = default;
};

inline DensityReport density_report(const TopSpace& s, PointSet a) {
    a = s.as_subset(a);
    DensityReport r;
    r.dense = closure(s, a) == s.full();

    bool meets_all = true;
    for (PointSet u : s.opens()) {
        if (!u.is_empty() && !u.meets(a)) {
            meets_all = false;
            break;
        }
    }
    detail::ensure(meets_all == r.dense, "dense: closure criterion and open-set criterion disagree");

    r.nowhere_dense = interior(s, closure(s, a)).is_empty();
    r.dense_in_itself = isolated_set(s, a).is_empty();
    r.perfect = s.is_closed(a) && r.dense_in_itself;
    detail::ensure(r.perfect == (a == limit_set(s, a)), "perfect: definition and A = limit set disagree");
    return r;
}

/// `inner` is dense in `outer` when the closure of `inner` includes `outer`.
inline bool is_dense_in(const TopSpace& s, PointSet inner, PointSet outer) {
    return s.as_subset(outer).subset_of(closure(s, inner));
}

enum class PairRelation { glued, free, neither };

constexpr std::string_view to_string(PairRelation r) {
    switch (r) {
    case PairRelation::glued: return "glued";
    case PairRelation::free: return "free";
    case PairRelation::neither: return "neither";
    }
    return "unknown";
}

/// glued: each set meets the closure of the other; free: neither does.
inline PairRelation pair_relation(const TopSpace& s, PointSet a, PointSet b) {
    const bool a_touches = a.meets(closure(s, b));
    const bool b_touches = b.meets(closure(s, a));
    if (a_touches && b_touches) {
        return PairRelation::glued;
    }
    if (!a_touches && !b_touches) {
        return PairRelation::free;
    }
    return PairRelation::neither;
}

} // namespace fintop
