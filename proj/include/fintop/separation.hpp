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

/// @file separation.hpp
/// Distinguishability of point pairs and the separation axioms T0 to T4.
///
/// Each axiom is evaluated twice, once from its definition and once through
/// an equivalent characterization, and the report refuses to return when the
/// two disagree.

#pragma once

#include <vector>

#include "enumeration.hpp"
#include "operators.hpp"

namespace fintop {

struct PairClass {
    bool indistinguishable = false;
    bool partially_distinguishable = false;
    bool distinguishable = false;
    bool separated = false;

    friend bool operator==(const PairClass&, const PairClass&) = default;
};

inline PairClass classify_pair(const TopSpace& s, int p, int q) {
    s.check_point(p);
    s.check_point(q);
    const int n = s.carrier();
    const PointSet sp = PointSet::singleton(n, p);
    const PointSet sq = PointSet::singleton(n, q);
    const Family np = neighborhoods(s, sp);
    const Family nq = neighborhoods(s, sq);

    PairClass r;
    r.indistinguishable = np == nq;
    r.partially_distinguishable = !r.indistinguishable;
    r.distinguishable = !np.subfamily_of(nq) && !nq.subfamily_of(np);
    for (PointSet u : np) {
        for (PointSet v : nq) {
            if (!u.meets(v)) {
                r.separated = true;
                break;
            }
        }
        if (r.separated) {
            break;
        }
    }

    const bool same_closed_nbhds =
        neighborhoods(s, sp, NeighborhoodKind::closed) == neighborhoods(s, sq, NeighborhoodKind::closed);
    detail::ensure(r.indistinguishable == same_closed_nbhds,
                   "indistinguishable: open and closed neighbourhood families disagree");
    detail::ensure(r.indistinguishable == (s.minimal_open(p) == s.minimal_open(q)),
                   "indistinguishable: neighbourhoods and minimal open sets disagree");
    detail::ensure(r.indistinguishable == (closure(s, sp) == closure(s, sq)),
                   "indistinguishable: neighbourhoods and singleton closures disagree");
    detail::ensure(!r.separated || r.distinguishable, "separated pair is not distinguishable");
    detail::ensure(!r.distinguishable || r.partially_distinguishable,
                   "distinguishable pair is not partially distinguishable");
    detail::ensure(p != q || r.indistinguishable, "a point is distinguishable from itself");
    return r;
}

struct SeparationReport {
    bool t0 = false;
    bool t1 = false;
    bool t2 = false;
    bool t3 = false;
    bool t4 = false;
    bool regular = false;
    bool normal = false;

    friend bool operator==(const SeparationReport&, const SeparationReport&) = default;
};

namespace detail {

inline bool have_disjoint_neighborhoods(const TopSpace& s, PointSet a, PointSet b) {
    const Family na = neighborhoods(s, a);
    const Family nb = neighborhoods(s, b);
    for (PointSet u : na) {
        for (PointSet v : nb) {
            if (!u.meets(v)) {
                return true;
            }
        }
    }
    return false;
}

/// Every neighbourhood of `a` includes the closure of some neighbourhood of `a`.
inline bool shrinks(const TopSpace& s, PointSet a) {
    const Family na = neighborhoods(s, a);
    for (PointSet u : na) {
        bool found = false;
        for (PointSet v : na) {
            if (closure(s, v).subset_of(u)) {
                found = true;
                break;
            }
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

} // namespace detail

inline SeparationReport separation_report(const TopSpace& s) {
    const int n = s.carrier();
    SeparationReport r;

    // Pair-relation readings.
    bool t0 = true;
    bool t1 = true;
    bool t2 = true;
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const PairClass c = classify_pair(s, p, q);
            t0 = t0 && !c.indistinguishable;
            t1 = t1 && c.distinguishable;
            t2 = t2 && c.separated;
        }
    }

    // Second readings: injective singleton closures, closed singletons,
    // singletons cut out by their closed neighbourhoods.
    std::vector<PointSet> cls;
    bool singletons_closed = true;
    bool singletons_cut_out = true;
    for (int p = 0; p < n; ++p) {
        const PointSet sp = PointSet::singleton(n, p);
        cls.push_back(closure(s, sp));
        singletons_closed = singletons_closed && s.is_closed(sp);
        const Family cn = neighborhoods(s, sp, NeighborhoodKind::closed);
        singletons_cut_out = singletons_cut_out && family_intersection(cn) == sp;
    }
    bool closures_injective = true;
    for (std::size_t i = 0; i < cls.size(); ++i) {
        for (std::size_t j = i + 1; j < cls.size(); ++j) {
            closures_injective = closures_injective && cls[i] != cls[j];
        }
    }
    detail::ensure(t0 == closures_injective, "T0: pair reading and singleton-closure reading disagree");
    detail::ensure(t1 == singletons_closed, "T1: pair reading and closed-singleton reading disagree");
    detail::ensure(t2 == singletons_cut_out, "T2: pair reading and closed-neighbourhood reading disagree");

    // T3 and T4 from the definitions.
    bool t3 = true;
    bool t4 = true;
    const auto& closeds = s.closeds().members();
    for (PointSet a : closeds) {
        for (int p = 0; p < n && t3; ++p) {
            if (!a.contains(p)) {
                t3 = detail::have_disjoint_neighborhoods(s, a, PointSet::singleton(n, p));
            }
        }
        for (PointSet b : closeds) {
            if (t4 && !a.meets(b)) {
                t4 = detail::have_disjoint_neighborhoods(s, a, b);
            }
        }
    }
    // And through neighbourhood shrinking.
    bool t3_shrink = true;
    for (int p = 0; p < n && t3_shrink; ++p) {
        t3_shrink = detail::shrinks(s, PointSet::singleton(n, p));
    }
    bool t4_shrink = true;
    for (PointSet a : closeds) {
        if (!detail::shrinks(s, a)) {
            t4_shrink = false;
            break;
        }
    }
    detail::ensure(t3 == t3_shrink, "T3: definition and neighbourhood-shrinking reading disagree");
    detail::ensure(t4 == t4_shrink, "T4: definition and neighbourhood-shrinking reading disagree");

    r.t0 = t0;
    r.t1 = t1;
    r.t2 = t2;
    r.t3 = t3;
    r.t4 = t4;
    r.regular = t2 && t3;
    r.normal = t2 && t4;
    detail::ensure(!r.t2 || r.t1, "T2 space that is not T1");
    detail::ensure(!r.t1 || r.t0, "T1 space that is not T0");
    return r;
}

inline bool is_t0(const TopSpace& s) { return separation_report(s).t0; }
inline bool is_t1(const TopSpace& s) { return separation_report(s).t1; }
inline bool is_hausdorff(const TopSpace& s) { return separation_report(s).t2; }

/// Meet of every T1 topology on n points.
inline TopSpace t1_minimum(int n) {
    require_carrier(n, 3);
    std::vector<TopSpace> t1s;
    for_each_topology(EnumConfig{n, {}, {}}, [&](const TopSpace& s) {
        if (separation_report(s).t1) {
            t1s.push_back(s);
        }
    });
    return meet_topologies(t1s);
}

} // namespace fintop
