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

/// @file maps.hpp
/// Continuity, open and closed maps, homeomorphisms and embeddings between
/// finite spaces, plus a deterministic homeomorphism search.

#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>
#include <vector>

#include "connectivity.hpp"
#include "operators.hpp"

namespace fintop {

inline void require_map_between(const FiniteMap& f, const TopSpace& s1, const TopSpace& s2) {
    if (f.dom() != s1.carrier() || f.cod() != s2.carrier()) {
        throw Error(ErrorKind::CarrierMismatch,
                    "map " + std::to_string(f.dom()) + "->" + std::to_string(f.cod()) +
                        " between spaces of sizes " + std::to_string(s1.carrier()) + " and " +
                        std::to_string(s2.carrier()));
    }
}

/// Preimage of every open set is open.
inline bool is_continuous(const FiniteMap& f, const TopSpace& s1, const TopSpace& s2) {
    require_map_between(f, s1, s2);
    for (PointSet v : s2.opens()) {
        if (!s1.is_open(f.preimage(v))) {
            return false;
        }
    }
    return true;
}

inline bool is_open_map(const FiniteMap& f, const TopSpace& s1, const TopSpace& s2) {
    require_map_between(f, s1, s2);
    for (PointSet u : s1.opens()) {
        if (!s2.is_open(f.image(u))) {
            return false;
        }
    }
    return true;
}

inline bool is_closed_map(const FiniteMap& f, const TopSpace& s1, const TopSpace& s2) {
    require_map_between(f, s1, s2);
    for (PointSet c : s1.closeds()) {
        if (!s2.is_closed(f.image(c))) {
            return false;
        }
    }
    return true;
}

/// A continuous bijection with continuous inverse.
inline bool is_homeomorphism(const FiniteMap& f, const TopSpace& s1, const TopSpace& s2) {
    require_map_between(f, s1, s2);
    auto inv = f.inverse();
    return inv && is_continuous(f, s1, s2) && is_continuous(*inv, s2, s1);
}

/// `f` viewed as a map onto its image, with the image carrying the
/// subspace topology.
inline FiniteMap corestrict_to_image(const FiniteMap& f) {
    const PointSet img = f.image(PointSet::full(f.dom()));
    std::vector<int> t;
    t.reserve(f.table().size());
    for (int v : f.table()) {
        t.push_back(compress(PointSet::raw(f.cod(), Mask{1} << v), img).first());
    }
    return FiniteMap(f.dom(), img.size(), std::move(t));
}

/// A homeomorphism onto its image subspace.
inline bool is_embedding(const FiniteMap& f, const TopSpace& s1, const TopSpace& s2) {
    require_map_between(f, s1, s2);
    const Subspace img = subspace(s2, f.image(s1.full()));
    return is_homeomorphism(corestrict_to_image(f), s1, img.space);
}

struct MapReport {
    bool continuous = false;
    bool open_map = false;
    bool closed_map = false;
    bool injective = false;
    bool surjective = false;
    bool homeomorphism = false;
    bool embedding = false;

    friend bool operator==(const MapReport&, const MapReport&) = default;
};

inline MapReport check_map(const FiniteMap& f, const TopSpace& s1, const TopSpace& s2) {
    MapReport r;
    r.continuous = is_continuous(f, s1, s2);
    r.open_map = is_open_map(f, s1, s2);
    r.closed_map = is_closed_map(f, s1, s2);
    r.injective = f.injective();
    r.surjective = f.surjective();
    r.homeomorphism = is_homeomorphism(f, s1, s2);
    r.embedding = is_embedding(f, s1, s2);

    const bool bij_cont = r.injective && r.surjective && r.continuous;
    detail::ensure(r.homeomorphism == (bij_cont && r.open_map),
                   "homeomorphism: definition and open-map characterization disagree");
    detail::ensure(r.homeomorphism == (bij_cont && r.closed_map),
                   "homeomorphism: definition and closed-map characterization disagree");
    return r;
}

/// For every open neighbourhood U' of f(p) there is an open neighbourhood V
/// of p with f[V] ⊆ U'.
inline bool is_continuous_at(const FiniteMap& f, const TopSpace& s1, const TopSpace& s2, int p) {
    require_map_between(f, s1, s2);
    s1.check_point(p);
    const int fp = f(p);
    for (PointSet target : s2.opens()) {
        if (!target.contains(fp)) {
            continue;
        }
        bool found = false;
        for (PointSet v : s1.opens()) {
            if (v.contains(p) && f.image(v).subset_of(target)) {
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

/// Limits at `p` of a map `f` defined on the subset `domain` of `s1`
/// (f's table is indexed by the subspace numbering of `domain`).
inline PointSet limits_at(const TopSpace& s1, PointSet domain, const FiniteMap& f,
                          const TopSpace& s2, int p) {
    domain = s1.as_subset(domain);
    if (f.dom() != domain.size() || f.cod() != s2.carrier()) {
        throw Error(ErrorKind::CarrierMismatch, "map does not match the domain subset and codomain");
    }
    s1.check_point(p);
    if (!point_roles(s1, domain, p).limit) {
        throw Error(ErrorKind::NotALimitPoint,
                    std::to_string(p) + " is not a limit point of " + to_string(domain));
    }
    // f[(U ∩ A) \ {p}] for every open neighbourhood U of p.
    std::vector<PointSet> tails;
    for (PointSet u : s1.opens()) {
        if (u.contains(p)) {
            tails.push_back(f.image(compress((u & domain).without(p), domain)));
        }
    }
    Mask out = 0;
    for (int y = 0; y < s2.carrier(); ++y) {
        bool is_limit = true;
        for (PointSet target : s2.opens()) {
            if (!target.contains(y)) {
                continue;
            }
            const bool captured = std::any_of(tails.begin(), tails.end(),
                                              [&](PointSet t) { return t.subset_of(target); });
            if (!captured) {
                is_limit = false;
                break;
            }
        }
        if (is_limit) {
            out |= Mask{1} << y;
        }
    }
    return PointSet::raw(s2.carrier(), out);
}

/// The restriction of `f` to `a`, as a map out of subspace(s1, a).
inline FiniteMap restrict(const FiniteMap& f, const TopSpace& s1, const TopSpace& s2, PointSet a) {
    require_map_between(f, s1, s2);
    a = s1.as_subset(a);
    std::vector<int> t;
    for (int p : a.points()) {
        t.push_back(f(p));
    }
    return FiniteMap(a.size(), f.cod(), std::move(t));
}

namespace detail {

struct PointSignature {
    int min_open_size;
    int open_count;
    friend auto operator<=>(const PointSignature&, const PointSignature&) = default;
};

inline std::vector<PointSignature> signatures(const TopSpace& s) {
    std::vector<PointSignature> out(static_cast<std::size_t>(s.carrier()));
    for (int p = 0; p < s.carrier(); ++p) {
        out[static_cast<std::size_t>(p)].min_open_size = s.minimal_open(p).size();
    }
    for (PointSet u : s.opens()) {
        for (int p : u.points()) {
            ++out[static_cast<std::size_t>(p)].open_count;
        }
    }
    return out;
}

class HomeomorphismSearch {
public:
    HomeomorphismSearch(const TopSpace& s1, const TopSpace& s2)
        : s1_(s1), s2_(s2), sig1_(signatures(s1)), sig2_(signatures(s2)) {}

    std::optional<FiniteMap> run() {
        const int n = s1_.carrier();
        table_.assign(static_cast<std::size_t>(n), -1);
        used_.assign(static_cast<std::size_t>(n), false);
        if (extend(0)) {
            return FiniteMap(n, n, table_);
        }
        return std::nullopt;
    }

private:
    // Homeomorphisms of finite spaces preserve "q lies in the minimal open
    // set of p" in both directions; partial maps violating it are pruned.
    bool consistent(int p) const {
        const int fp = table_[static_cast<std::size_t>(p)];
        for (int q = 0; q <= p; ++q) {
            const int fq = table_[static_cast<std::size_t>(q)];
            if (s1_.minimal_open(p).contains(q) != s2_.minimal_open(fp).contains(fq)) {
                return false;
            }
            if (s1_.minimal_open(q).contains(p) != s2_.minimal_open(fq).contains(fp)) {
                return false;
            }
        }
        return true;
    }

    bool extend(int p) {
        const int n = s1_.carrier();
        if (p == n) {
            return is_homeomorphism(FiniteMap(n, n, table_), s1_, s2_);
        }
        for (int y = 0; y < n; ++y) {
            if (used_[static_cast<std::size_t>(y)] ||
                sig1_[static_cast<std::size_t>(p)] != sig2_[static_cast<std::size_t>(y)]) {
                continue;
            }
            table_[static_cast<std::size_t>(p)] = y;
            used_[static_cast<std::size_t>(y)] = true;
            if (consistent(p) && extend(p + 1)) {
                return true;
            }
            used_[static_cast<std::size_t>(y)] = false;
            table_[static_cast<std::size_t>(p)] = -1;
        }
        return false;
    }

    const TopSpace& s1_;
    const TopSpace& s2_;
    std::vector<PointSignature> sig1_;
    std::vector<PointSignature> sig2_;
    std::vector<int> table_;
    std::vector<bool> used_;
};

} // namespace detail

/// Lexicographically least homeomorphism s1 -> s2, if any.
inline std::optional<FiniteMap> find_homeomorphism(const TopSpace& s1, const TopSpace& s2) {
    if (s1.carrier() != s2.carrier() || s1.opens().size() != s2.opens().size()) {
        return std::nullopt;
    }
    auto sig1 = detail::signatures(s1);
    auto sig2 = detail::signatures(s2);
    std::sort(sig1.begin(), sig1.end());
    std::sort(sig2.begin(), sig2.end());
    if (sig1 != sig2) {
        return std::nullopt;
    }
    if (s1.carrier() <= ConnectedSetTable::kCap &&
        components(s1).count() != components(s2).count()) {
        return std::nullopt;
    }
    return detail::HomeomorphismSearch(s1, s2).run();
}

inline bool are_homeomorphic(const TopSpace& s1, const TopSpace& s2) {
    return find_homeomorphism(s1, s2).has_value();
}

/// Every homeomorphism of `s` onto itself, in lexicographic table order.
inline std::vector<FiniteMap> self_homeomorphisms(const TopSpace& s) {
    require_carrier(s.carrier(), 9);
    std::vector<int> perm(static_cast<std::size_t>(s.carrier()));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<FiniteMap> out;
    do {
        FiniteMap h(s.carrier(), s.carrier(), perm);
        if (is_homeomorphism(h, s, s)) {
            out.push_back(std::move(h));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Embeddings e1, e2 : X -> Y are equivalent when e1 ∘ h1 = h2 ∘ e2 for some
/// self-homeomorphisms h1 of X and h2 of Y.
inline bool embeddings_equivalent(const FiniteMap& e1, const FiniteMap& e2, const TopSpace& x,
                                  const TopSpace& y) {
    require_map_between(e1, x, y);
    require_map_between(e2, x, y);
    const auto hx = self_homeomorphisms(x);
    const auto hy = self_homeomorphisms(y);
    for (const FiniteMap& h1 : hx) {
        const FiniteMap lhs = compose(e1, h1);
        for (const FiniteMap& h2 : hy) {
            if (lhs == compose(h2, e2)) {
                return true;
            }
        }
    }
    return false;
}

} // namespace fintop
