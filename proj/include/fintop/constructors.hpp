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

/// @file constructors.hpp
/// Topologies built from other data: bases, sub-bases, subspaces, binary
/// products, quotients by partitions and integer metrics. The one-point
/// compactification lives in compactness.hpp because it consults compact
/// sets.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "finite_map.hpp"
#include "space.hpp"

namespace fintop {

// ---------------------------------------------------------------------------
// Bases

enum class BaseStatus { ok, not_covering, intersection_not_union };

constexpr std::string_view to_string(BaseStatus s) {
    switch (s) {
    case BaseStatus::ok: return "ok";
    case BaseStatus::not_covering: return "NotCovering";
    case BaseStatus::intersection_not_union: return "IntersectionNotUnion";
    }
    return "unknown";
}

struct BaseCheck {
    BaseStatus status = BaseStatus::ok;
    std::optional<std::pair<PointSet, PointSet>> witness; // intersection_not_union only

    bool ok() const noexcept { return status == BaseStatus::ok; }
    friend bool operator==(const BaseCheck&, const BaseCheck&) = default;
};

class InvalidBase : public Error {
public:
    explicit InvalidBase(BaseCheck check)
        : Error(ErrorKind::InvalidBase, describe(check)), check_(check) {}
    const BaseCheck& check() const noexcept { return check_; }

private:
    static std::string describe(const BaseCheck& c) {
        std::string out(to_string(c.status));
        if (c.witness) {
            out += ' ' + to_string(c.witness->first) + ' ' + to_string(c.witness->second);
        }
        return out;
    }
    BaseCheck check_;
};

/// A family is a base for some topology on {0..n-1} iff it covers the
/// carrier and every point of a pairwise intersection lies in a member
/// contained in that intersection.
inline BaseCheck check_base_conditions(int n, const Family& base) {
    require_carrier(n);
    if (family_union(base).bits() != full_mask(n)) {
        return {BaseStatus::not_covering, std::nullopt};
    }
    for (std::size_t i = 0; i < base.size(); ++i) {
        for (std::size_t j = i + 1; j < base.size(); ++j) {
            const PointSet meet = base[i] & base[j];
            Mask reached = 0;
            for (PointSet b : base) {
                if (b.subset_of(meet)) {
                    reached |= b.bits();
                }
            }
            if (reached != meet.bits()) {
                return {BaseStatus::intersection_not_union, std::pair{base[i], base[j]}};
            }
        }
    }
    return {BaseStatus::ok, std::nullopt};
}

namespace detail {

/// Closes `seed` under a binary operation by fixpoint iteration.
template <class Op>
std::vector<Mask> close_under(std::vector<Mask> seed, Op op) {
    std::unordered_set<Mask> seen(seed.begin(), seed.end());
    std::vector<Mask> all(seen.begin(), seen.end());
    std::size_t done = 0;
    while (done < all.size()) {
        const Mask next = all[done];
        for (std::size_t i = 0; i <= done; ++i) {
            const Mask c = op(all[i], next);
            if (seen.insert(c).second) {
                all.push_back(c);
            }
        }
        ++done;
    }
    return all;
}

} // namespace detail

/// All unions of subfamilies of a valid base; the coarsest topology that
/// contains it.
inline TopSpace topology_from_base(int n, const Family& base) {
    if (auto check = check_base_conditions(n, base); !check.ok()) {
        throw InvalidBase(check);
    }
    std::vector<Mask> seed = base.masks();
    seed.push_back(0);
    auto opens = detail::close_under(std::move(seed), [](Mask a, Mask b) { return a | b; });
    return make_space(n, opens);
}

/// True iff every member of `base` is open and every open set is a union of
/// members of `base`.
inline bool is_base_for(const TopSpace& s, const Family& base) {
    for (PointSet b : base) {
        if (b.carrier() > s.carrier() || !s.is_open(PointSet::raw(s.carrier(), b.bits()))) {
            return false;
        }
    }
    for (PointSet u : s.opens()) {
        Mask reached = 0;
        for (PointSet b : base) {
            if (b.subset_of(u)) {
                reached |= b.bits();
            }
        }
        if (reached != u.bits()) {
            return false;
        }
    }
    return true;
}

enum class BaseRelation { equal, t1_coarser, t2_coarser, incomparable };

constexpr std::string_view to_string(BaseRelation r) {
    switch (r) {
    case BaseRelation::equal: return "equal";
    case BaseRelation::t1_coarser: return "t1_coarser";
    case BaseRelation::t2_coarser: return "t2_coarser";
    case BaseRelation::incomparable: return "incomparable";
    }
    return "unknown";
}

namespace detail {

/// topgen(fine) ⊇ topgen(coarse) iff every point of every member of
/// `coarse` sits in a member of `fine` inside that member.
inline bool pointwise_finer(const Family& fine, const Family& coarse) {
    for (PointSet c : coarse) {
        for (int x : c.points()) {
            bool found = false;
            for (PointSet f : fine) {
                if (f.contains(x) && f.subset_of(c)) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                return false;
            }
        }
    }
    return true;
}

inline BaseRelation relation_from(bool b1_coarser, bool b2_coarser) {
    if (b1_coarser && b2_coarser) {
        return BaseRelation::equal;
    }
    if (b1_coarser) {
        return BaseRelation::t1_coarser;
    }
    if (b2_coarser) {
        return BaseRelation::t2_coarser;
    }
    return BaseRelation::incomparable;
}

} // namespace detail

/// Compares the topologies generated by two bases. The answer is computed
/// from the generated topologies and from the pointwise base criterion; the
/// two must agree.
inline BaseRelation base_generates_same(int n, const Family& b1, const Family& b2) {
    const TopSpace t1 = topology_from_base(n, b1);
    const TopSpace t2 = topology_from_base(n, b2);
    const BaseRelation by_topology = detail::relation_from(is_coarser(t1, t2), is_coarser(t2, t1));
    const BaseRelation by_points = detail::relation_from(detail::pointwise_finer(b2, b1),
                                                         detail::pointwise_finer(b1, b2));
    detail::ensure(by_topology == by_points, "base comparison: topology and pointwise criteria disagree");
    return by_topology;
}

/// Finite intersections of members of `subbase`, then all unions of those.
/// The sub-base must cover the carrier.
inline TopSpace topology_from_subbase(int n, const Family& subbase) {
    require_carrier(n);
    if (family_union(subbase).bits() != full_mask(n)) {
        throw Error(ErrorKind::SubbaseDoesNotCover,
                    "union of " + to_string(subbase) + " misses points of the carrier");
    }
    auto base = detail::close_under(subbase.masks(), [](Mask a, Mask b) { return a & b; });
    return topology_from_base(n, Family::from_masks(n, base));
}

// ---------------------------------------------------------------------------
// Subspaces

struct Subspace {
    TopSpace space;
    /// Subspace index -> original index (ascending original order).
    FiniteMap inclusion;
    PointSet points;
};

/// Induced topology {Y ∩ U} on the points of `y`, re-indexed 0..|y|-1.
inline Subspace subspace(const TopSpace& s, PointSet y) {
    y = s.as_subset(y);
    std::vector<Mask> opens;
    opens.reserve(s.opens().size());
    for (PointSet u : s.opens()) {
        opens.push_back(compress(u, y).bits());
    }
    std::vector<int> table = y.points();
    return Subspace{make_space(y.size(), opens), FiniteMap(y.size(), s.carrier(), std::move(table)),
                    y};
}

// ---------------------------------------------------------------------------
// Products

/// (i, j) <-> i * n2 + j.
struct PairEncoding {
    int n1 = 0;
    int n2 = 0;

    int encode(int i, int j) const { return i * n2 + j; }
    std::pair<int, int> decode(int k) const { return {k / n2, k % n2}; }
    int size() const { return n1 * n2; }

    PointSet rectangle(PointSet u, PointSet v) const {
        Mask out = 0;
        for (int i : u.points()) {
            for (int j : v.points()) {
                out |= Mask{1} << encode(i, j);
            }
        }
        return PointSet::raw(size(), out);
    }

    FiniteMap first_projection() const {
        std::vector<int> t;
        for (int k = 0; k < size(); ++k) {
            t.push_back(decode(k).first);
        }
        return FiniteMap(size(), n1, std::move(t));
    }
    FiniteMap second_projection() const {
        std::vector<int> t;
        for (int k = 0; k < size(); ++k) {
            t.push_back(decode(k).second);
        }
        return FiniteMap(size(), n2, std::move(t));
    }

    friend bool operator==(const PairEncoding&, const PairEncoding&) = default;
};

struct Product {
    TopSpace space;
    PairEncoding encoding;
};

/// Binary product topology, generated by the open rectangles U x V.
inline Product product(const TopSpace& s1, const TopSpace& s2) {
    const int n = s1.carrier() * s2.carrier();
    require_carrier(n);
    PairEncoding enc{s1.carrier(), s2.carrier()};
    std::vector<PointSet> rects;
    for (PointSet u : s1.opens()) {
        for (PointSet v : s2.opens()) {
            rects.push_back(enc.rectangle(u, v));
        }
    }
    return Product{topology_from_base(n, Family(n, std::move(rects))), enc};
}

// ---------------------------------------------------------------------------
// Partitions and quotients

/// Pairwise-disjoint, nonempty blocks covering the carrier, ordered by
/// smallest member.
class Partition {
public:
    Partition() = default;

    Partition(int n, std::vector<PointSet> blocks) : n_(n), blocks_(std::move(blocks)) {
        require_carrier(n);
        Mask seen = 0;
        for (PointSet& b : blocks_) {
            if (b.is_empty()) {
                throw Error(ErrorKind::NotAPartition, "empty block");
            }
            if ((b.bits() & ~full_mask(n)) != 0) {
                throw Error(ErrorKind::NotAPartition, "block " + to_string(b) + " outside carrier");
            }
            if ((seen & b.bits()) != 0) {
                throw Error(ErrorKind::NotAPartition, "block " + to_string(b) + " overlaps another");
            }
            seen |= b.bits();
            b = PointSet::raw(n, b.bits());
        }
        if (seen != full_mask(n)) {
            throw Error(ErrorKind::NotAPartition, "blocks do not cover the carrier");
        }
        std::sort(blocks_.begin(), blocks_.end(),
                  [](PointSet a, PointSet b) { return a.first() < b.first(); });
        block_of_.assign(static_cast<std::size_t>(n), 0);
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            for (int p : blocks_[k].points()) {
                block_of_[static_cast<std::size_t>(p)] = static_cast<int>(k);
            }
        }
    }

    static Partition singletons(int n) {
        std::vector<PointSet> blocks;
        for (int p = 0; p < n; ++p) {
            blocks.push_back(PointSet::singleton(n, p));
        }
        return Partition(n, std::move(blocks));
    }

    int carrier() const noexcept { return n_; }
    std::size_t size() const noexcept { return blocks_.size(); }
    const std::vector<PointSet>& blocks() const noexcept { return blocks_; }
    int block_of(int p) const { return block_of_.at(static_cast<std::size_t>(p)); }

    /// Points of the blocks selected by `block_set` (a set over the blocks).
    PointSet unite(PointSet block_set) const {
        Mask out = 0;
        for (int k : block_set.points()) {
            out |= blocks_[static_cast<std::size_t>(k)].bits();
        }
        return PointSet::raw(n_, out);
    }

    /// True when `a` is a union of whole blocks.
    bool saturates(PointSet a) const {
        for (PointSet b : blocks_) {
            if (b.meets(a) && !b.subset_of(a)) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    int n_ = 0;
    std::vector<PointSet> blocks_;
    std::vector<int> block_of_;
};

struct Quotient {
    TopSpace space;
    FiniteMap projection;
};

/// A set of blocks is open iff the union of its blocks is open.
inline Quotient quotient(const TopSpace& s, const Partition& partition) {
    if (partition.carrier() != s.carrier()) {
        throw Error(ErrorKind::NotAPartition, "partition carrier differs from space carrier");
    }
    const int k = static_cast<int>(partition.size());
    std::vector<int> table;
    for (int p = 0; p < s.carrier(); ++p) {
        table.push_back(partition.block_of(p));
    }
    FiniteMap projection(s.carrier(), k, std::move(table));
    std::vector<Mask> opens;
    for (PointSet u : s.opens()) {
        if (partition.saturates(u)) {
            opens.push_back(projection.image(u).bits());
        }
    }
    return Quotient{make_space(k, opens), std::move(projection)};
}

// ---------------------------------------------------------------------------
// Metrics

enum class MetricAxiom { zero_diagonal, symmetry, positivity, triangle, shape };

constexpr std::string_view to_string(MetricAxiom a) {
    switch (a) {
    case MetricAxiom::zero_diagonal: return "zero_diagonal";
    case MetricAxiom::symmetry: return "symmetry";
    case MetricAxiom::positivity: return "positivity";
    case MetricAxiom::triangle: return "triangle";
    case MetricAxiom::shape: return "shape";
    }
    return "unknown";
}

class InvalidMetric : public Error {
public:
    InvalidMetric(MetricAxiom axiom, std::vector<int> witness)
        : Error(ErrorKind::InvalidMetric, describe(axiom, witness))
        , axiom_(axiom)
        , witness_(std::move(witness)) {}

    MetricAxiom axiom() const noexcept { return axiom_; }
    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    static std::string describe(MetricAxiom a, const std::vector<int>& w) {
        std::string out(to_string(a));
        for (int i : w) {
            out += ' ' + std::to_string(i);
        }
        return out;
    }
    MetricAxiom axiom_;
    std::vector<int> witness_;
};

/// Exact integer distances on {0..n-1}.
class MetricTable {
public:
    using Distance = std::uint64_t;

    MetricTable(int n, std::vector<std::vector<Distance>> d) : n_(n), d_(std::move(d)) {
        require_carrier(n);
        validate();
    }

    /// d(i, j) = 1 for i != j.
    static MetricTable unit(int n) {
        std::vector<std::vector<Distance>> d(static_cast<std::size_t>(n),
                                             std::vector<Distance>(static_cast<std::size_t>(n), 1));
        for (int i = 0; i < n; ++i) {
            d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
        }
        return MetricTable(n, std::move(d));
    }

    int carrier() const noexcept { return n_; }
    Distance operator()(int i, int j) const {
        return d_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    const std::vector<std::vector<Distance>>& rows() const noexcept { return d_; }

    /// {x : d(center, x) < radius}.
    PointSet ball(int center, Distance radius) const {
        Mask out = 0;
        for (int x = 0; x < n_; ++x) {
            if ((*this)(center, x) < radius) {
                out |= Mask{1} << x;
            }
        }
        return PointSet::raw(n_, out);
    }

private:
    void validate() const {
        if (d_.size() != static_cast<std::size_t>(n_)) {
            throw InvalidMetric(MetricAxiom::shape, {static_cast<int>(d_.size())});
        }
        for (int i = 0; i < n_; ++i) {
            if (d_[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(n_)) {
                throw InvalidMetric(MetricAxiom::shape, {i});
            }
        }
        for (int i = 0; i < n_; ++i) {
            if ((*this)(i, i) != 0) {
                throw InvalidMetric(MetricAxiom::zero_diagonal, {i});
            }
        }
        for (int i = 0; i < n_; ++i) {
            for (int j = i + 1; j < n_; ++j) {
                if ((*this)(i, j) != (*this)(j, i)) {
                    throw InvalidMetric(MetricAxiom::symmetry, {i, j});
                }
                if ((*this)(i, j) == 0) {
                    throw InvalidMetric(MetricAxiom::positivity, {i, j});
                }
            }
        }
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                for (int k = 0; k < n_; ++k) {
                    if ((*this)(i, k) > (*this)(i, j) + (*this)(j, k)) {
                        throw InvalidMetric(MetricAxiom::triangle, {i, j, k});
                    }
                }
            }
        }
    }

    int n_;
    std::vector<std::vector<Distance>> d_;
};

/// Open balls at every center and every distinct positive distance value
/// (plus one radius beyond the largest distance) generate the topology.
/// Ball membership only changes at those thresholds.
inline TopSpace metric_topology(const MetricTable& m) {
    const int n = m.carrier();
    std::set<MetricTable::Distance> radii;
    MetricTable::Distance largest = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (m(i, j) > 0) {
                radii.insert(m(i, j));
            }
            largest = std::max(largest, m(i, j));
        }
    }
    radii.insert(largest + 1);
    std::vector<PointSet> balls;
    for (int p = 0; p < n; ++p) {
        for (auto r : radii) {
            balls.push_back(m.ball(p, r));
        }
    }
    return topology_from_base(n, Family(n, std::move(balls)));
}

/// Every finite metric space is discrete, so a finite space is metrizable
/// exactly when it is discrete.
inline bool is_metrizable(const TopSpace& s) {
    return s.opens().size() == (std::size_t{1} << s.carrier());
}

} // namespace fintop
