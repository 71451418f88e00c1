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

/// @file carrier.hpp
/// Set algebra over a finite carrier {0, ..., n-1}.
///
/// A PointSet is a bitmask (bit i set iff point i is a member) tagged with
/// its carrier size. A Family is a sorted, duplicate-free sequence of
/// PointSets over one carrier, so two families are equal exactly when
/// their member sequences are equal.

#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace fintop {

using Mask = std::uint32_t;

inline constexpr int kMaxCarrier = 24;

constexpr Mask full_mask(int n) {
    return n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

inline void require_carrier(int n, int cap = kMaxCarrier) {
    if (n < 0 || n > cap) {
        throw Error(ErrorKind::CarrierTooLarge,
                    "carrier size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    }
}

class PointSet {
public:
    constexpr PointSet() = default;

    PointSet(int n, Mask bits) : bits_(bits), n_(static_cast<std::uint8_t>(n)) {
        require_carrier(n);
        if ((bits & ~full_mask(n)) != 0) {
            throw Error(ErrorKind::PointOutOfRange,
                        "mask " + std::to_string(bits) + " has points outside carrier of size " +
                            std::to_string(n));
        }
    }

    static PointSet empty(int n) { return PointSet(n, 0); }
    static PointSet full(int n) { return PointSet(n, full_mask(n)); }
    static PointSet singleton(int n, int p) {
        if (p < 0 || p >= n) {
            throw Error(ErrorKind::PointOutOfRange, "point " + std::to_string(p));
        }
        return PointSet(n, Mask{1} << p);
    }
    static PointSet of(int n, std::initializer_list<int> points) {
        return of(n, std::span<const int>(points.begin(), points.size()));
    }
    static PointSet of(int n, std::span<const int> points) {
        Mask m = 0;
        for (int p : points) {
            if (p < 0 || p >= n) {
                throw Error(ErrorKind::PointOutOfRange, "point " + std::to_string(p));
            }
            m |= Mask{1} << p;
        }
        return PointSet(n, m);
    }

    constexpr Mask bits() const noexcept { return bits_; }
    constexpr int carrier() const noexcept { return n_; }

    constexpr bool contains(int p) const noexcept { return p >= 0 && p < 32 && ((bits_ >> p) & 1u); }
    constexpr bool is_empty() const noexcept { return bits_ == 0; }
    constexpr bool is_full() const noexcept { return bits_ == full_mask(n_); }
    constexpr int size() const noexcept { return std::popcount(bits_); }

    constexpr bool subset_of(PointSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr bool superset_of(PointSet other) const noexcept { return other.subset_of(*this); }
    constexpr bool meets(PointSet other) const noexcept { return (bits_ & other.bits_) != 0; }

    constexpr PointSet complement() const noexcept { return raw(n_, ~bits_ & full_mask(n_)); }
    constexpr PointSet with(int p) const noexcept { return raw(n_, bits_ | (Mask{1} << p)); }
    constexpr PointSet without(int p) const noexcept { return raw(n_, bits_ & ~(Mask{1} << p)); }

    /// Smallest member, or -1 for the empty set.
    constexpr int first() const noexcept { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

    std::vector<int> points() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (Mask m = bits_; m != 0; m &= m - 1) {
            out.push_back(std::countr_zero(m));
        }
        return out;
    }

    friend constexpr PointSet operator|(PointSet a, PointSet b) noexcept {
        return raw(std::max(a.n_, b.n_), a.bits_ | b.bits_);
    }
    friend constexpr PointSet operator&(PointSet a, PointSet b) noexcept {
        return raw(std::max(a.n_, b.n_), a.bits_ & b.bits_);
    }
    friend constexpr PointSet operator-(PointSet a, PointSet b) noexcept {
        return raw(a.n_, a.bits_ & ~b.bits_);
    }
    PointSet& operator|=(PointSet b) noexcept { return *this = *this | b; }
    PointSet& operator&=(PointSet b) noexcept { return *this = *this & b; }

    friend constexpr bool operator==(PointSet, PointSet) = default;
    friend constexpr auto operator<=>(PointSet, PointSet) = default;

    /// Builds a set whose bits are known to lie inside the carrier.
    static constexpr PointSet raw(int n, Mask bits) noexcept {
        PointSet s;
        s.bits_ = bits;
        s.n_ = static_cast<std::uint8_t>(n);
        return s;
    }

private:
    // Declaration order matters: ordering compares bits first.
    Mask bits_ = 0;
    std::uint8_t n_ = 0;
};

/// "{0,2}" style rendering, used in diagnostics.
inline std::string to_string(PointSet s) {
    std::string out = "{";
    bool first = true;
    for (int p : s.points()) {
        if (!first) {
            out += ',';
        }
        out += std::to_string(p);
        first = false;
    }
    return out + "}";
}

class Family {
public:
    using value_type = PointSet;
    using const_iterator = std::vector<PointSet>::const_iterator;

    Family() = default;
    explicit Family(int n) : n_(n) { require_carrier(n); }

    Family(int n, std::vector<PointSet> members) : n_(n), members_(std::move(members)) {
        require_carrier(n);
        for (PointSet s : members_) {
            if ((s.bits() & ~full_mask(n)) != 0) {
                throw Error(ErrorKind::PointOutOfRange,
                            "member " + to_string(s) + " outside carrier of size " + std::to_string(n));
            }
        }
        for (PointSet& s : members_) {
            s = PointSet::raw(n, s.bits());
        }
        canonicalize();
    }

    Family(int n, std::initializer_list<PointSet> members)
        : Family(n, std::vector<PointSet>(members)) {}

    static Family from_masks(int n, std::span<const Mask> masks) {
        std::vector<PointSet> members;
        members.reserve(masks.size());
        for (Mask m : masks) {
            members.emplace_back(n, m);
        }
        return Family(n, std::move(members));
    }
    static Family from_masks(int n, std::initializer_list<Mask> masks) {
        return from_masks(n, std::span<const Mask>(masks.begin(), masks.size()));
    }

    int carrier() const noexcept { return n_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    const_iterator begin() const noexcept { return members_.begin(); }
    const_iterator end() const noexcept { return members_.end(); }
    PointSet operator[](std::size_t i) const { return members_[i]; }
    const std::vector<PointSet>& members() const noexcept { return members_; }

    bool contains(PointSet s) const { return contains_mask(s.bits()); }
    bool contains_mask(Mask m) const {
        auto it = std::lower_bound(members_.begin(), members_.end(), m,
                                   [](PointSet a, Mask b) { return a.bits() < b; });
        return it != members_.end() && it->bits() == m;
    }

    /// Every member of this family is a member of `other`.
    bool subfamily_of(const Family& other) const {
        return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                             members_.end());
    }

    std::vector<Mask> masks() const {
        std::vector<Mask> out;
        out.reserve(members_.size());
        for (PointSet s : members_) {
            out.push_back(s.bits());
        }
        return out;
    }

    friend bool operator==(const Family& a, const Family& b) {
        return a.n_ == b.n_ && a.members_ == b.members_;
    }
    /// Lexicographic on the member sequences.
    friend std::strong_ordering operator<=>(const Family& a, const Family& b) {
        if (auto c = std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(),
                                                             b.members_.begin(), b.members_.end());
            c != 0) {
            return c;
        }
        return a.n_ <=> b.n_;
    }

private:
    void canonicalize() {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    int n_ = 0;
    std::vector<PointSet> members_;
};

inline std::string to_string(const Family& f) {
    std::string out = "{";
    bool first = true;
    for (PointSet s : f) {
        if (!first) {
            out += ',';
        }
        out += to_string(s);
        first = false;
    }
    return out + "}";
}

inline PointSet family_union(const Family& fam) {
    Mask m = 0;
    for (PointSet s : fam) {
        m |= s.bits();
    }
    return PointSet::raw(fam.carrier(), m);
}

/// The intersection of the empty family is left undefined.
inline PointSet family_intersection(const Family& fam) {
    if (fam.empty()) {
        throw Error(ErrorKind::EmptyFamilyIntersection, "intersection of an empty family");
    }
    Mask m = full_mask(fam.carrier());
    for (PointSet s : fam) {
        m &= s.bits();
    }
    return PointSet::raw(fam.carrier(), m);
}

/// Lazy range over the 2^n subsets of the carrier, ascending by bitmask.
/// Hand-rolled: iota_view | transform trips clang on libstdc++ 11.
class SubsetRange {
public:
    class iterator {
    public:
        using value_type = PointSet;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(int n, std::uint64_t m) : n_(n), m_(m) {}

        PointSet operator*() const { return PointSet::raw(n_, static_cast<Mask>(m_)); }
        iterator& operator++() {
            ++m_;
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++m_;
            return old;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.m_ == b.m_; }

    private:
        int n_ = 0;
        std::uint64_t m_ = 0;
    };

    explicit SubsetRange(int n) : n_(n) {}
    iterator begin() const { return {n_, 0}; }
    iterator end() const { return {n_, std::uint64_t{1} << n_}; }
    std::size_t size() const { return std::size_t{1} << n_; }

private:
    int n_;
};

/// All 2^n subsets of the carrier, ascending by bitmask.
inline SubsetRange subsets(int n) {
    require_carrier(n);
    return SubsetRange(n);
}

/// Subsets of `s`, ascending by bitmask (includes the empty set and `s`).
inline std::vector<PointSet> subsets_of(PointSet s) {
    std::vector<PointSet> out;
    out.reserve(std::size_t{1} << s.size());
    Mask sub = 0;
    do {
        out.push_back(PointSet::raw(s.carrier(), sub));
        sub = (sub - s.bits()) & s.bits();
    } while (sub != 0);
    return out;
}

/// Re-indexes `a ∩ y` onto a carrier of |y| points, keeping the ascending
/// order of the points of `y`.
inline PointSet compress(PointSet a, PointSet y) {
    Mask out = 0;
    int i = 0;
    for (Mask m = y.bits(); m != 0; m &= m - 1, ++i) {
        if (a.bits() & (m & (~m + 1))) {
            out |= Mask{1} << i;
        }
    }
    return PointSet::raw(y.size(), out);
}

/// Inverse of compress: lifts a subset of the |y|-point carrier back into
/// the carrier of `y`.
inline PointSet expand(PointSet sub, PointSet y) {
    Mask out = 0;
    int i = 0;
    for (Mask m = y.bits(); m != 0; m &= m - 1, ++i) {
        if (sub.bits() & (Mask{1} << i)) {
            out |= m & (~m + 1);
        }
    }
    return PointSet::raw(y.carrier(), out);
}

} // namespace fintop
