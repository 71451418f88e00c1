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

#pragma once

#include <vector>

#include "constructors.hpp"

namespace fintop {

/// Only ∅ and the carrier are clopen.
inline bool is_connected(const TopSpace& s) {
    const std::size_t expected = s.carrier() == 0 ? 1 : 2;
    return clopen_sets(s).size() == expected;
}

/// A set is connected when its subspace is.
inline bool is_connected_set(const TopSpace& s, PointSet a) {
    return is_connected(subspace(s, a).space);
}

/// Connectedness of every subset, indexed by bitmask. Built once per space
/// and passed down a call chain; never shared between spaces.
class ConnectedSetTable {
public:
    static constexpr int kCap = 16;

    explicit ConnectedSetTable(const TopSpace& s) : n_(s.carrier()) {
        require_carrier(n_, kCap);
        connected_.resize(std::size_t{1} << n_);
        for (PointSet a : subsets(n_)) {
            connected_[a.bits()] = is_connected_set(s, a);
        }
    }

    bool operator()(PointSet a) const { return connected_[a.bits()] != 0; }
    int carrier() const noexcept { return n_; }

    std::vector<PointSet> all() const {
        std::vector<PointSet> out;
        for (Mask m = 0; m < connected_.size(); ++m) {
            if (connected_[m]) {
                out.push_back(PointSet::raw(n_, m));
            }
        }
        return out;
    }

private:
    int n_;
    std::vector<char> connected_;
};

/// Union of all connected sets that include `a`.
inline PointSet mcp(const ConnectedSetTable& table, PointSet a) {
    const PointSet free = a.complement();
    Mask out = 0;
    for (PointSet extra : subsets_of(free)) {
        const PointSet candidate = a | extra;
        if (table(candidate)) {
            out |= candidate.bits();
        }
    }
    return PointSet::raw(table.carrier(), out);
}

inline PointSet mcp(const TopSpace& s, PointSet a) {
    return mcp(ConnectedSetTable(s), s.as_subset(a));
}

struct ComponentDecomposition {
    Partition blocks;

    std::size_t count() const noexcept { return blocks.size(); }
    int block_of(int p) const { return blocks.block_of(p); }
};

inline ComponentDecomposition components(const ConnectedSetTable& table) {
    const int n = table.carrier();
    std::vector<PointSet> blocks;
    Mask covered = 0;
    for (int p = 0; p < n; ++p) {
        if ((covered >> p) & 1u) {
            continue;
        }
        const PointSet block = mcp(table, PointSet::raw(n, Mask{1} << p));
        covered |= block.bits();
        blocks.push_back(block);
    }
    return ComponentDecomposition{Partition(n, std::move(blocks))};
}

/// Maximally-connected sets. The empty space has none.
inline ComponentDecomposition components(const TopSpace& s) {
    return components(ConnectedSetTable(s));
}

/// The only connected sets are ∅ and singletons.
inline bool is_totally_disconnected(const TopSpace& s) {
    const ConnectedSetTable table(s);
    for (PointSet a : table.all()) {
        if (a.size() > 1) {
            return false;
        }
    }
    return true;
}

/// For every open U, each component of the subspace U is open in the space.
inline bool is_locally_connected(const TopSpace& s) {
    for (PointSet u : s.opens()) {
        const Subspace sub = subspace(s, u);
        const ComponentDecomposition comps = components(sub.space);
        for (PointSet block : comps.blocks.blocks()) {
            if (!s.is_open(expand(block, u))) {
                return false;
            }
        }
    }
    return true;
}

/// Every open neighbourhood of p contains a connected open neighbourhood of p.
inline bool is_locally_connected_at(const TopSpace& s, int p) {
    s.check_point(p);
    const Family around = neighborhoods(s, PointSet::singleton(s.carrier(), p));
    for (PointSet u : around) {
        bool found = false;
        for (PointSet v : around) {
            if (v.subset_of(u) && is_connected_set(s, v)) {
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

} // namespace fintop
