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

#include <optional>
#include <string>
#include <vector>

#include "carrier.hpp"

namespace fintop {

/// Total function {0..dom-1} -> {0..cod-1} stored as a lookup table.
class FiniteMap {
public:
    FiniteMap() = default;

    FiniteMap(int dom_n, int cod_n, std::vector<int> table)
        : dom_n_(dom_n), cod_n_(cod_n), table_(std::move(table)) {
        require_carrier(dom_n);
        require_carrier(cod_n);
        if (table_.size() != static_cast<std::size_t>(dom_n)) {
            throw Error(ErrorKind::MapOutOfRange, "table has " + std::to_string(table_.size()) +
                                                      " entries, domain has " +
                                                      std::to_string(dom_n) + " points");
        }
        for (int v : table_) {
            if (v < 0 || v >= cod_n) {
                throw Error(ErrorKind::MapOutOfRange,
                            "entry " + std::to_string(v) + " outside codomain of size " +
                                std::to_string(cod_n));
            }
        }
    }

    static FiniteMap identity(int n) {
        std::vector<int> t(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            t[static_cast<std::size_t>(i)] = i;
        }
        return FiniteMap(n, n, std::move(t));
    }

    static FiniteMap constant(int dom_n, int cod_n, int value) {
        return FiniteMap(dom_n, cod_n, std::vector<int>(static_cast<std::size_t>(dom_n), value));
    }

    int dom() const noexcept { return dom_n_; }
    int cod() const noexcept { return cod_n_; }
    const std::vector<int>& table() const noexcept { return table_; }
    int operator()(int p) const { return table_.at(static_cast<std::size_t>(p)); }

    PointSet image(PointSet a) const {
        Mask out = 0;
        for (Mask m = a.bits(); m != 0; m &= m - 1) {
            out |= Mask{1} << table_[static_cast<std::size_t>(std::countr_zero(m))];
        }
        return PointSet::raw(cod_n_, out);
    }

    PointSet preimage(PointSet b) const {
        Mask out = 0;
        for (int p = 0; p < dom_n_; ++p) {
            if (b.contains(table_[static_cast<std::size_t>(p)])) {
                out |= Mask{1} << p;
            }
        }
        return PointSet::raw(dom_n_, out);
    }

    bool injective() const { return image(PointSet::full(dom_n_)).size() == dom_n_; }
    bool surjective() const { return image(PointSet::full(dom_n_)).is_full(); }
    bool bijective() const { return injective() && surjective(); }

    std::optional<FiniteMap> inverse() const {
        if (!bijective()) {
            return std::nullopt;
        }
        std::vector<int> t(static_cast<std::size_t>(cod_n_));
        for (int p = 0; p < dom_n_; ++p) {
            t[static_cast<std::size_t>(table_[static_cast<std::size_t>(p)])] = p;
        }
        return FiniteMap(cod_n_, dom_n_, std::move(t));
    }

    friend bool operator==(const FiniteMap&, const FiniteMap&) = default;

private:
    int dom_n_ = 0;
    int cod_n_ = 0;
    std::vector<int> table_;
};

/// (g ∘ f)(p) = g(f(p)).
inline FiniteMap compose(const FiniteMap& g, const FiniteMap& f) {
    if (f.cod() != g.dom()) {
        throw Error(ErrorKind::CarrierMismatch, "cannot compose: codomain " +
                                                    std::to_string(f.cod()) + " vs domain " +
                                                    std::to_string(g.dom()));
    }
    std::vector<int> t;
    t.reserve(static_cast<std::size_t>(f.dom()));
    for (int v : f.table()) {
        t.push_back(g(v));
    }
    return FiniteMap(f.dom(), g.cod(), std::move(t));
}

/// Calls fn(map) for every one of the cod^dom tables, in lexicographic order.
template <class Fn>
void for_each_map(int dom_n, int cod_n, Fn&& fn) {
    std::vector<int> t(static_cast<std::size_t>(dom_n), 0);
    if (dom_n > 0 && cod_n == 0) {
        return;
    }
    while (true) {
        fn(FiniteMap(dom_n, cod_n, t));
        int i = dom_n - 1;
        while (i >= 0 && t[static_cast<std::size_t>(i)] == cod_n - 1) {
            t[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) {
            return;
        }
        ++t[static_cast<std::size_t>(i)];
    }
}

} // namespace fintop
