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

/// @file compactness.hpp
/// Cover-based compactness, Hausdorff interactions, local compactness and
/// the one-point extension that adds a point at infinity.
///
/// Every space here is compact. The predicates still scan open covers
/// literally (up to kLiteralOpensCap open sets) so that the fact is checked
/// rather than built in.

#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "covers.hpp"
#include "separation.hpp"

namespace fintop {

inline constexpr std::size_t kLiteralOpensCap = 20;
inline constexpr std::size_t kSampledCovers = 4096;

enum class CompactnessMode { literal, sampled };

constexpr std::string_view to_string(CompactnessMode m) {
    return m == CompactnessMode::literal ? "literal" : "sampled";
}

namespace detail {

/// Keeps, in order, the members of the covering subfamily `pick` that reach
/// a point of `need` not yet covered; the kept members form a finite
/// subcover exactly when they cover `need`.
inline bool has_finite_subcover(const std::vector<Mask>& opens, std::uint64_t pick, Mask need) {
    Mask covered = 0;
    for (std::size_t i = 0; i < opens.size(); ++i) {
        if (((pick >> i) & 1u) && (opens[i] & need & ~covered) != 0) {
            covered |= opens[i];
        }
    }
    return (need & ~covered) == 0;
}

struct CompactScan {
    bool compact = true;
    CompactnessMode mode = CompactnessMode::literal;
};

inline CompactScan scan_open_covers(const TopSpace& s, PointSet target) {
    const std::vector<Mask> opens = s.opens().masks();
    const Mask need = target.bits();
    CompactScan out;
    auto check = [&](std::uint64_t pick) {
        Mask covered = 0;
        for (std::size_t i = 0; i < opens.size(); ++i) {
            if ((pick >> i) & 1u) {
                covered |= opens[i];
            }
        }
        if ((need & ~covered) == 0 && !has_finite_subcover(opens, pick, need)) {
            out.compact = false;
        }
    };
    if (opens.size() <= kLiteralOpensCap) {
        const std::uint64_t total = std::uint64_t{1} << opens.size();
        for (std::uint64_t pick = 0; pick < total && out.compact; ++pick) {
            check(pick);
        }
    } else {
        out.mode = CompactnessMode::sampled;
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t{1} << opens.size()) - 1);
        // The whole family is always among the samples.
        check((std::uint64_t{1} << opens.size()) - 1);
        for (std::size_t k = 0; k < kSampledCovers && out.compact; ++k) {
            check(dist(rng));
        }
    }
    return out;
}

} // namespace detail

/// Every open cover of `a` (by open sets of `s`) has a finite subcover.
inline bool is_compact_set(const TopSpace& s, PointSet a) {
    return detail::scan_open_covers(s, s.as_subset(a)).compact;
}

inline bool is_compact(const TopSpace& s) { return is_compact_set(s, s.full()); }

struct CompactnessReport {
    bool compact = false;
    bool locally_compact = false;
    CompactnessMode mode = CompactnessMode::literal;
    /// subcover_sizes[k]: open covers whose smallest subcover has k members.
    /// Filled only when diagnostics are requested in literal mode.
    std::vector<std::size_t> subcover_sizes;
};

inline bool is_locally_compact(const TopSpace& s);

inline CompactnessReport compactness_report(const TopSpace& s, bool diagnostics = false) {
    const auto scan = detail::scan_open_covers(s, s.full());
    CompactnessReport r;
    r.compact = scan.compact;
    r.mode = scan.mode;
    r.locally_compact = is_locally_compact(s);
    detail::ensure(r.compact && r.locally_compact, "a finite space failed a compactness check");
    if (diagnostics && scan.mode == CompactnessMode::literal) {
        const auto& opens = s.opens().members();
        r.subcover_sizes.assign(opens.size() + 1, 0);
        for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << opens.size()); ++pick) {
            std::vector<PointSet> chosen;
            for (std::size_t i = 0; i < opens.size(); ++i) {
                if ((pick >> i) & 1u) {
                    chosen.push_back(opens[i]);
                }
            }
            const Family cover(s.carrier(), std::move(chosen));
            if (s.full().subset_of(family_union(cover))) {
                ++r.subcover_sizes[minimal_subcover(s, cover, s.full()).size()];
            }
        }
    }
    return r;
}

/// Every point has a neighbourhood contained in some compact set.
inline bool is_locally_compact(const TopSpace& s) {
    for (int p = 0; p < s.carrier(); ++p) {
        bool found = false;
        for (PointSet u : s.opens()) {
            if (!u.contains(p)) {
                continue;
            }
            for (PointSet extra : subsets_of(u.complement())) {
                if (is_compact_set(s, u | extra)) {
                    found = true;
                    break;
                }
            }
            if (found) {
                break;
            }
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

struct HausdorffCompactChecks {
    bool continuous_is_closed = false;         // continuous ⇒ closed map
    bool bijection_is_homeomorphism = false;   // continuous bijection ⇒ homeomorphism
    bool injection_is_embedding = false;       // continuous injection ⇒ embedding
    bool compact_sets_closed = false;          // in the codomain
    bool disjoint_compacts_separated = false;  // in the codomain

    bool all() const noexcept {
        return continuous_is_closed && bijection_is_homeomorphism && injection_is_embedding &&
               compact_sets_closed && disjoint_compacts_separated;
    }
    friend bool operator==(const HausdorffCompactChecks&, const HausdorffCompactChecks&) = default;
};

/// Consequences of mapping a compact space into a Hausdorff one. Each field
/// is the truth value of an implication; all of them are expected to hold.
inline HausdorffCompactChecks hausdorff_compact_checks(const TopSpace& s1, const TopSpace& s2,
                                                       const FiniteMap& f) {
    require_map_between(f, s1, s2);
    if (!separation_report(s2).t2) {
        throw Error(ErrorKind::CodomainNotHausdorff, "codomain is not Hausdorff");
    }
    detail::ensure(is_compact(s1), "finite domain is not compact");
    const bool cont = is_continuous(f, s1, s2);
    HausdorffCompactChecks r;
    r.continuous_is_closed = !cont || is_closed_map(f, s1, s2);
    r.bijection_is_homeomorphism = !(cont && f.bijective()) || is_homeomorphism(f, s1, s2);
    r.injection_is_embedding = !(cont && f.injective()) || is_embedding(f, s1, s2);

    std::vector<PointSet> compacts;
    for (PointSet a : subsets(s2.carrier())) {
        if (is_compact_set(s2, a)) {
            compacts.push_back(a);
        }
    }
    r.compact_sets_closed = std::all_of(compacts.begin(), compacts.end(),
                                        [&](PointSet a) { return s2.is_closed(a); });
    r.disjoint_compacts_separated = true;
    for (PointSet a : compacts) {
        for (PointSet b : compacts) {
            if (!a.is_empty() && !b.is_empty() && !a.meets(b) &&
                !detail::have_disjoint_neighborhoods(s2, a, b)) {
                r.disjoint_compacts_separated = false;
            }
        }
    }
    return r;
}

/// Adds a point at infinity (index n). Its open neighbourhoods are U ∪ {∞}
/// for open U whose complement is closed and compact.
inline TopSpace alexandroff(const TopSpace& s) {
    const int n = s.carrier();
    require_carrier(n + 1, kMaxCarrier - 1);
    const Mask inf = Mask{1} << n;
    std::vector<Mask> opens;
    for (PointSet u : s.opens()) {
        opens.push_back(u.bits());
        const PointSet rest = u.complement();
        const bool qualifies = s.is_closed(rest) && is_compact_set(s, rest);
        detail::ensure(qualifies, "complement of an open set is not closed and compact");
        if (qualifies) {
            opens.push_back(u.bits() | inf);
        }
    }
    return make_space(n + 1, opens);
}

} // namespace fintop
