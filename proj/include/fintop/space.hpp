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

/// @file space.hpp
/// Validated finite topological spaces.
///
/// A TopSpace can only be obtained through validation (or from one of the
/// named constructors whose output is valid by construction), so every
/// TopSpace in circulation satisfies the topology axioms. Alongside the
/// open sets it caches the closed sets and, for every point, the smallest
/// open set containing it.

#pragma once

#include <bit>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

#include "carrier.hpp"

namespace fintop {

enum class ViolationKind {
    MissingEmpty,
    MissingCarrier,
    NotIntersectionClosed,
    NotUnionClosed,
    MemberOutOfCarrier,
};

constexpr std::string_view to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::MissingEmpty: return "MissingEmpty";
    case ViolationKind::MissingCarrier: return "MissingCarrier";
    case ViolationKind::NotIntersectionClosed: return "NotIntersectionClosed";
    case ViolationKind::NotUnionClosed: return "NotUnionClosed";
    case ViolationKind::MemberOutOfCarrier: return "MemberOutOfCarrier";
    }
    return "Unknown";
}

/// One failed axiom. Pair witnesses are the lexicographically smallest
/// offending pair (by bitmask); MemberOutOfCarrier carries the smallest
/// offending member.
struct AxiomViolation {
    ViolationKind kind;
    std::vector<PointSet> witness;

    friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

class InvalidTopology : public Error {
public:
    explicit InvalidTopology(std::vector<AxiomViolation> violations)
        : Error(ErrorKind::InvalidTopology, describe(violations))
        , violations_(std::move(violations)) {}

    const std::vector<AxiomViolation>& violations() const noexcept { return violations_; }

private:
    static std::string describe(const std::vector<AxiomViolation>& vs) {
        std::string out;
        for (const auto& v : vs) {
            if (!out.empty()) {
                out += ", ";
            }
            out += to_string(v.kind);
            for (PointSet w : v.witness) {
                out += ' ' + to_string(w);
            }
        }
        return out;
    }

    std::vector<AxiomViolation> violations_;
};

class TopSpace;
class ValidationResult;

inline ValidationResult validate_topology(int n, std::span<const Mask> masks);
inline TopSpace discrete(int n);
inline TopSpace indiscrete(int n);

class TopSpace {
public:
    int carrier() const noexcept { return n_; }
    PointSet full() const noexcept { return PointSet::raw(n_, full_mask(n_)); }
    PointSet none() const noexcept { return PointSet::raw(n_, 0); }

    const Family& opens() const noexcept { return opens_; }
    const Family& closeds() const noexcept { return closeds_; }

    /// Smallest open set containing `p`.
    PointSet minimal_open(int p) const {
        check_point(p);
        return min_open_[static_cast<std::size_t>(p)];
    }

    bool is_open(PointSet a) const { return opens_.contains(a); }
    bool is_closed(PointSet a) const { return closeds_.contains(a); }
    bool is_clopen(PointSet a) const { return is_open(a) && is_closed(a); }

    void check_point(int p) const {
        if (p < 0 || p >= n_) {
            throw Error(ErrorKind::PointOutOfRange,
                        "point " + std::to_string(p) + " not in carrier of size " + std::to_string(n_));
        }
    }
    void check_subset(PointSet a) const {
        if ((a.bits() & ~full_mask(n_)) != 0) {
            throw Error(ErrorKind::PointOutOfRange,
                        "set " + to_string(a) + " not in carrier of size " + std::to_string(n_));
        }
    }
    PointSet as_subset(PointSet a) const {
        check_subset(a);
        return PointSet::raw(n_, a.bits());
    }

    friend bool operator==(const TopSpace& a, const TopSpace& b) { return a.opens_ == b.opens_; }
    friend auto operator<=>(const TopSpace& a, const TopSpace& b) { return a.opens_ <=> b.opens_; }

private:
    friend ValidationResult validate_topology(int n, std::span<const Mask> masks);
    friend TopSpace discrete(int n);
    friend TopSpace indiscrete(int n);

    TopSpace(int n, Family opens) : n_(n), opens_(std::move(opens)) {
        std::vector<PointSet> closed;
        closed.reserve(opens_.size());
        for (PointSet u : opens_) {
            closed.push_back(u.complement());
        }
        closeds_ = Family(n_, std::move(closed));

        min_open_.assign(static_cast<std::size_t>(n_), full());
        for (PointSet u : opens_) {
            for (Mask m = u.bits(); m != 0; m &= m - 1) {
                auto p = static_cast<std::size_t>(std::countr_zero(m));
                min_open_[p] &= u;
            }
        }
    }

    int n_ = 0;
    Family opens_;
    Family closeds_;
    std::vector<PointSet> min_open_;
};

/// Either a validated space or every axiom that failed.
class ValidationResult {
public:
    explicit ValidationResult(TopSpace s) : value_(std::move(s)) {}
    explicit ValidationResult(std::vector<AxiomViolation> v) : value_(std::move(v)) {}

    bool ok() const noexcept { return std::holds_alternative<TopSpace>(value_); }
    explicit operator bool() const noexcept { return ok(); }

    const TopSpace& space() const {
        if (!ok()) {
            throw InvalidTopology(violations());
        }
        return std::get<TopSpace>(value_);
    }
    TopSpace take() && {
        if (!ok()) {
            throw InvalidTopology(violations());
        }
        return std::get<TopSpace>(std::move(value_));
    }
    std::vector<AxiomViolation> violations() const {
        if (ok()) {
            return {};
        }
        return std::get<std::vector<AxiomViolation>>(value_);
    }

private:
    std::variant<TopSpace, std::vector<AxiomViolation>> value_;
};

/// Checks the topology axioms on a family of subsets of {0..n-1}. Closure
/// under arbitrary unions is checked as closure under pairwise unions,
/// which is equivalent for finite families.
inline ValidationResult validate_topology(int n, std::span<const Mask> masks) {
    require_carrier(n);
    std::vector<Mask> sorted(masks.begin(), masks.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    const Mask all = full_mask(n);
    std::vector<AxiomViolation> violations;
    std::vector<Mask> inside;
    std::optional<Mask> outside;
    for (Mask m : sorted) {
        if ((m & ~all) != 0) {
            if (!outside) {
                outside = m;
            }
        } else {
            inside.push_back(m);
        }
    }

    auto has = [&](Mask m) { return std::binary_search(inside.begin(), inside.end(), m); };

    if (!has(0)) {
        violations.push_back({ViolationKind::MissingEmpty, {}});
    }
    if (!has(all)) {
        violations.push_back({ViolationKind::MissingCarrier, {}});
    }
    auto first_bad_pair = [&](auto combine) -> std::optional<std::pair<Mask, Mask>> {
        for (std::size_t i = 0; i < inside.size(); ++i) {
            for (std::size_t j = i + 1; j < inside.size(); ++j) {
                if (!has(combine(inside[i], inside[j]))) {
                    return std::pair{inside[i], inside[j]};
                }
            }
        }
        return std::nullopt;
    };
    if (auto w = first_bad_pair([](Mask a, Mask b) { return a & b; })) {
        violations.push_back({ViolationKind::NotIntersectionClosed,
                              {PointSet::raw(n, w->first), PointSet::raw(n, w->second)}});
    }
    if (auto w = first_bad_pair([](Mask a, Mask b) { return a | b; })) {
        violations.push_back({ViolationKind::NotUnionClosed,
                              {PointSet::raw(n, w->first), PointSet::raw(n, w->second)}});
    }
    if (outside) {
        violations.push_back({ViolationKind::MemberOutOfCarrier,
                              {PointSet::raw(std::bit_width(*outside), *outside)}});
    }
    if (!violations.empty()) {
        return ValidationResult(std::move(violations));
    }
    return ValidationResult(TopSpace(n, Family::from_masks(n, inside)));
}

inline ValidationResult validate_topology(int n, const Family& fam) {
    auto masks = fam.masks();
    return validate_topology(n, std::span<const Mask>(masks));
}

/// Validates and returns the space, throwing InvalidTopology on failure.
inline TopSpace make_space(int n, std::span<const Mask> opens) {
    return validate_topology(n, opens).take();
}
inline TopSpace make_space(int n, std::initializer_list<Mask> opens) {
    return make_space(n, std::span<const Mask>(opens.begin(), opens.size()));
}
inline TopSpace make_space(const Family& opens) {
    return validate_topology(opens.carrier(), opens).take();
}

/// Every subset open. Capped at 20 points to bound the 2^n open sets.
inline TopSpace discrete(int n) {
    require_carrier(n, 20);
    std::vector<PointSet> all;
    all.reserve(std::size_t{1} << n);
    for (PointSet s : subsets(n)) {
        all.push_back(s);
    }
    return TopSpace(n, Family(n, std::move(all)));
}

/// Only the empty set and the carrier are open.
inline TopSpace indiscrete(int n) {
    require_carrier(n);
    return TopSpace(n, Family(n, {PointSet::empty(n), PointSet::full(n)}));
}

inline TopSpace one_point_space() { return indiscrete(1); }

/// Two points with opens {∅, {1}, {0,1}}.
inline TopSpace sierpinski() { return make_space(2, {0b00, 0b10, 0b11}); }

inline const Family& closed_sets(const TopSpace& s) { return s.closeds(); }

/// Sets that are both open and closed.
inline Family clopen_sets(const TopSpace& s) {
    std::vector<PointSet> out;
    for (PointSet u : s.opens()) {
        if (s.is_closed(u)) {
            out.push_back(u);
        }
    }
    return Family(s.carrier(), std::move(out));
}

enum class NeighborhoodKind { open, closed };

/// Open (or closed) sets that include `a`.
inline Family neighborhoods(const TopSpace& s, PointSet a,
                            NeighborhoodKind kind = NeighborhoodKind::open) {
    a = s.as_subset(a);
    const Family& pool = kind == NeighborhoodKind::open ? s.opens() : s.closeds();
    std::vector<PointSet> out;
    for (PointSet u : pool) {
        if (a.subset_of(u)) {
            out.push_back(u);
        }
    }
    return Family(s.carrier(), std::move(out));
}

inline PointSet minimal_open(const TopSpace& s, int p) { return s.minimal_open(p); }

enum class Comparison { equal, strictly_finer, strictly_coarser, incomparable };

constexpr std::string_view to_string(Comparison c) {
    switch (c) {
    case Comparison::equal: return "equal";
    case Comparison::strictly_finer: return "strictly_finer";
    case Comparison::strictly_coarser: return "strictly_coarser";
    case Comparison::incomparable: return "incomparable";
    }
    return "unknown";
}

inline void require_same_carrier(const TopSpace& a, const TopSpace& b) {
    if (a.carrier() != b.carrier()) {
        throw Error(ErrorKind::CarrierMismatch, "carrier sizes " + std::to_string(a.carrier()) +
                                                    " and " + std::to_string(b.carrier()));
    }
}

/// t1 is finer than t2 when every t2-open set is t1-open.
inline bool is_finer(const TopSpace& t1, const TopSpace& t2) {
    require_same_carrier(t1, t2);
    return t2.opens().subfamily_of(t1.opens());
}
inline bool is_coarser(const TopSpace& t1, const TopSpace& t2) { return is_finer(t2, t1); }

inline Comparison compare(const TopSpace& t1, const TopSpace& t2) {
    const bool finer = is_finer(t1, t2);
    const bool coarser = is_coarser(t1, t2);
    if (finer && coarser) {
        return Comparison::equal;
    }
    if (finer) {
        return Comparison::strictly_finer;
    }
    if (coarser) {
        return Comparison::strictly_coarser;
    }
    return Comparison::incomparable;
}

/// The topology whose opens are common to every space in the list.
inline TopSpace meet_topologies(std::span<const TopSpace> spaces) {
    if (spaces.empty()) {
        throw Error(ErrorKind::EmptyList, "meet of no topologies");
    }
    for (const TopSpace& t : spaces) {
        require_same_carrier(spaces.front(), t);
    }
    std::vector<Mask> common = spaces.front().opens().masks();
    for (const TopSpace& t : spaces.subspan(1)) {
        std::erase_if(common, [&](Mask m) { return !t.opens().contains_mask(m); });
    }
    return make_space(spaces.front().carrier(), common);
}

/// Adjoins a new point a = s.carrier() and takes {{a} ∪ U : U open} ∪ {∅}.
inline TopSpace one_point_extension(const TopSpace& s) {
    require_carrier(s.carrier() + 1);
    const Mask extra = Mask{1} << s.carrier();
    std::vector<Mask> opens{0};
    for (PointSet u : s.opens()) {
        opens.push_back(u.bits() | extra);
    }
    return make_space(s.carrier() + 1, opens);
}

} // namespace fintop
