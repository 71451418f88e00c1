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

/// @file sweep.hpp
/// Exhaustive regression of known laws over every topology on n points.
///
/// Three scopes: single spaces, ordered pairs of spaces on the same
/// carrier, and maps between two such spaces. A law returns std::nullopt
/// when it holds and a JSON description of the offending case otherwise.
/// Exceptions raised while a law is evaluated count as failures of that law.

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "compactness.hpp"
#include "io.hpp"

namespace fintop {

enum class TheoremScope { space, space_pair, map };

constexpr std::string_view to_string(TheoremScope s) {
    switch (s) {
    case TheoremScope::space: return "space";
    case TheoremScope::space_pair: return "space_pair";
    case TheoremScope::map: return "map";
    }
    return "unknown";
}

/// Per-space data shared by the laws, computed on first use so that a
/// broken operator surfaces inside whichever law touches it first.
class SpaceFacts {
public:
    explicit SpaceFacts(TopSpace s) : s_(std::move(s)) {}

    const TopSpace& space() const noexcept { return s_; }

    const ConnectedSetTable& connected() const {
        if (!connected_) {
            connected_ = std::make_unique<ConnectedSetTable>(s_);
        }
        return *connected_;
    }
    const SeparationReport& separation() const {
        if (!separation_) {
            separation_ = separation_report(s_);
        }
        return *separation_;
    }
    bool compact_set(PointSet a) const {
        if (compact_.empty()) {
            compact_.assign(std::size_t{1} << s_.carrier(), 0);
            for (PointSet b : subsets(s_.carrier())) {
                compact_[b.bits()] = is_compact_set(s_, b) ? 1 : 0;
            }
        }
        return compact_[a.bits()] != 0;
    }
    /// Closure of every subset, indexed by bitmask.
    PointSet cl(PointSet a) const {
        if (closures_.empty()) {
            for (PointSet b : subsets(s_.carrier())) {
                closures_.push_back(closure(s_, b));
            }
        }
        return closures_[a.bits()];
    }
    PointSet in(PointSet a) const {
        if (interiors_.empty()) {
            for (PointSet b : subsets(s_.carrier())) {
                interiors_.push_back(interior(s_, b));
            }
        }
        return interiors_[a.bits()];
    }

private:
    TopSpace s_;
    mutable std::unique_ptr<ConnectedSetTable> connected_;
    mutable std::optional<SeparationReport> separation_;
    mutable std::vector<char> compact_;
    mutable std::vector<PointSet> closures_;
    mutable std::vector<PointSet> interiors_;
};

/// Data about an ordered pair of spaces.
class PairFacts {
public:
    PairFacts(const SpaceFacts& a, const SpaceFacts& b) : a_(a), b_(b) {}

    const Product& prod() const {
        if (!product_) {
            product_ = std::make_unique<Product>(product(a_.space(), b_.space()));
        }
        return *product_;
    }

private:
    const SpaceFacts& a_;
    const SpaceFacts& b_;
    mutable std::unique_ptr<Product> product_;
};

using Verdict = std::optional<Json>;

struct Theorem {
    std::string id;
    std::string statement;
    TheoremScope scope = TheoremScope::space;
    int max_n = 3;
    std::function<Verdict(const SpaceFacts&)> on_space;
    std::function<Verdict(const SpaceFacts&, const SpaceFacts&, const PairFacts&)> on_pair;
    std::function<Verdict(const SpaceFacts&, const SpaceFacts&, const PairFacts&, const FiniteMap&)> on_map;
};

struct TheoremResult {
    std::string id;
    std::string statement;
    TheoremScope scope = TheoremScope::space;
    bool pass = true;
    bool skipped = false;
    std::size_t cases = 0;
    Json counterexample; // null when the law held everywhere
};

struct SweepReport {
    int n = 0;
    std::vector<TheoremResult> results;

    bool all_pass() const {
        return std::all_of(results.begin(), results.end(), [](const TheoremResult& r) { return r.pass; });
    }
    std::vector<TheoremResult> failures() const {
        std::vector<TheoremResult> out;
        std::copy_if(results.begin(), results.end(), std::back_inserter(out),
                     [](const TheoremResult& r) { return !r.pass; });
        return out;
    }
};

inline Json to_json(const TheoremResult& r) {
    Json out{{"id", r.id}, {"scope", std::string(to_string(r.scope))}, {"cases", r.cases}};
    if (r.skipped) {
        out["status"] = "skipped";
    } else {
        out["status"] = r.pass ? "pass" : "fail";
    }
    if (!r.pass) {
        out["counterexample"] = r.counterexample;
    }
    return out;
}

inline Json to_json(const SweepReport& r) {
    Json list = Json::array();
    for (const auto& t : r.results) {
        list.push_back(to_json(t));
    }
    return Json{{"n", r.n}, {"all_pass", r.all_pass()}, {"theorems", list}};
}

namespace detail {

/// Every partition of {0..n-1}, from restricted growth strings.
inline std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> grow = [&](int i, int used) {
        if (i == n) {
            std::vector<PointSet> blocks(static_cast<std::size_t>(used), PointSet::empty(n));
            for (int p = 0; p < n; ++p) {
                auto& b = blocks[static_cast<std::size_t>(label[static_cast<std::size_t>(p)])];
                b = b.with(p);
            }
            out.emplace_back(n, std::move(blocks));
            return;
        }
        for (int k = 0; k <= used; ++k) {
            label[static_cast<std::size_t>(i)] = k;
            grow(i + 1, std::max(used, k + 1));
        }
    };
    grow(0, 0);
    return out;
}

/// Subfamilies of `pool` with between `lo` and `hi` members.
inline std::vector<Family> small_subfamilies(int n, const std::vector<PointSet>& pool, std::size_t lo,
                                             std::size_t hi) {
    std::vector<Family> out;
    std::vector<PointSet> pick;
    std::function<void(std::size_t)> go = [&](std::size_t start) {
        if (pick.size() >= lo) {
            out.emplace_back(n, pick);
        }
        if (pick.size() == hi) {
            return;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            pick.push_back(pool[i]);
            go(i + 1);
            pick.pop_back();
        }
    };
    go(0);
    return out;
}

inline std::vector<PointSet> all_subsets(int n) {
    std::vector<PointSet> out;
    for (PointSet a : subsets(n)) {
        out.push_back(a);
    }
    return out;
}

inline bool covers_carrier(const Family& c, int n) { return family_union(c).bits() == full_mask(n); }

/// A metric on n points with pseudo-random integer distances, made to obey
/// the triangle inequality by taking shortest paths.
inline MetricTable shuffled_metric(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(1, 9);
    std::vector<std::vector<MetricTable::Distance>> d(static_cast<std::size_t>(n),
                                                      std::vector<MetricTable::Distance>(static_cast<std::size_t>(n), 0));
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            d[i][j] = d[j][i] = dist(rng);
        }
    }
    for (std::size_t k = 0; k < d.size(); ++k) {
        for (std::size_t i = 0; i < d.size(); ++i) {
            for (std::size_t j = 0; j < d.size(); ++j) {
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
            }
        }
    }
    return MetricTable(n, std::move(d));
}

inline Json sets(std::initializer_list<std::pair<const char*, PointSet>> named) {
    Json out = Json::object();
    for (const auto& [k, v] : named) {
        out[k] = to_json(v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Single-space laws

inline void add_space_laws(std::vector<Theorem>& t) {
    auto law = [&](std::string id, std::string statement, int max_n,
                   std::function<Verdict(const SpaceFacts&)> fn) {
        Theorem th;
        th.id = std::move(id);
        th.statement = std::move(statement);
        th.scope = TheoremScope::space;
        th.max_n = max_n;
        th.on_space = std::move(fn);
        t.push_back(std::move(th));
    };

    law("carrier.family-bounds", "complement is an involution; unions and intersections bound members", 4,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            for (PointSet a : subsets(s.carrier())) {
                if (a.complement().complement() != a) {
                    return sets({{"A", a}});
                }
            }
            const PointSet u = family_union(s.opens());
            const PointSet i = family_intersection(s.opens());
            for (PointSet m : s.opens()) {
                if (!m.subset_of(u) || !i.subset_of(m)) {
                    return sets({{"member", m}});
                }
            }
            return std::nullopt;
        });

    law("space.closed-complements", "closed sets are exactly the complements of open sets", 4,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            std::vector<PointSet> back;
            for (PointSet c : s.closeds()) {
                back.push_back(c.complement());
            }
            if (Family(s.carrier(), back) != s.opens() || s.closeds().size() != s.opens().size()) {
                return Json{{"closeds", to_json(s.closeds())}};
            }
            return std::nullopt;
        });

    law("space.neighborhood-intersection",
        "A is inside the intersection of its neighbourhoods, with equality for all A iff T1", 4,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            bool all_equal = true;
            for (PointSet a : subsets(s.carrier())) {
                const PointSet meet = family_intersection(neighborhoods(s, a));
                if (!a.subset_of(meet)) {
                    return sets({{"A", a}});
                }
                all_equal = all_equal && meet == a;
            }
            if (all_equal != f.separation().t1) {
                return Json{{"all_equal", all_equal}, {"t1", f.separation().t1}};
            }
            return std::nullopt;
        });

    law("space.minimal-open", "the minimal open set of p is open, contains p, and lies in every open set containing p",
        4, [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            for (int p = 0; p < s.carrier(); ++p) {
                const PointSet m = s.minimal_open(p);
                bool ok = s.is_open(m) && m.contains(p);
                for (PointSet u : s.opens()) {
                    ok = ok && (!u.contains(p) || m.subset_of(u));
                }
                if (!ok) {
                    return Json{{"p", p}, {"minimal_open", to_json(m)}};
                }
            }
            return std::nullopt;
        });

    law("ops.idempotent", "Int(Int A) = Int A and Cl(Cl A) = Cl A", 4, [](const SpaceFacts& f) -> Verdict {
        const TopSpace& s = f.space();
        for (PointSet a : subsets(s.carrier())) {
            if (interior(s, interior(s, a)) != interior(s, a) || closure(s, closure(s, a)) != closure(s, a)) {
                return sets({{"A", a}});
            }
        }
        return std::nullopt;
    });

    law("ops.lattice-laws", "Int distributes over meets, Cl over joins, Ext turns joins into meets", 4,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            for (PointSet a : subsets(s.carrier())) {
                for (PointSet b : subsets(s.carrier())) {
                    const bool ok = interior(s, a & b) == (interior(s, a) & interior(s, b)) &&
                                    closure(s, a | b) == (closure(s, a) | closure(s, b)) &&
                                    exterior(s, a | b) == (exterior(s, a) & exterior(s, b));
                    if (!ok) {
                        return sets({{"A", a}, {"B", b}});
                    }
                }
            }
            return std::nullopt;
        });

    law("ops.monotone", "B inside A gives Int B inside Int A, Cl B inside Cl A, Ext B containing Ext A", 4,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            for (PointSet a : subsets(s.carrier())) {
                for (PointSet b : subsets_of(a)) {
                    const bool ok = interior(s, b).subset_of(interior(s, a)) &&
                                    closure(s, b).subset_of(closure(s, a)) &&
                                    exterior(s, a).subset_of(exterior(s, b));
                    if (!ok) {
                        return sets({{"A", a}, {"B", b}});
                    }
                }
            }
            return std::nullopt;
        });

    law("ops.frontier-identities",
        "Fr A = Cl A ∩ Cl(X∖A) = Fr(X∖A); Int, Fr, Ext partition X; Cl A = Int A ∪ Fr A = A ∪ Fr A", 4,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            for (PointSet a : subsets(s.carrier())) {
                const PointSet in = interior(s, a);
                const PointSet fr = boundary(s, a);
                const PointSet ex = exterior(s, a);
                const PointSet cl = closure(s, a);
                const bool partition = !in.meets(fr) && !in.meets(ex) && !fr.meets(ex) && (in | fr | ex) == s.full();
                const bool ok = fr == (cl & closure(s, a.complement())) && fr == boundary(s, a.complement()) &&
                                partition && cl == (in | fr) && cl == (a | fr);
                if (!ok) {
                    return sets({{"A", a}, {"Int", in}, {"Fr", fr}, {"Ext", ex}, {"Cl", cl}});
                }
            }
            return std::nullopt;
        });

    law("ops.frontier-powers", "Fr(Fr(Fr A)) = Fr(Fr A)", 4, [](const SpaceFacts& f) -> Verdict {
        const TopSpace& s = f.space();
        for (PointSet a : subsets(s.carrier())) {
            const PointSet f2 = boundary(s, boundary(s, a));
            if (boundary(s, f2) != f2) {
                return sets({{"A", a}, {"Fr2", f2}});
            }
        }
        return std::nullopt;
    });

    law("ops.frontier-interior-empty",
        "Fr of an open or closed set has empty interior; so do Fr(Cl A) and Fr(Int A)", 4,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            for (PointSet a : subsets(s.carrier())) {
                const bool special = s.is_open(a) || s.is_closed(a);
                const bool ok = (!special || interior(s, boundary(s, a)).is_empty()) &&
                                interior(s, boundary(s, closure(s, a))).is_empty() &&
                                interior(s, boundary(s, interior(s, a))).is_empty();
                if (!ok) {
                    return sets({{"A", a}});
                }
            }
            return std::nullopt;
        });

    law("ops.open-meets-closure", "an open set meeting Cl A meets A", 4, [](const SpaceFacts& f) -> Verdict {
        const TopSpace& s = f.space();
        for (PointSet a : subsets(s.carrier())) {
            for (PointSet u : s.opens()) {
                if (u.meets(closure(s, a)) && !u.meets(a)) {
                    return sets({{"A", a}, {"U", u}});
                }
            }
        }
        return std::nullopt;
    });

    law("ops.roles-agree",
        "pointwise roles from neighbourhoods agree with Int, Ext, Fr and Cl; Cl A = A ∪ limit points", 4,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            for (PointSet a : subsets(s.carrier())) {
                const PointSet in = interior(s, a);
                const PointSet ex = exterior(s, a);
                const PointSet fr = boundary(s, a);
                const PointSet cl = closure(s, a);
                const PointSet lim = limit_set(s, a);
                const PointSet iso = isolated_set(s, a);
                for (int p = 0; p < s.carrier(); ++p) {
                    const RoleFlags r = point_roles(s, a, p);
                    const bool ok = r.interior == in.contains(p) && r.exterior == ex.contains(p) &&
                                    r.boundary == fr.contains(p) && r.adherent == cl.contains(p);
                    if (!ok) {
                        return Json{{"A", to_json(a)}, {"p", p}};
                    }
                }
                if (cl != (a | lim) || iso != (a - lim)) {
                    return sets({{"A", a}, {"Cl", cl}, {"limits", lim}, {"isolated", iso}});
                }
            }
            return std::nullopt;
        });

    law("ops.density-laws", "unions of dense sets are dense; open dense ∩ dense is dense", 4,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            std::vector<PointSet> dense;
            for (PointSet a : subsets(s.carrier())) {
                if (density_report(s, a).dense) {
                    dense.push_back(a);
                }
            }
            auto is_dense = [&](PointSet a) { return closure(s, a) == s.full(); };
            for (PointSet a : dense) {
                for (PointSet b : dense) {
                    if (!is_dense(a | b) || (s.is_open(a) && !is_dense(a & b))) {
                        return sets({{"A", a}, {"B", b}});
                    }
                }
            }
            return std::nullopt;
        });

    law("ops.nowhere-dense-laws",
        "subsets and pairwise unions of nowhere-dense sets are nowhere dense; A is nowhere dense iff Cl A is; "
        "the complement of a nowhere-dense set is dense",
        4, [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            auto nd = [&](PointSet a) { return density_report(s, a).nowhere_dense; };
            for (PointSet a : subsets(s.carrier())) {
                if (nd(a) != nd(closure(s, a))) {
                    return sets({{"A", a}});
                }
                if (!nd(a)) {
                    continue;
                }
                if (closure(s, a.complement()) != s.full()) {
                    return sets({{"A", a}});
                }
                for (PointSet b : subsets(s.carrier())) {
                    if ((b.subset_of(a) && !nd(b)) || (nd(b) && !nd(a | b))) {
                        return sets({{"A", a}, {"B", b}});
                    }
                }
            }
            return std::nullopt;
        });

    law("ops.sole-dense-set", "X is the only dense set iff the topology is discrete", 4,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            std::size_t dense = 0;
            for (PointSet a : subsets(s.carrier())) {
                dense += density_report(s, a).dense ? 1 : 0;
            }
            if ((dense == 1) != (s == discrete(s.carrier()))) {
                return Json{{"dense_sets", dense}};
            }
            return std::nullopt;
        });

    law("ops.subspace-operators",
        "for A inside Y: Int_X A ⊆ Int_Y A, Cl_Y A = Y ∩ Cl_X A, Fr_Y A ⊆ Fr_X A, Ext_Y A ⊇ Y ∩ Ext_X A", 4,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            for (PointSet y : subsets(s.carrier())) {
                const TopSpace sub = subspace(s, y).space;
                for (PointSet a : subsets_of(y)) {
                    const PointSet local = compress(a, y);
                    const bool ok = interior(s, a).subset_of(expand(interior(sub, local), y)) &&
                                    expand(closure(sub, local), y) == (y & closure(s, a)) &&
                                    expand(boundary(sub, local), y).subset_of(boundary(s, a)) &&
                                    (y & exterior(s, a)).subset_of(expand(exterior(sub, local), y));
                    if (!ok) {
                        return sets({{"Y", y}, {"A", a}});
                    }
                }
            }
            return std::nullopt;
        });

    law("constructors.base-least",
        "a base inside the topology generates a topology that contains it, is generated by it, "
        "and lies inside every topology containing it",
        3, [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            const int n = s.carrier();
            for (const Family& b : small_subfamilies(n, s.opens().members(), 1, 3)) {
                if (check_base_conditions(n, b).status != BaseStatus::ok) {
                    continue;
                }
                const TopSpace gen = topology_from_base(n, b);
                const bool ok = b.subfamily_of(gen.opens()) && gen.opens().subfamily_of(s.opens()) &&
                                is_base_for(gen, b) &&
                                base_generates_same(n, b, gen.opens()) == BaseRelation::equal;
                if (!ok) {
                    return Json{{"base", to_json(b)}, {"generated", to_json(gen)}};
                }
            }
            return std::nullopt;
        });

    law("constructors.subspace-transitivity", "the subspace of a subspace is the subspace of the whole", 4,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            for (PointSet y : subsets(s.carrier())) {
                const TopSpace sy = subspace(s, y).space;
                for (PointSet z : subsets_of(y)) {
                    if (subspace(sy, compress(z, y)).space != subspace(s, z).space) {
                        return sets({{"Y", y}, {"Z", z}});
                    }
                }
            }
            return std::nullopt;
        });

    law("constructors.subspace-base", "traces of a base on Y form a base of the subspace", 4,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            std::vector<PointSet> mins;
            for (int p = 0; p < s.carrier(); ++p) {
                mins.push_back(s.minimal_open(p));
            }
            const Family bases[] = {s.opens(), Family(s.carrier(), mins)};
            for (PointSet y : subsets(s.carrier())) {
                const TopSpace sy = subspace(s, y).space;
                for (const Family& b : bases) {
                    std::vector<PointSet> traced;
                    for (PointSet m : b) {
                        traced.push_back(compress(m & y, y));
                    }
                    if (!is_base_for(sy, Family(y.size(), traced))) {
                        return Json{{"Y", to_json(y)}, {"base", to_json(b)}};
                    }
                }
            }
            return std::nullopt;
        });

    law("constructors.open-in-open-subspace",
        "open sets of an open subspace are open; closed sets of a closed subspace are closed", 4,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            for (PointSet y : subsets(s.carrier())) {
                const TopSpace sy = subspace(s, y).space;
                if (s.is_open(y)) {
                    for (PointSet v : sy.opens()) {
                        if (!s.is_open(expand(v, y))) {
                            return sets({{"Y", y}, {"V", expand(v, y)}});
                        }
                    }
                }
                if (s.is_closed(y)) {
                    for (PointSet c : sy.closeds()) {
                        if (!s.is_closed(expand(c, y))) {
                            return sets({{"Y", y}, {"C", expand(c, y)}});
                        }
                    }
                }
            }
            return std::nullopt;
        });

    law("constructors.metric-discrete",
        "metric topologies are discrete, and a space is metrizable iff discrete", 4,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            const int n = s.carrier();
            const TopSpace d = discrete(n);
            std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
            for (Mask m : s.opens().masks()) {
                seed = seed * 1099511628211ULL + m;
            }
            const MetricTable random = shuffled_metric(n, seed);
            if (metric_topology(MetricTable::unit(n)) != d || metric_topology(random) != d) {
                return Json{{"metric", random.rows()}};
            }
            if (is_metrizable(s) != (s == d)) {
                return Json{{"metrizable", is_metrizable(s)}};
            }
            return std::nullopt;
        });

    law("constructors.trivial-quotient-and-product",
        "quotient by singletons and product with a point are homeomorphic to the space", 4,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            const Quotient q = quotient(s, Partition::singletons(s.carrier()));
            if (!is_homeomorphism(q.projection, s, q.space)) {
                return Json{{"quotient", to_json(q.space)}};
            }
            const Product left = product(s, one_point_space());
            const Product right = product(one_point_space(), s);
            if (!is_homeomorphism(left.encoding.first_projection(), left.space, s) ||
                !is_homeomorphism(right.encoding.second_projection(), right.space, s)) {
                return Json{{"product", to_json(left.space)}};
            }
            return std::nullopt;
        });

    law("constructors.alexandroff",
        "the one-point extension is compact and restricts to the original space", 3,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            const TopSpace a = alexandroff(s);
            const PointSet original = PointSet::raw(a.carrier(), full_mask(s.carrier()));
            if (!is_compact(a) || subspace(a, original).space != s) {
                return Json{{"extension", to_json(a)}};
            }
            return std::nullopt;
        });

    law("covers.sufficient-fundamental", "open covers and finite closed covers are fundamental", 3,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            const int n = s.carrier();
            for (const Family& c : small_subfamilies(n, all_subsets(n), 1, 3)) {
                if (!covers_carrier(c, n)) {
                    continue;
                }
                const CoverReport r = classify_cover(s, c, s.full());
                if ((r.open_cover || r.closed_cover) && !r.fundamental.value_or(false)) {
                    return Json{{"cover", to_json(c)}};
                }
            }
            return std::nullopt;
        });

    law("covers.fundamental-equivalences",
        "a cover is fundamental iff piecewise-open sets are the open sets iff piecewise-closed sets are the closed sets",
        3, [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            const int n = s.carrier();
            for (const Family& c : small_subfamilies(n, all_subsets(n), 1, 3)) {
                if (!covers_carrier(c, n)) {
                    continue;
                }
                const bool fundamental = is_fundamental_cover(s, c);
                if (fundamental != (piecewise_open_sets(s, c) == s.opens()) ||
                    fundamental != (piecewise_closed_sets(s, c) == s.closeds())) {
                    return Json{{"cover", to_json(c)}, {"fundamental", fundamental}};
                }
            }
            return std::nullopt;
        });

    law("covers.refinement", "a cover with a fundamental refinement is fundamental", 3,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            const int n = s.carrier();
            std::vector<Family> covers;
            for (const Family& c : small_subfamilies(n, all_subsets(n), 1, 3)) {
                if (covers_carrier(c, n)) {
                    covers.push_back(c);
                }
            }
            std::vector<char> fundamental;
            for (const Family& c : covers) {
                fundamental.push_back(is_fundamental_cover(s, c) ? 1 : 0);
            }
            for (std::size_t i = 0; i < covers.size(); ++i) {
                if (!fundamental[i]) {
                    continue;
                }
                for (std::size_t j = 0; j < covers.size(); ++j) {
                    if (!fundamental[j] && is_refinement(s, covers[i], covers[j])) {
                        return Json{{"refinement", to_json(covers[i])}, {"cover", to_json(covers[j])}};
                    }
                }
            }
            return std::nullopt;
        });

    law("covers.minimal-subcover", "minimal_subcover has the least size found by exhaustive search", 3,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            const int n = s.carrier();
            for (const Family& c : small_subfamilies(n, all_subsets(n), 0, 4)) {
                const PointSet reach = family_union(c);
                for (PointSet target : subsets_of(reach)) {
                    const Family got = minimal_subcover(s, c, target);
                    std::size_t best = c.size() + 1;
                    for (Mask pick = 0; pick < (Mask{1} << c.size()); ++pick) {
                        Mask u = 0;
                        for (std::size_t i = 0; i < c.size(); ++i) {
                            if ((pick >> i) & 1u) {
                                u |= c[i].bits();
                            }
                        }
                        if ((target.bits() & ~u) == 0) {
                            best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(pick)));
                        }
                    }
                    if (!is_subcover(got, c, target) || got.size() != best) {
                        return Json{{"cover", to_json(c)}, {"target", to_json(target)}, {"got", to_json(got)},
                                    {"optimum", best}};
                    }
                }
            }
            return std::nullopt;
        });

    law("conn.equivalences",
        "connected iff no open, closed or free 2-partition iff only ∅ and X have empty frontier", 4,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            const bool connected = is_connected(s);
            bool open_split = false;
            bool closed_split = false;
            bool free_split = false;
            bool other_empty_frontier = false;
            for (PointSet a : subsets(s.carrier())) {
                const PointSet b = a.complement();
                if (!a.is_empty() && !b.is_empty()) {
                    open_split = open_split || (s.is_open(a) && s.is_open(b));
                    closed_split = closed_split || (s.is_closed(a) && s.is_closed(b));
                    free_split = free_split || pair_relation(s, a, b) == PairRelation::free;
                    other_empty_frontier = other_empty_frontier || boundary(s, a).is_empty();
                }
            }
            if (connected == open_split || connected == closed_split || connected == free_split ||
                connected == other_empty_frontier) {
                return Json{{"connected", connected},
                            {"open_split", open_split},
                            {"closed_split", closed_split},
                            {"free_split", free_split},
                            {"other_empty_frontier", other_empty_frontier}};
            }
            return std::nullopt;
        });

    law("conn.unions",
        "connected sets that meet, or where one meets the closure of the other, have connected union; "
        "so do pairwise-meeting triples",
        4, [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            const ConnectedSetTable& conn = f.connected();
            const auto all = conn.all();
            for (PointSet a : all) {
                for (PointSet b : all) {
                    if ((a.meets(b) || a.meets(f.cl(b))) && !conn(a | b)) {
                        return sets({{"A", a}, {"B", b}});
                    }
                }
            }
            if (s.carrier() <= 3) {
                for (PointSet a : all) {
                    for (PointSet b : all) {
                        for (PointSet c : all) {
                            if (a.meets(b) && b.meets(c) && a.meets(c) && !conn(a | b | c)) {
                                return sets({{"A", a}, {"B", b}, {"C", c}});
                            }
                        }
                    }
                }
            }
            return std::nullopt;
        });

    law("conn.closure-sandwich", "a set between a connected set and its closure is connected", 4,
        [](const SpaceFacts& f) -> Verdict {
            const ConnectedSetTable& conn = f.connected();
            for (PointSet a : conn.all()) {
                const PointSet cl = f.cl(a);
                for (PointSet extra : subsets_of(cl - a)) {
                    if (!conn(a | extra)) {
                        return sets({{"A", a}, {"B", a | extra}});
                    }
                }
            }
            return std::nullopt;
        });

    law("conn.within-one-part", "a connected set lies inside one part of any open 2-partition", 4,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            for (PointSet u : clopen_sets(s)) {
                for (PointSet a : f.connected().all()) {
                    if (!a.subset_of(u) && !a.subset_of(u.complement())) {
                        return sets({{"A", a}, {"U", u}});
                    }
                }
            }
            return std::nullopt;
        });

    law("conn.components",
        "components are closed and connected, partition X, and group points lying in a common connected set", 4,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            const ConnectedSetTable& conn = f.connected();
            const ComponentDecomposition comps = components(conn);
            for (PointSet b : comps.blocks.blocks()) {
                if (!s.is_closed(b) || !conn(b)) {
                    return sets({{"component", b}});
                }
            }
            for (int p = 0; p < s.carrier(); ++p) {
                for (int q = 0; q < s.carrier(); ++q) {
                    bool together = false;
                    for (PointSet a : conn.all()) {
                        together = together || (a.contains(p) && a.contains(q));
                    }
                    if (together != (comps.block_of(p) == comps.block_of(q))) {
                        return Json{{"p", p}, {"q", q}};
                    }
                }
            }
            if (s.carrier() > 0 && is_connected(s) != (comps.count() == 1)) {
                return Json{{"components", comps.count()}};
            }
            return std::nullopt;
        });

    law("conn.local", "locally connected iff locally connected at every point", 4,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            bool everywhere = true;
            for (int p = 0; p < s.carrier(); ++p) {
                everywhere = everywhere && is_locally_connected_at(s, p);
            }
            if (everywhere != is_locally_connected(s)) {
                return Json{{"pointwise", everywhere}};
            }
            return std::nullopt;
        });

    law("conn.quotients", "quotients of connected spaces are connected, of compact spaces compact", 3,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            const bool connected = is_connected(s);
            for (const Partition& p : all_partitions(s.carrier())) {
                const Quotient q = quotient(s, p);
                if ((connected && !is_connected(q.space)) || !is_compact(q.space)) {
                    return Json{{"partition", to_json(p)}};
                }
            }
            return std::nullopt;
        });

    law("sep.pair-classes",
        "indistinguishability agrees with equal closures and equal minimal open sets; classification is symmetric", 4,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            const int n = s.carrier();
            for (int p = 0; p < n; ++p) {
                for (int q = 0; q < n; ++q) {
                    const PairClass c = classify_pair(s, p, q);
                    const bool same_cl = f.cl(PointSet::singleton(n, p)) == f.cl(PointSet::singleton(n, q));
                    const bool same_min = s.minimal_open(p) == s.minimal_open(q);
                    if (c != classify_pair(s, q, p) || c.indistinguishable != same_cl ||
                        c.indistinguishable != same_min) {
                        return Json{{"p", p}, {"q", q}};
                    }
                }
            }
            return std::nullopt;
        });

    law("sep.t0-closures", "T0 iff p ↦ Cl{p} is injective", 4, [](const SpaceFacts& f) -> Verdict {
        const TopSpace& s = f.space();
        const int n = s.carrier();
        bool injective = true;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                injective = injective && f.cl(PointSet::singleton(n, p)) != f.cl(PointSet::singleton(n, q));
            }
        }
        if (injective != f.separation().t0) {
            return Json{{"injective", injective}};
        }
        return std::nullopt;
    });

    law("sep.ladder", "T2 ⇒ T1 ⇒ T0; regular = T2 ∧ T3; normal = T2 ∧ T4", 4, [](const SpaceFacts& f) -> Verdict {
        const SeparationReport& r = f.separation();
        if ((r.t2 && !r.t1) || (r.t1 && !r.t0) || r.regular != (r.t2 && r.t3) || r.normal != (r.t2 && r.t4)) {
            return Json{{"t0", r.t0}, {"t1", r.t1}, {"t2", r.t2}, {"t3", r.t3}, {"t4", r.t4}};
        }
        return std::nullopt;
    });

    law("sep.finite-rigidity", "on a finite carrier T1 iff T2 iff discrete iff metrizable", 4,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            const SeparationReport& r = f.separation();
            const bool d = s == discrete(s.carrier());
            if (r.t1 != d || r.t2 != d || is_metrizable(s) != d) {
                return Json{{"t1", r.t1}, {"t2", r.t2}, {"discrete", d}};
            }
            return std::nullopt;
        });

    law("sep.hereditary", "subspaces of T1 spaces are T1, of T3 spaces T3", 4, [](const SpaceFacts& f) -> Verdict {
        const TopSpace& s = f.space();
        const SeparationReport& r = f.separation();
        for (PointSet y : subsets(s.carrier())) {
            const SeparationReport sub = separation_report(subspace(s, y).space);
            if ((r.t1 && !sub.t1) || (r.t3 && !sub.t3)) {
                return sets({{"Y", y}});
            }
        }
        return std::nullopt;
    });

    law("sep.closed-subspace-normal", "closed subspaces of normal spaces are normal", 4,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            if (!f.separation().normal) {
                return std::nullopt;
            }
            for (PointSet c : s.closeds()) {
                if (!separation_report(subspace(s, c).space).normal) {
                    return sets({{"C", c}});
                }
            }
            return std::nullopt;
        });

    law("comp.basic",
        "every space is compact and locally compact; A is compact iff its subspace is; ∅ is compact", 3,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            const CompactnessReport r = compactness_report(s);
            if (!r.compact || !r.locally_compact || !f.compact_set(s.none())) {
                return Json{{"compact", r.compact}, {"locally_compact", r.locally_compact}};
            }
            for (PointSet a : subsets(s.carrier())) {
                if (f.compact_set(a) != is_compact(subspace(s, a).space)) {
                    return sets({{"A", a}});
                }
            }
            return std::nullopt;
        });

    law("comp.set-algebra",
        "closed sets of a compact space are compact; unions of two compacts are compact; intersections of "
        "closed compacts are compact, and of any compacts in a Hausdorff space",
        3, [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            const bool compact = f.compact_set(s.full());
            const bool t2 = f.separation().t2;
            for (PointSet a : subsets(s.carrier())) {
                if (compact && s.is_closed(a) && !f.compact_set(a)) {
                    return sets({{"A", a}});
                }
                if (!f.compact_set(a)) {
                    continue;
                }
                for (PointSet b : subsets(s.carrier())) {
                    if (!f.compact_set(b)) {
                        continue;
                    }
                    const bool closed_pair = s.is_closed(a) && s.is_closed(b);
                    if (!f.compact_set(a | b) || ((closed_pair || t2) && !f.compact_set(a & b))) {
                        return sets({{"A", a}, {"B", b}});
                    }
                }
            }
            return std::nullopt;
        });

    law("maps.inclusion-embedding", "the inclusion of a subspace is an embedding", 4,
        [](const SpaceFacts& f) -> Verdict {
            const TopSpace& s = f.space();
            for (PointSet y : subsets(s.carrier())) {
                const Subspace sub = subspace(s, y);
                if (!is_embedding(sub.inclusion, sub.space, s)) {
                    return sets({{"Y", y}});
                }
            }
            return std::nullopt;
        });
}

// ---------------------------------------------------------------------------
// Laws over pairs of spaces on one carrier

inline void add_pair_laws(std::vector<Theorem>& t) {
    auto law = [&](std::string id, std::string statement,
                   std::function<Verdict(const SpaceFacts&, const SpaceFacts&, const PairFacts&)> fn) {
        Theorem th;
        th.id = std::move(id);
        th.statement = std::move(statement);
        th.scope = TheoremScope::space_pair;
        th.max_n = 3;
        th.on_pair = std::move(fn);
        t.push_back(std::move(th));
    };

    law("space.finer-closeds", "a finer topology has more closed sets; compare agrees with inclusion",
        [](const SpaceFacts& a, const SpaceFacts& b, const PairFacts&) -> Verdict {
            const TopSpace& s1 = a.space();
            const TopSpace& s2 = b.space();
            const bool finer = s2.opens().subfamily_of(s1.opens());
            const Comparison c = compare(s1, s2);
            const bool consistent = finer == (c == Comparison::equal || c == Comparison::strictly_finer) &&
                                    finer == is_finer(s1, s2);
            if (!consistent || (finer && !s2.closeds().subfamily_of(s1.closeds()))) {
                return Json{{"comparison", std::string(to_string(c))}};
            }
            return std::nullopt;
        });

    law("ops.finer-operators", "for a finer topology: larger interiors, smaller closures and frontiers",
        [](const SpaceFacts& a, const SpaceFacts& b, const PairFacts&) -> Verdict {
            const TopSpace& fine = a.space();
            const TopSpace& coarse = b.space();
            if (!is_finer(fine, coarse)) {
                return std::nullopt;
            }
            for (PointSet x : subsets(fine.carrier())) {
                const bool ok = interior(coarse, x).subset_of(interior(fine, x)) &&
                                closure(fine, x).subset_of(closure(coarse, x)) &&
                                boundary(fine, x).subset_of(boundary(coarse, x));
                if (!ok) {
                    return sets({{"A", x}});
                }
            }
            return std::nullopt;
        });

    law("conn.coarsening", "a topology coarser than a connected one is connected",
        [](const SpaceFacts& a, const SpaceFacts& b, const PairFacts&) -> Verdict {
            if (is_finer(a.space(), b.space()) && is_connected(a.space()) && !is_connected(b.space())) {
                return Json::object();
            }
            return std::nullopt;
        });

    law("constructors.product-connected-compact",
        "binary products of connected spaces are connected; products are compact",
        [](const SpaceFacts& a, const SpaceFacts& b, const PairFacts& p) -> Verdict {
            const TopSpace& prod = p.prod().space;
            if (is_connected(a.space()) && is_connected(b.space()) && !is_connected(prod)) {
                return Json{{"product", to_json(prod)}};
            }
            if (!is_compact(prod)) {
                return Json{{"product", to_json(prod)}};
            }
            return std::nullopt;
        });

    law("maps.homeomorphic-invariants",
        "homeomorphic spaces agree on compactness, connectedness, components and separation; "
        "homeomorphy is symmetric",
        [](const SpaceFacts& a, const SpaceFacts& b, const PairFacts&) -> Verdict {
            const auto h = find_homeomorphism(a.space(), b.space());
            if (h.has_value() != are_homeomorphic(b.space(), a.space())) {
                return Json{{"forward", h.has_value()}};
            }
            if (!h) {
                return std::nullopt;
            }
            const bool same = is_homeomorphism(*h, a.space(), b.space()) &&
                              a.compact_set(a.space().full()) == b.compact_set(b.space().full()) &&
                              is_connected(a.space()) == is_connected(b.space()) &&
                              components(a.connected()).count() == components(b.connected()).count() &&
                              is_locally_connected(a.space()) == is_locally_connected(b.space()) &&
                              a.separation() == b.separation();
            if (!same) {
                return Json{{"map", to_json(*h)}};
            }
            return std::nullopt;
        });
}

// ---------------------------------------------------------------------------
// Laws over maps

inline void add_map_laws(std::vector<Theorem>& t) {
    auto law = [&](std::string id, std::string statement,
                   std::function<Verdict(const SpaceFacts&, const SpaceFacts&, const PairFacts&, const FiniteMap&)>
                       fn) {
        Theorem th;
        th.id = std::move(id);
        th.statement = std::move(statement);
        th.scope = TheoremScope::map;
        th.max_n = 3;
        th.on_map = std::move(fn);
        t.push_back(std::move(th));
    };

    law("maps.continuity-equivalences",
        "continuity via open preimages, closed preimages, Cl of preimages, images of closures, "
        "interiors of preimages, base preimages, and pointwise continuity all agree",
        [](const SpaceFacts& a, const SpaceFacts& b, const PairFacts&, const FiniteMap& f) -> Verdict {
            const TopSpace& s1 = a.space();
            const TopSpace& s2 = b.space();
            const bool cont = is_continuous(f, s1, s2);
            bool closed_pre = true;
            for (PointSet c : s2.closeds()) {
                closed_pre = closed_pre && s1.is_closed(f.preimage(c));
            }
            bool cl_pre = true;
            bool int_pre = true;
            for (PointSet y : subsets(s2.carrier())) {
                cl_pre = cl_pre && a.cl(f.preimage(y)).subset_of(f.preimage(b.cl(y)));
                int_pre = int_pre && f.preimage(b.in(y)).subset_of(a.in(f.preimage(y)));
            }
            bool img_cl = true;
            for (PointSet x : subsets(s1.carrier())) {
                img_cl = img_cl && f.image(a.cl(x)).subset_of(b.cl(f.image(x)));
            }
            bool base_pre = true;
            for (int q = 0; q < s2.carrier(); ++q) {
                base_pre = base_pre && s1.is_open(f.preimage(s2.minimal_open(q)));
            }
            bool pointwise = true;
            for (int p = 0; p < s1.carrier(); ++p) {
                pointwise = pointwise && is_continuous_at(f, s1, s2, p);
            }
            if (closed_pre != cont || cl_pre != cont || int_pre != cont || img_cl != cont || base_pre != cont ||
                pointwise != cont) {
                return Json{{"continuous", cont}, {"closed_preimages", closed_pre}, {"closure_preimages", cl_pre},
                            {"interior_preimages", int_pre}, {"closure_images", img_cl},
                            {"base_preimages", base_pre}, {"pointwise", pointwise}};
            }
            return std::nullopt;
        });

    law("maps.open-closed-criteria", "f is open iff f(Int A) ⊆ Int f(A); closed iff Cl f(A) ⊆ f(Cl A)",
        [](const SpaceFacts& a, const SpaceFacts& b, const PairFacts&, const FiniteMap& f) -> Verdict {
            const TopSpace& s1 = a.space();
            const TopSpace& s2 = b.space();
            bool open_crit = true;
            bool closed_crit = true;
            for (PointSet x : subsets(s1.carrier())) {
                open_crit = open_crit && f.image(a.in(x)).subset_of(b.in(f.image(x)));
                closed_crit = closed_crit && b.cl(f.image(x)).subset_of(f.image(a.cl(x)));
            }
            const MapReport r = check_map(f, s1, s2);
            if (open_crit != r.open_map || closed_crit != r.closed_map) {
                return Json{{"open_map", r.open_map}, {"closed_map", r.closed_map}};
            }
            return std::nullopt;
        });

    law("maps.homeomorphism-transport",
        "a homeomorphism maps opens onto opens and commutes with Cl, Int and Fr; its inverse is one too",
        [](const SpaceFacts& a, const SpaceFacts& b, const PairFacts&, const FiniteMap& f) -> Verdict {
            const TopSpace& s1 = a.space();
            const TopSpace& s2 = b.space();
            if (!is_homeomorphism(f, s1, s2)) {
                return std::nullopt;
            }
            std::vector<PointSet> images;
            for (PointSet u : s1.opens()) {
                images.push_back(f.image(u));
            }
            if (Family(s2.carrier(), images) != s2.opens() || !is_homeomorphism(*f.inverse(), s2, s1)) {
                return Json::object();
            }
            for (PointSet x : subsets(s1.carrier())) {
                const bool ok = f.image(closure(s1, x)) == closure(s2, f.image(x)) &&
                                f.image(interior(s1, x)) == interior(s2, f.image(x)) &&
                                f.image(boundary(s1, x)) == boundary(s2, f.image(x));
                if (!ok) {
                    return sets({{"A", x}});
                }
            }
            return std::nullopt;
        });

    law("maps.composition",
        "composites of continuous maps are continuous; composites of homeomorphisms are homeomorphisms",
        [](const SpaceFacts& a, const SpaceFacts& b, const PairFacts&, const FiniteMap& f) -> Verdict {
            const TopSpace& s1 = a.space();
            const TopSpace& s2 = b.space();
            const bool fc = is_continuous(f, s1, s2);
            const bool fh = fc && is_homeomorphism(f, s1, s2);
            Verdict out;
            for_each_map(s2.carrier(), s1.carrier(), [&](const FiniteMap& g) {
                if (out) {
                    return;
                }
                const bool gc = is_continuous(g, s2, s1);
                if (fc && gc && (!is_continuous(compose(g, f), s1, s1) || !is_continuous(compose(f, g), s2, s2))) {
                    out = Json{{"g", to_json(g)}};
                }
                if (fh && gc && is_homeomorphism(g, s2, s1) && !is_homeomorphism(compose(g, f), s1, s1)) {
                    out = Json{{"g", to_json(g)}};
                }
            });
            return out;
        });

    law("maps.images",
        "continuous images of connected and compact sets are connected and compact; a continuous surjection "
        "maps dense sets to dense sets",
        [](const SpaceFacts& a, const SpaceFacts& b, const PairFacts&, const FiniteMap& f) -> Verdict {
            const TopSpace& s1 = a.space();
            const TopSpace& s2 = b.space();
            if (!is_continuous(f, s1, s2)) {
                return std::nullopt;
            }
            for (PointSet x : subsets(s1.carrier())) {
                const PointSet y = f.image(x);
                if ((a.connected()(x) && !b.connected()(y)) || (a.compact_set(x) && !b.compact_set(y))) {
                    return sets({{"A", x}});
                }
                if (f.surjective() && a.cl(x) == s1.full() && b.cl(y) != s2.full()) {
                    return sets({{"A", x}});
                }
            }
            return std::nullopt;
        });

    law("maps.limits-hausdorff", "into a Hausdorff codomain a map has at most one limit at each limit point",
        [](const SpaceFacts& a, const SpaceFacts& b, const PairFacts&, const FiniteMap& f) -> Verdict {
            const TopSpace& s1 = a.space();
            const TopSpace& s2 = b.space();
            if (!b.separation().t2) {
                return std::nullopt;
            }
            for (PointSet x : subsets(s1.carrier())) {
                const FiniteMap g = restrict(f, s1, s2, x);
                for (int p = 0; p < s1.carrier(); ++p) {
                    if (!point_roles(s1, x, p).limit) {
                        continue;
                    }
                    const PointSet lim = limits_at(s1, x, g, s2, p);
                    if (lim.size() > 1) {
                        return Json{{"A", to_json(x)}, {"p", p}, {"limits", to_json(lim)}};
                    }
                }
            }
            return std::nullopt;
        });

    law("covers.pasting",
        "a map continuous on each piece of an open cover (up to 3 pieces) or a closed cover (up to 2) is continuous",
        [](const SpaceFacts& a, const SpaceFacts& b, const PairFacts&, const FiniteMap& f) -> Verdict {
            const TopSpace& s1 = a.space();
            const TopSpace& s2 = b.space();
            const int n = s1.carrier();
            std::vector<Family> covers;
            for (const Family& c : small_subfamilies(n, s1.opens().members(), 1, 3)) {
                if (covers_carrier(c, n)) {
                    covers.push_back(c);
                }
            }
            for (const Family& c : small_subfamilies(n, s1.closeds().members(), 1, 2)) {
                if (covers_carrier(c, n)) {
                    covers.push_back(c);
                }
            }
            for (const Family& c : covers) {
                if (!verify_pasting(s1, s2, f, c)) {
                    return Json{{"cover", to_json(c)}};
                }
            }
            return std::nullopt;
        });

    law("sep.maps-into-t1",
        "a continuous injection into a T1 space has a T1 domain; continuous maps from an indiscrete space "
        "into a T1 space are constant",
        [](const SpaceFacts& a, const SpaceFacts& b, const PairFacts&, const FiniteMap& f) -> Verdict {
            const TopSpace& s1 = a.space();
            const TopSpace& s2 = b.space();
            if (!b.separation().t1 || !is_continuous(f, s1, s2)) {
                return std::nullopt;
            }
            if (f.injective() && !a.separation().t1) {
                return Json{{"injective", true}};
            }
            const bool constant = f.image(s1.full()).size() <= 1;
            if (s1 == indiscrete(s1.carrier()) && !constant) {
                return Json{{"constant", false}};
            }
            return std::nullopt;
        });

    law("comp.hausdorff-codomain",
        "into a Hausdorff space: continuous maps are closed, continuous bijections homeomorphisms, "
        "continuous injections embeddings; compacts are closed and disjoint compacts separated",
        [](const SpaceFacts& a, const SpaceFacts& b, const PairFacts&, const FiniteMap& f) -> Verdict {
            if (!b.separation().t2) {
                return std::nullopt;
            }
            const HausdorffCompactChecks r = hausdorff_compact_checks(a.space(), b.space(), f);
            if (!r.all()) {
                return Json{{"continuous_is_closed", r.continuous_is_closed},
                            {"bijection_is_homeomorphism", r.bijection_is_homeomorphism},
                            {"injection_is_embedding", r.injection_is_embedding},
                            {"compact_sets_closed", r.compact_sets_closed},
                            {"disjoint_compacts_separated", r.disjoint_compacts_separated}};
            }
            return std::nullopt;
        });

    law("constructors.product-universal",
        "a map into a product is continuous iff both components are; the graph map recovers f",
        [](const SpaceFacts& a, const SpaceFacts& b, const PairFacts& p, const FiniteMap& f) -> Verdict {
            const TopSpace& s1 = a.space();
            const TopSpace& s2 = b.space();
            const Product& prod = p.prod();
            std::vector<int> table;
            for (int x = 0; x < s1.carrier(); ++x) {
                table.push_back(prod.encoding.encode(x, f(x)));
            }
            const FiniteMap graph(s1.carrier(), prod.space.carrier(), std::move(table));
            const FiniteMap first = compose(prod.encoding.first_projection(), graph);
            const FiniteMap second = compose(prod.encoding.second_projection(), graph);
            if (first != FiniteMap::identity(s1.carrier()) || second != f) {
                return Json{{"graph", to_json(graph)}};
            }
            const bool both = is_continuous(first, s1, s1) && is_continuous(second, s1, s2);
            if (is_continuous(graph, s1, prod.space) != both) {
                return Json{{"graph", to_json(graph)}, {"components_continuous", both}};
            }
            return std::nullopt;
        });
}

} // namespace detail

/// Every registered law, in report order.
inline const std::vector<Theorem>& theorem_registry() {
    static const std::vector<Theorem> registry = [] {
        std::vector<Theorem> t;
        detail::add_space_laws(t);
        detail::add_pair_laws(t);
        detail::add_map_laws(t);
        return t;
    }();
    return registry;
}

struct SweepOptions {
    bool maps = true;                  // include pair and map scopes
    std::vector<std::string> only;     // law ids; empty runs all
};

namespace detail {

/// `context` builds the description of the case; it only runs on failure.
template <class Context, class Fn>
void run_law(TheoremResult& r, Context&& context, Fn&& body) {
    if (!r.pass) {
        return;
    }
    ++r.cases;
    try {
        if (auto bad = body()) {
            r.pass = false;
            r.counterexample = context();
            r.counterexample["detail"] = std::move(*bad);
        }
    } catch (const std::exception& e) {
        r.pass = false;
        r.counterexample = context();
        r.counterexample["exception"] = e.what();
    }
}

} // namespace detail

/// Runs the registered laws over every topology on n points. Single-space
/// laws apply up to their own cap (4 for most); pair and map laws up to 3.
inline SweepReport sweep_theorems(int n, const SweepOptions& options = {}) {
    require_carrier(n, 4);
    std::vector<SpaceFacts> spaces;
    for (TopSpace& s : all_topologies(n)) {
        spaces.emplace_back(std::move(s));
    }
    std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<PairFacts>> pairs;
    auto pair_of = [&](std::size_t i, std::size_t j) -> const PairFacts& {
        auto& slot = pairs[{i, j}];
        if (!slot) {
            slot = std::make_unique<PairFacts>(spaces[i], spaces[j]);
        }
        return *slot;
    };

    SweepReport report;
    report.n = n;
    for (const Theorem& th : theorem_registry()) {
        if (!options.only.empty() &&
            std::find(options.only.begin(), options.only.end(), th.id) == options.only.end()) {
            continue;
        }
        TheoremResult r;
        r.id = th.id;
        r.statement = th.statement;
        r.scope = th.scope;
        if (n > th.max_n || (th.scope != TheoremScope::space && !options.maps)) {
            r.skipped = true;
            report.results.push_back(std::move(r));
            continue;
        }
        for (std::size_t i = 0; i < spaces.size() && r.pass; ++i) {
            const SpaceFacts& a = spaces[i];
            if (th.scope == TheoremScope::space) {
                detail::run_law(r, [&] { return Json{{"space", to_json(a.space())}}; }, [&] { return th.on_space(a); });
                continue;
            }
            for (std::size_t j = 0; j < spaces.size() && r.pass; ++j) {
                const SpaceFacts& b = spaces[j];
                const PairFacts& p = pair_of(i, j);
                if (th.scope == TheoremScope::space_pair) {
                    detail::run_law(
                        r, [&] { return Json{{"space1", to_json(a.space())}, {"space2", to_json(b.space())}}; },
                        [&] { return th.on_pair(a, b, p); });
                    continue;
                }
                for_each_map(n, n, [&](const FiniteMap& f) {
                    detail::run_law(
                        r,
                        [&] {
                            return Json{{"dom", to_json(a.space())}, {"cod", to_json(b.space())}, {"table", to_json(f)}};
                        },
                        [&] { return th.on_map(a, b, p, f); });
                });
            }
        }
        report.results.push_back(std::move(r));
    }
    return report;
}

} // namespace fintop
