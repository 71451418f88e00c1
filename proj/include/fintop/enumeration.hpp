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

/// @file enumeration.hpp
/// Exhaustive generation of every topology on a small carrier.
///
/// The generator builds the sorted open-set sequence one member at a time,
/// in increasing bitmask order. Since an intersection is never larger than
/// its operands and a union never smaller, a partial sequence can be
/// abandoned as soon as it is not intersection-closed, or as soon as a
/// missing pairwise union is smaller than the next candidate. Sequences end
/// with the full carrier, so emission order is lexicographic.

#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "space.hpp"

namespace fintop {

/// Labeled enumeration is exact up to 4 points; 5 points is best effort
/// (6942 topologies, seconds of work).
inline constexpr int kEnumerationCap = 5;

enum class EnumMode { labeled, up_to_homeomorphism };

using SpacePredicate = std::function<bool(const TopSpace&)>;

struct EnumConfig {
    int n = 0;
    SpacePredicate filter; // empty: keep everything
    std::string filter_name;
    EnumMode mode = EnumMode::labeled;
};

/// Relabels the points of `s` by `perm` (point p becomes perm[p]).
inline TopSpace relabel(const TopSpace& s, const std::vector<int>& perm) {
    std::vector<Mask> opens;
    opens.reserve(s.opens().size());
    for (PointSet u : s.opens()) {
        Mask m = 0;
        for (int p : u.points()) {
            m |= Mask{1} << perm[static_cast<std::size_t>(p)];
        }
        opens.push_back(m);
    }
    return make_space(s.carrier(), opens);
}

/// The lexicographically least open-set family among all relabelings.
inline Family canonical_opens(const TopSpace& s) {
    require_carrier(s.carrier(), 8);
    std::vector<int> perm(static_cast<std::size_t>(s.carrier()));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Mask> best = s.opens().masks();
    std::vector<Mask> buf;
    do {
        buf.clear();
        for (PointSet u : s.opens()) {
            Mask m = 0;
            for (Mask bits = u.bits(); bits != 0; bits &= bits - 1) {
                m |= Mask{1} << perm[static_cast<std::size_t>(std::countr_zero(bits))];
            }
            buf.push_back(m);
        }
        std::sort(buf.begin(), buf.end());
        if (buf < best) {
            best = buf;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Family::from_masks(s.carrier(), best);
}

namespace detail {

class TopologyGenerator {
public:
    explicit TopologyGenerator(int n) : n_(n), all_(full_mask(n)), present_(std::size_t{1} << n, 0) {}

    /// Visits every topology whose second member (after ∅) satisfies
    /// `branch`; the root is split this way for parallel counting.
    template <class Visit, class Branch>
    void run(Visit&& visit, Branch&& branch) {
        current_.assign(1, 0);
        present_[0] = 1;
        if (all_ == 0) {
            visit(static_cast<const std::vector<Mask>&>(current_));
        } else {
            descend(visit, branch);
        }
        present_[0] = 0;
    }

private:
    template <class Visit, class Branch>
    void descend(Visit& visit, Branch& branch) {
        const Mask last = current_.back();
        if (last == all_) {
            visit(static_cast<const std::vector<Mask>&>(current_));
            return;
        }
        // Smallest pairwise union still missing; it must be the next member.
        Mask limit = all_;
        for (std::size_t i = 0; i < current_.size(); ++i) {
            for (std::size_t j = i + 1; j < current_.size(); ++j) {
                const Mask u = current_[i] | current_[j];
                if (!present_[u] && u < limit) {
                    limit = u;
                }
            }
        }
        for (Mask m = last + 1; m <= limit; ++m) {
            if (current_.size() == 1 && !branch(m)) {
                continue;
            }
            bool closed = true;
            for (Mask c : current_) {
                const Mask meet = c & m;
                if (meet != m && !present_[meet]) {
                    closed = false;
                    break;
                }
            }
            if (!closed) {
                continue;
            }
            current_.push_back(m);
            present_[m] = 1;
            descend(visit, branch);
            present_[m] = 0;
            current_.pop_back();
        }
    }

    int n_;
    Mask all_;
    std::vector<char> present_;
    std::vector<Mask> current_;
};

inline bool keep(const EnumConfig& cfg, const TopSpace& s) {
    if (cfg.mode == EnumMode::up_to_homeomorphism && canonical_opens(s) != s.opens()) {
        return false;
    }
    return !cfg.filter || cfg.filter(s);
}

} // namespace detail

/// Streams every topology on cfg.n points, in lexicographic order of the
/// open-set sequences. In up_to_homeomorphism mode only the canonical
/// (lexicographically least) member of each class is passed on.
template <class Fn>
void for_each_topology(const EnumConfig& cfg, Fn&& fn) {
    require_carrier(cfg.n, kEnumerationCap);
    detail::TopologyGenerator gen(cfg.n);
    gen.run(
        [&](const std::vector<Mask>& opens) {
            TopSpace s = make_space(cfg.n, opens);
            if (detail::keep(cfg, s)) {
                fn(s);
            }
        },
        [](Mask) { return true; });
}

inline std::vector<TopSpace> enumerate_topologies(const EnumConfig& cfg) {
    std::vector<TopSpace> out;
    for_each_topology(cfg, [&](const TopSpace& s) { out.push_back(s); });
    return out;
}

inline std::vector<TopSpace> all_topologies(int n) { return enumerate_topologies(EnumConfig{n, {}, {}}); }

inline std::size_t count_topologies(int n, const SpacePredicate& filter = {},
                                    EnumMode mode = EnumMode::labeled) {
    std::size_t count = 0;
    for_each_topology(EnumConfig{n, filter, {}, mode}, [&](const TopSpace&) { ++count; });
    return count;
}

/// Same count as count_topologies, with the search split across threads by
/// the second member of the open-set sequence. `filter` must be safe to
/// call concurrently.
inline std::size_t count_topologies_parallel(int n, const SpacePredicate& filter = {},
                                             EnumMode mode = EnumMode::labeled,
                                             unsigned threads = 0) {
    require_carrier(n, kEnumerationCap);
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    const EnumConfig cfg{n, filter, {}, mode};
    std::atomic<std::size_t> total{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            std::size_t local = 0;
            detail::TopologyGenerator gen(n);
            gen.run(
                [&](const std::vector<Mask>& opens) {
                    if (detail::keep(cfg, make_space(n, opens))) {
                        ++local;
                    }
                },
                [&](Mask second) { return second % threads == t; });
            // n = 0 has no branching; only thread 0 reports it.
            if (n > 0 || t == 0) {
                total += local;
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    return total.load();
}

} // namespace fintop
