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

// Reference implementations used only by the tests. They work on raw masks
// and share no code with the library beyond the Mask typedef.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Mask = std::uint32_t;
using Opens = std::vector<Mask>; // sorted ascending

inline Mask full(int n) { return n == 0 ? 0u : (~Mask{0} >> (32 - n)); }

/// Literal axiom check on an arbitrary list of masks.
inline bool is_topology(int n, const Opens& fam) {
    std::set<Mask> s(fam.begin(), fam.end());
    if (!s.count(0) || !s.count(full(n))) {
        return false;
    }
    for (Mask a : s) {
        for (Mask b : s) {
            if (!s.count(a | b) || !s.count(a & b)) {
                return false;
            }
        }
    }
    return true;
}

/// Every family of subsets of {0..n-1}, filtered by the axioms. 2^(2^n)
/// candidates, so n <= 4.
inline std::vector<Opens> naive_topologies(int n) {
    const int subsets = 1 << n;
    std::vector<Opens> out;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << subsets); ++pick) {
        Opens fam;
        for (int m = 0; m < subsets; ++m) {
            if ((pick >> m) & 1u) {
                fam.push_back(static_cast<Mask>(m));
            }
        }
        if (is_topology(n, fam)) {
            out.push_back(fam);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Topologies as up-sets of preorders on the carrier. Independent of the
/// union/intersection view; fine up to n = 5.
inline std::vector<Opens> preorder_topologies(int n) {
    std::vector<std::pair<int, int>> offdiag;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) {
                offdiag.emplace_back(i, j);
            }
        }
    }
    std::set<Opens> seen;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << offdiag.size()); ++pick) {
        std::vector<Mask> up(static_cast<std::size_t>(n)); // up[i]: points above i
        for (int i = 0; i < n; ++i) {
            up[static_cast<std::size_t>(i)] = Mask{1} << i;
        }
        for (std::size_t k = 0; k < offdiag.size(); ++k) {
            if ((pick >> k) & 1u) {
                up[static_cast<std::size_t>(offdiag[k].first)] |= Mask{1} << offdiag[k].second;
            }
        }
        bool transitive = true;
        for (int i = 0; i < n && transitive; ++i) {
            for (int j = 0; j < n; ++j) {
                if (((up[static_cast<std::size_t>(i)] >> j) & 1u) &&
                    (up[static_cast<std::size_t>(j)] & ~up[static_cast<std::size_t>(i)]) != 0) {
                    transitive = false;
                    break;
                }
            }
        }
        if (!transitive) {
            continue;
        }
        Opens opens;
        for (Mask u = 0; u <= full(n); ++u) {
            bool upward = true;
            for (int i = 0; i < n; ++i) {
                if (((u >> i) & 1u) && (up[static_cast<std::size_t>(i)] & ~u) != 0) {
                    upward = false;
                }
            }
            if (upward) {
                opens.push_back(u);
            }
            if (u == full(n)) {
                break;
            }
        }
        seen.insert(opens);
    }
    return {seen.begin(), seen.end()};
}

inline Mask permute(Mask m, const std::vector<int>& perm) {
    Mask out = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if ((m >> i) & 1u) {
            out |= Mask{1} << perm[i];
        }
    }
    return out;
}

/// Orbit count under carrier permutations, by marking whole orbits.
inline std::size_t orbit_count(int n, const std::vector<Opens>& all) {
    std::set<Opens> marked;
    std::size_t orbits = 0;
    for (const Opens& t : all) {
        if (marked.count(t)) {
            continue;
        }
        ++orbits;
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            Opens img;
            for (Mask m : t) {
                img.push_back(permute(m, perm));
            }
            std::sort(img.begin(), img.end());
            marked.insert(img);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return orbits;
}

inline bool is_open(const Opens& t, Mask a) { return std::binary_search(t.begin(), t.end(), a); }

inline bool is_closed(int n, const Opens& t, Mask a) { return is_open(t, full(n) & ~a); }

inline Mask interior(const Opens& t, Mask a) {
    Mask out = 0;
    for (Mask u : t) {
        if ((u & ~a) == 0) {
            out |= u;
        }
    }
    return out;
}

/// Intersection of closed supersets.
inline Mask closure(int n, const Opens& t, Mask a) {
    Mask out = full(n);
    for (Mask u : t) {
        const Mask c = full(n) & ~u;
        if ((a & ~c) == 0) {
            out &= c;
        }
    }
    return out;
}

inline bool is_t1(int n, const Opens& t) {
    for (int p = 0; p < n; ++p) {
        if (!is_closed(n, t, Mask{1} << p)) {
            return false;
        }
    }
    return true;
}

inline bool is_t0(int n, const Opens& t) {
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            bool split = false;
            for (Mask u : t) {
                if (((u >> p) & 1u) != ((u >> q) & 1u)) {
                    split = true;
                }
            }
            if (!split) {
                return false;
            }
        }
    }
    return true;
}

/// Clopen count is 2 (or 1 on the empty carrier).
inline bool is_connected(int n, const Opens& t) {
    std::size_t clopen = 0;
    for (Mask u : t) {
        clopen += is_closed(n, t, u) ? 1 : 0;
    }
    return clopen == (n == 0 ? 1u : 2u);
}

inline bool is_continuous(const std::vector<int>& table, const Opens& dom, const Opens& cod) {
    for (Mask v : cod) {
        Mask pre = 0;
        for (std::size_t i = 0; i < table.size(); ++i) {
            if ((v >> table[i]) & 1u) {
                pre |= Mask{1} << i;
            }
        }
        if (!is_open(dom, pre)) {
            return false;
        }
    }
    return true;
}

/// Size of the smallest subfamily of `cover` whose union contains `target`,
/// by trying every subfamily. -1 if none.
inline int min_subcover_size(const std::vector<Mask>& cover, Mask target) {
    int best = -1;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << cover.size()); ++pick) {
        Mask u = 0;
        for (std::size_t i = 0; i < cover.size(); ++i) {
            if ((pick >> i) & 1u) {
                u |= cover[i];
            }
        }
        const int size = std::popcount(pick);
        if ((target & ~u) == 0 && (best < 0 || size < best)) {
            best = size;
        }
    }
    return best;
}

} // namespace oracle
