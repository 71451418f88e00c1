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

// Shared fixtures for the unit tests.

#pragma once

#include <functional>
#include <initializer_list>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "fintop/fintop.hpp"

namespace fintop {

inline PointSet set(int n, std::initializer_list<int> points) { return PointSet::of(n, points); }

inline Family fam(int n, std::initializer_list<std::initializer_list<int>> members) {
    std::vector<PointSet> out;
    for (auto m : members) {
        out.push_back(PointSet::of(n, m));
    }
    return Family(n, std::move(out));
}

inline TopSpace space(int n, std::initializer_list<std::initializer_list<int>> opens) {
    return make_space(fam(n, opens));
}

/// Sierpinski space with the open point at 0 instead of 1.
inline TopSpace mirror_sierpinski() { return space(2, {{}, {0}, {0, 1}}); }

inline void expect_error(ErrorKind kind, const std::function<void()>& fn) {
    try {
        fn();
        ADD_FAILURE() << "expected " << to_string(kind);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), kind) << e.what();
    }
}

inline std::vector<Mask> masks_of(const Family& f) {
    std::vector<Mask> out;
    for (PointSet a : f) {
        out.push_back(a.bits());
    }
    return out;
}

} // namespace fintop
