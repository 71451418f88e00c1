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

/// @file predicates.hpp
/// Space predicates by name, for enumeration filters and the command line.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "compactness.hpp"
#include "connectivity.hpp"
#include "separation.hpp"

namespace fintop {

/// Names in the order the command line reports them.
inline const std::vector<std::pair<std::string, SpacePredicate>>& named_predicates() {
    static const std::vector<std::pair<std::string, SpacePredicate>> table = {
        {"t0", [](const TopSpace& s) { return separation_report(s).t0; }},
        {"t1", [](const TopSpace& s) { return separation_report(s).t1; }},
        {"t2", [](const TopSpace& s) { return separation_report(s).t2; }},
        {"t3", [](const TopSpace& s) { return separation_report(s).t3; }},
        {"t4", [](const TopSpace& s) { return separation_report(s).t4; }},
        {"regular", [](const TopSpace& s) { return separation_report(s).regular; }},
        {"normal", [](const TopSpace& s) { return separation_report(s).normal; }},
        {"connected", [](const TopSpace& s) { return is_connected(s); }},
        {"compact", [](const TopSpace& s) { return is_compact(s); }},
        {"metrizable", [](const TopSpace& s) { return is_metrizable(s); }},
        {"locally-connected", [](const TopSpace& s) { return is_locally_connected(s); }},
        {"totally-disconnected", [](const TopSpace& s) { return is_totally_disconnected(s); }},
        {"locally-compact", [](const TopSpace& s) { return is_locally_compact(s); }},
        {"discrete", [](const TopSpace& s) { return s == discrete(s.carrier()); }},
        {"indiscrete", [](const TopSpace& s) { return s == indiscrete(s.carrier()); }},
    };
    return table;
}

inline std::optional<SpacePredicate> find_predicate(std::string_view name) {
    for (const auto& [key, fn] : named_predicates()) {
        if (key == name) {
            return fn;
        }
    }
    return std::nullopt;
}

} // namespace fintop
