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

// Small tour of the library API.

#include <iostream>

#include "fintop/fintop.hpp"

int main() {
    using namespace fintop;

    const TopSpace s = sierpinski();
    const PointSet one = PointSet::singleton(2, 1);
    std::cout << "space:    " << emit_space(s) << '\n';
    std::cout << "cl{1}:    " << to_string(closure(s, one)) << '\n';
    std::cout << "int{0}:   " << to_string(interior(s, PointSet::singleton(2, 0))) << '\n';

    const SeparationReport sep = separation_report(s);
    std::cout << "t0 t1:    " << sep.t0 << ' ' << sep.t1 << '\n';

    const TopSpace x = alexandroff(s);
    std::cout << "one-point compactification: " << emit_space(x) << '\n';

    std::cout << "topologies on 4 points: " << count_topologies(4) << '\n';
    std::cout << "up to homeomorphism:    "
              << count_topologies(4, {}, EnumMode::up_to_homeomorphism) << '\n';

    const FiniteMap swap(2, 2, {1, 0});
    std::cout << "swap continuous: " << is_continuous(swap, s, s) << '\n';
    return 0;
}
