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

#include "carrier.hpp"
#include "compactness.hpp"
#include "connectivity.hpp"
#include "constructors.hpp"
#include "covers.hpp"
#include "enumeration.hpp"
#include "error.hpp"
#include "finite_map.hpp"
#include "io.hpp"
#include "maps.hpp"
#include "operators.hpp"
#include "predicates.hpp"
#include "separation.hpp"
#include "space.hpp"
#include "sweep.hpp"
