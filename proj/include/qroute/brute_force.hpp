// Copyright 2026 The qroute Authors.
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstddef>

#include "qroute/network.hpp"
#include "qroute/paths.hpp"
#include "qroute/routing.hpp"

namespace qroute {

inline constexpr std::size_t kMaxRouteCombinations = 10'000'000;

struct RouteOptimum {
    bool feasible = false;
    Assignment assignment;  // first optimum in mixed-radix order (stream 0 fastest)
    double objective = 0;
    std::size_t evaluated = 0;
};

/// Exhaustive search over all route combinations: keeps capacity-feasible ones and
/// returns the minimum relay energy. Throws InvalidInput above kMaxRouteCombinations.
RouteOptimum brute_force_route(const NetworkInstance& net, const RouteTable& rt, long c_max);

}  // namespace qroute
