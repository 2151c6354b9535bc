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
#include <vector>

#include "qroute/network.hpp"
#include "qroute/paths.hpp"

namespace qroute {

/// One selected route index per stream.
using Assignment = std::vector<std::size_t>;

struct CapacityCheck {
    std::vector<long> loads;  // per edge id, sum of rates routed over it
    bool feasible = true;
};

/// Total relay energy (J) of an assignment over one monitoring interval:
/// sum over edges of edge_cost_per_bit * (sum of rates routed over the edge) * delta_t.
double objective_energy(const NetworkInstance& net, const RouteTable& rt,
                        const Assignment& assignment);

/// Per-edge loads of an assignment; feasible iff every load is at most `c_max`.
CapacityCheck check_capacity(const NetworkInstance& net, const RouteTable& rt,
                             const Assignment& assignment, long c_max);

/// Relay energy of stream `stream` taking route `route` alone.
double route_cost(const NetworkInstance& net, const RouteTable& rt, std::size_t stream,
                  std::size_t route);

}  // namespace qroute
