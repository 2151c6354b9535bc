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

#include "qroute/brute_force.hpp"

#include "qroute/errors.hpp"

namespace qroute {

RouteOptimum brute_force_route(const NetworkInstance& net, const RouteTable& rt, long c_max) {
    std::size_t combos = 1;
    for (const auto& routes : rt.routes) {
        if (routes.empty()) return {};
        combos *= routes.size();
        if (combos > kMaxRouteCombinations) {
            throw InvalidInput("too many route combinations for exhaustive search");
        }
    }

    RouteOptimum best;
    Assignment a(rt.routes.size(), 0);
    for (std::size_t n = 0; n < combos; ++n) {
        ++best.evaluated;
        if (check_capacity(net, rt, a, c_max).feasible) {
            double e = objective_energy(net, rt, a);
            if (!best.feasible || e < best.objective) {
                best.feasible = true;
                best.objective = e;
                best.assignment = a;
            }
        }
        for (std::size_t s = 0; s < a.size(); ++s) {
            if (++a[s] < rt.routes[s].size()) break;
            a[s] = 0;
        }
    }
    return best;
}

}  // namespace qroute
