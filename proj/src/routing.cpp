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

#include "qroute/routing.hpp"

#include "qroute/errors.hpp"

namespace qroute {

namespace {

void check_assignment(const NetworkInstance& net, const RouteTable& rt, const Assignment& a) {
    if (a.size() != net.streams().size() || rt.routes.size() != net.streams().size()) {
        throw InvalidInput("assignment must select exactly one route per stream");
    }
    for (std::size_t s = 0; s < a.size(); ++s) {
        if (a[s] >= rt.routes[s].size()) throw InvalidInput("route index out of range");
    }
}

std::vector<long> edge_loads(const NetworkInstance& net, const RouteTable& rt,
                             const Assignment& a) {
    std::vector<long> loads(net.edges().size(), 0);
    for (std::size_t s = 0; s < a.size(); ++s) {
        for (auto e : rt.routes[s][a[s]].edges) {
            loads[static_cast<std::size_t>(e)] += net.streams()[s].rate;
        }
    }
    return loads;
}

}  // namespace

double objective_energy(const NetworkInstance& net, const RouteTable& rt,
                        const Assignment& assignment) {
    check_assignment(net, rt, assignment);
    auto loads = edge_loads(net, rt, assignment);
    double total = 0;
    for (std::size_t e = 0; e < loads.size(); ++e) {
        if (loads[e] == 0) continue;
        total += net.edge_cost_per_bit(static_cast<EdgeId>(e)) *
                 (static_cast<double>(loads[e]) * net.delta_t());
    }
    return total;
}

CapacityCheck check_capacity(const NetworkInstance& net, const RouteTable& rt,
                             const Assignment& assignment, long c_max) {
    check_assignment(net, rt, assignment);
    CapacityCheck out;
    out.loads = edge_loads(net, rt, assignment);
    for (auto load : out.loads) {
        if (load > c_max) out.feasible = false;
    }
    return out;
}

double route_cost(const NetworkInstance& net, const RouteTable& rt, std::size_t stream,
                  std::size_t route) {
    const auto& path = rt.routes.at(stream).at(route);
    double bits = net.streams().at(stream).rate * net.delta_t();
    double total = 0;
    for (auto e : path.edges) total += net.edge_cost_per_bit(e) * bits;
    return total;
}

}  // namespace qroute
