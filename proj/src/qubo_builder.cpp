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

#include "qroute/qubo_builder.hpp"

#include <algorithm>

#include "qroute/errors.hpp"
#include "qroute/routing.hpp"

namespace qroute {

std::string to_string(SlackEncoding s) { return s == SlackEncoding::Unary ? "unary" : "binary"; }

SlackEncoding slack_encoding_from_string(const std::string& s) {
    if (s == "unary") return SlackEncoding::Unary;
    if (s == "binary") return SlackEncoding::Binary;
    throw InvalidInput("unknown slack encoding '" + s + "'");
}

std::vector<long> slack_weights(long c_max, SlackEncoding encoding) {
    if (c_max < 0) throw InvalidInput("c_max must be non-negative");
    std::vector<long> w;
    if (encoding == SlackEncoding::Unary) {
        for (long k = 1; k <= c_max; ++k) w.push_back(k);
    } else {
        for (long weight = 1; weight - 1 < c_max; weight *= 2) w.push_back(weight);
    }
    return w;
}

std::size_t QuboLayout::path_var(std::size_t stream, std::size_t route) const {
    return stream_offsets.at(stream) + route;
}

std::vector<long> max_possible_loads(const NetworkInstance& net, const RouteTable& rt) {
    std::vector<long> loads(net.edges().size(), 0);
    for (std::size_t e = 0; e < rt.edge_index.size(); ++e) {
        std::size_t last_stream = static_cast<std::size_t>(-1);
        // edge_index lists refs in stream-major order, so repeats of a stream are adjacent
        for (const auto& ref : rt.edge_index[e]) {
            if (ref.stream == last_stream) continue;
            last_stream = ref.stream;
            loads[e] += net.streams()[ref.stream].rate;
        }
    }
    return loads;
}

QuboLayout plan_layout(const NetworkInstance& net, const RouteTable& rt, long c_max,
                       SlackEncoding slack) {
    if (rt.routes.size() != net.streams().size()) {
        throw InvalidInput("route table does not match the instance's streams");
    }
    QuboLayout layout;
    for (std::size_t s = 0; s < rt.routes.size(); ++s) {
        layout.stream_offsets.push_back(layout.var_meta.size());
        OneHotBlock block{s, {}};
        for (std::size_t k = 0; k < rt.routes[s].size(); ++k) {
            block.vars.push_back(layout.var_meta.size());
            layout.var_meta.emplace_back(PathVar{s, k});
        }
        layout.one_hot.push_back(std::move(block));
    }
    layout.num_path_vars = layout.var_meta.size();

    const auto weights = slack_weights(c_max, slack);
    const auto worst = max_possible_loads(net, rt);
    for (std::size_t e = 0; e < worst.size(); ++e) {
        if (worst[e] <= c_max) continue;
        CapacityBlock block{static_cast<EdgeId>(e), {}, c_max};
        for (const auto& ref : rt.edge_index[e]) {
            block.terms.emplace_back(layout.path_var(ref.stream, ref.route),
                                     net.streams()[ref.stream].rate);
        }
        for (std::size_t b = 0; b < weights.size(); ++b) {
            block.terms.emplace_back(layout.var_meta.size(), weights[b]);
            layout.var_meta.emplace_back(SlackVar{static_cast<int>(e), b, weights[b]});
        }
        layout.capacity.push_back(std::move(block));
    }
    return layout;
}

PenaltyWeights default_penalties(const NetworkInstance& net, const RouteTable& rt) {
    double spread = 0;
    double cheapest_max = 0;  // largest per-stream cheapest route cost
    double smallest = 0;
    for (std::size_t s = 0; s < rt.routes.size(); ++s) {
        if (rt.routes[s].empty()) continue;
        double lo = route_cost(net, rt, s, 0);
        double hi = lo;
        for (std::size_t k = 0; k < rt.routes[s].size(); ++k) {
            double c = route_cost(net, rt, s, k);
            lo = std::min(lo, c);
            hi = std::max(hi, c);
            if (c > 0 && (smallest == 0 || c < smallest)) smallest = c;
        }
        spread += hi - lo;
        cheapest_max = std::max(cheapest_max, lo);
    }
    // zero-length networks: any positive weight enforces the constraints
    const double fallback = smallest > 0 ? smallest : 1.0;
    PenaltyWeights w;
    w.capacity = spread > 0 ? kPenaltyMargin * spread : fallback;
    w.one_hot = spread + cheapest_max > 0 ? kPenaltyMargin * (spread + cheapest_max) : fallback;
    return w;
}

QuboProblem build_qubo(const NetworkInstance& net, const RouteTable& rt,
                       const QuboBuildOptions& options) {
    for (const auto& s : net.streams()) {
        if (s.rate > options.c_max) {
            throw InfeasibleInstance("stream from node " + std::to_string(s.source) + " has rate " +
                                     std::to_string(s.rate) + " above the link capacity");
        }
    }
    auto defaults = default_penalties(net, rt);
    PenaltyWeights lambda{options.lambda1.value_or(defaults.capacity),
                          options.lambda2.value_or(defaults.one_hot)};
    if (!(lambda.capacity > 0) || !(lambda.one_hot > 0)) {
        throw InvalidInput("penalty weights must be positive");
    }

    const auto layout = plan_layout(net, rt, options.c_max, options.slack);
    QuboProblem q(layout.var_meta.size());
    q.set_var_meta(layout.var_meta);
    q.set_penalties({lambda.capacity, lambda.one_hot, 0.0});

    // relay energy per route variable
    for (std::size_t e = 0; e < rt.edge_index.size(); ++e) {
        const double per_bit = net.edge_cost_per_bit(static_cast<EdgeId>(e));
        for (const auto& ref : rt.edge_index[e]) {
            const double bits = net.streams()[ref.stream].rate * net.delta_t();
            auto v = layout.path_var(ref.stream, ref.route);
            q.add(v, v, per_bit * bits);
        }
    }

    // lambda2 * (sum x - 1)^2
    for (const auto& block : layout.one_hot) {
        for (std::size_t a = 0; a < block.vars.size(); ++a) {
            q.add(block.vars[a], block.vars[a], -lambda.one_hot);
            for (std::size_t b = a + 1; b < block.vars.size(); ++b) {
                q.add(block.vars[a], block.vars[b], 2 * lambda.one_hot);
            }
        }
        q.add_offset(lambda.one_hot);
    }

    // lambda1 * (sum c_v v - rhs)^2
    for (const auto& block : layout.capacity) {
        const double rhs = static_cast<double>(block.rhs);
        for (std::size_t a = 0; a < block.terms.size(); ++a) {
            const auto [va, ca] = block.terms[a];
            const double c = static_cast<double>(ca);
            q.add(va, va, lambda.capacity * (c * c - 2 * rhs * c));
            for (std::size_t b = a + 1; b < block.terms.size(); ++b) {
                const auto [vb, cb] = block.terms[b];
                q.add(va, vb, lambda.capacity * 2 * c * static_cast<double>(cb));
            }
        }
        q.add_offset(lambda.capacity * rhs * rhs);
    }

    q.prune();
    return q;
}

Bits encode_assignment(const RouteTable& rt, const QuboLayout& layout,
                       const std::vector<std::size_t>& assignment) {
    if (assignment.size() != rt.routes.size()) throw InvalidInput("assignment size mismatch");
    Bits bits(layout.var_meta.size(), 0);
    for (std::size_t s = 0; s < assignment.size(); ++s) {
        bits[layout.path_var(s, assignment.at(s))] = 1;
    }
    for (const auto& block : layout.capacity) {
        long load = 0;
        std::vector<std::pair<std::size_t, long>> slack;
        for (const auto& [v, c] : block.terms) {
            if (std::holds_alternative<SlackVar>(layout.var_meta[v])) {
                slack.emplace_back(v, c);
            } else if (bits[v]) {
                load += c;
            }
        }
        long residual = std::max(0L, block.rhs - load);
        // greedy from the largest weight fills binary and unary registers exactly
        for (auto it = slack.rbegin(); it != slack.rend(); ++it) {
            if (it->second <= residual) {
                bits[it->first] = 1;
                residual -= it->second;
            }
        }
    }
    return bits;
}

}  // namespace qroute
