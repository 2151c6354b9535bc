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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qroute/network.hpp"
#include "qroute/paths.hpp"
#include "qroute/qubo.hpp"

namespace qroute {

enum class SlackEncoding { Unary, Binary };

std::string to_string(SlackEncoding s);
SlackEncoding slack_encoding_from_string(const std::string& s);

/// Slack register weights covering residuals 0..c_max.
/// Unary: weights 1, 2, ..., c_max (one bit per residual value).
/// Binary: weights 1, 2, 4, ... with ceil(log2(c_max + 1)) bits.
std::vector<long> slack_weights(long c_max, SlackEncoding encoding);

/// sum_i x_i = 1 over the route variables of one stream.
struct OneHotBlock {
    std::size_t stream = 0;
    std::vector<std::size_t> vars;
};

/// sum_i coeff_i * v_i = c_max over route variables (coeff = stream rate) and slack bits
/// (coeff = slack weight), for one edge whose worst-case load exceeds c_max.
struct CapacityBlock {
    EdgeId edge = 0;
    std::vector<std::pair<std::size_t, long>> terms;
    long rhs = 0;
};

/// Variable layout and constraint blocks for an instance, before any coefficients.
/// Route variables come first (stream-major, route order), then slack registers in
/// ascending edge id.
struct QuboLayout {
    std::vector<VarMeta> var_meta;
    std::vector<OneHotBlock> one_hot;
    std::vector<CapacityBlock> capacity;
    std::size_t num_path_vars = 0;
    /// Variable index of route `route` of stream `stream`.
    std::size_t path_var(std::size_t stream, std::size_t route) const;
    std::vector<std::size_t> stream_offsets;
};

/// Worst-case load per edge: sum of rates of streams with at least one candidate
/// route through the edge.
std::vector<long> max_possible_loads(const NetworkInstance& net, const RouteTable& rt);

QuboLayout plan_layout(const NetworkInstance& net, const RouteTable& rt, long c_max,
                       SlackEncoding slack);

struct PenaltyWeights {
    double capacity = 0;  // lambda1
    double one_hot = 0;   // lambda2
};

/// Factor by which default penalty weights exceed their exactness bounds.
inline constexpr double kPenaltyMargin = 1.1;

/// Default penalty weights. With S the sum over streams of (costliest - cheapest route)
/// and m the largest cheapest-route cost of any stream, lambda1 = margin * S and
/// lambda2 = margin * (S + m). Overloading an edge by one unit costs at least lambda1
/// and dropping a stream saves at most S + m, so every violation lands above the
/// feasible optimum.
PenaltyWeights default_penalties(const NetworkInstance& net, const RouteTable& rt);

struct QuboBuildOptions {
    long c_max = 5;
    SlackEncoding slack = SlackEncoding::Binary;
    std::optional<double> lambda1;
    std::optional<double> lambda2;
};

/// Compiles the routing problem into a one-hot QUBO: linear energy terms on route
/// variables, lambda2 * (sum x - 1)^2 per stream and
/// lambda1 * (sum rate * x + slack - c_max)^2 per congestible edge.
/// Throws InfeasibleInstance if a stream's rate alone exceeds c_max.
QuboProblem build_qubo(const NetworkInstance& net, const RouteTable& rt,
                       const QuboBuildOptions& options = {});

/// Encodes a route assignment (plus slack set to each constrained edge's residual)
/// as a bit vector over the layout's variables.
Bits encode_assignment(const RouteTable& rt, const QuboLayout& layout,
                       const std::vector<std::size_t>& assignment);

}  // namespace qroute
