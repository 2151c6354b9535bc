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
#include <map>
#include <utility>
#include <vector>

#include "qroute/network.hpp"

namespace qroute {

/// Simple path from a stream source to the sink.
struct Path {
    std::vector<NodeId> nodes;  // source first, sink last
    std::vector<EdgeId> edges;  // edges[i] joins nodes[i] and nodes[i + 1]
    double length = 0;          // meters

    std::size_t hops() const { return edges.size(); }
    bool operator==(const Path&) const = default;
};

struct RouteRef {
    std::size_t stream = 0;
    std::size_t route = 0;
    bool operator==(const RouteRef&) const = default;
    auto operator<=>(const RouteRef&) const = default;
};

/// Candidate routes per stream plus the inverted edge -> routes index.
struct RouteTable {
    std::size_t max_paths = 0;                 // K
    std::vector<std::vector<Path>> routes;     // routes[stream][k]
    std::vector<std::vector<RouteRef>> edge_index;  // edge id -> routes through it
    std::size_t num_nodes = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edge_endpoints;  // node indices, first < second

    std::size_t num_streams() const { return routes.size(); }
    std::size_t total_routes() const;
    /// Consecutive path id (stream-major) as assigned during collection.
    std::size_t path_id(RouteRef ref) const;
    RouteRef route_of(std::size_t path_id) const;
};

/// Collects up to `max_paths` simple source->sink paths per stream.
///
/// Paths are ranked by hop count, then total length, then lexicographic node-id
/// sequence, and the first `max_paths` are kept. Enumeration proceeds level by level
/// in hop count, so only the levels needed to fill `max_paths` are explored.
/// Fewer paths are returned only when fewer simple paths exist.
RouteTable collect_paths(const NetworkInstance& net, std::size_t max_paths);

/// Flattened edge/path matrix. Row key for the edge joining node indices (i, j), i < j,
/// is i * N + j; each row lists the ids of the paths traversing that edge in
/// ascending path-id order, so the path in column k (1-based) is row[k - 1].
struct EdgePathMatrix {
    std::size_t num_nodes = 0;
    std::map<std::size_t, std::vector<std::size_t>> rows;
    std::vector<std::vector<std::size_t>> rows_of_path;  // inverse lookup

    static std::size_t row_key(std::size_t i, std::size_t j, std::size_t num_nodes);
    /// 1-based column of `path_id` in `row`, or 0 if the path does not use that edge.
    std::size_t column_of(std::size_t row, std::size_t path_id) const;
};

EdgePathMatrix build_edge_index(const RouteTable& rt, std::size_t num_nodes);

}  // namespace qroute
