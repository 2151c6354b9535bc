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
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "qroute/energy.hpp"

namespace qroute {

using NodeId = int;
using EdgeId = int;

struct Position {
    double x = 0;
    double y = 0;
};

struct Node {
    NodeId id = 0;
    std::optional<Position> position;
};

/// Undirected link. Stored with u < v.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;
    double length = 0;  // meters
};

/// A packet stream from `source` to the sink. `rate` is in rate units per second;
/// bits carried per monitoring interval are rate * delta_t.
struct TrafficStream {
    NodeId source = 0;
    int rate = 1;
};

/// Input edge before lengths are resolved. A missing length is derived from node positions.
struct EdgeSpec {
    NodeId u = 0;
    NodeId v = 0;
    std::optional<double> length;
};

/// Neighbor entry in the adjacency list.
struct Adjacent {
    std::size_t node;  // node index, not id
    EdgeId edge;
};

/// Immutable routing problem input: a connected undirected geometric graph,
/// a single sink and a set of traffic streams.
///
/// Nodes are kept sorted by id; `index_of` maps an id to its position in `nodes()`.
/// Edge ids are positions in `edges()`, in input order.
class NetworkInstance {
 public:
    /// Validates and builds an instance. Throws InvalidInput on any violated invariant:
    /// duplicate ids, self-loops, duplicate undirected edges, disconnected graph,
    /// unknown sink or stream source, non-positive rates, a stream sourced at the sink,
    /// or an explicit length that disagrees with node positions.
    static NetworkInstance create(std::vector<Node> nodes, std::span<const EdgeSpec> edges,
                                  NodeId sink, std::vector<TrafficStream> streams,
                                  double delta_t = 1.0, EnergyParams energy = {});

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<TrafficStream>& streams() const { return streams_; }
    NodeId sink() const { return sink_; }
    double delta_t() const { return delta_t_; }
    const EnergyParams& energy() const { return energy_; }

    std::size_t num_nodes() const { return nodes_.size(); }
    std::size_t index_of(NodeId id) const;
    bool has_node(NodeId id) const;

    /// Neighbors of the node at `index`, ascending by neighbor id.
    const std::vector<Adjacent>& neighbors(std::size_t index) const { return adjacency_[index]; }

    /// Relay cost of one bit over `edge` (J/bit).
    double edge_cost_per_bit(EdgeId edge) const;

 private:
    NetworkInstance() = default;

    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::vector<TrafficStream> streams_;
    std::vector<std::vector<Adjacent>> adjacency_;
    std::vector<double> edge_cost_;
    NodeId sink_ = 0;
    double delta_t_ = 1.0;
    EnergyParams energy_;
};

nlohmann::json to_json(const NetworkInstance& net);
NetworkInstance instance_from_json(const nlohmann::json& j);

NetworkInstance load_instance(const std::string& path);
void save_instance(const NetworkInstance& net, const std::string& path);

}  // namespace qroute
