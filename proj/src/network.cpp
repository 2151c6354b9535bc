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

#include "qroute/network.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <utility>

#include "qroute/errors.hpp"

namespace qroute {

namespace {

std::string node_str(NodeId id) { return std::to_string(id); }

}  // namespace

NetworkInstance NetworkInstance::create(std::vector<Node> nodes, std::span<const EdgeSpec> edges,
                                        NodeId sink, std::vector<TrafficStream> streams,
                                        double delta_t, EnergyParams energy) {
    NetworkInstance net;
    if (nodes.empty()) throw InvalidInput("network has no nodes");
    if (!(delta_t > 0)) throw InvalidInput("delta_t must be positive");
    if (!(energy.e_elec >= 0 && energy.eps_fs > 0 && energy.eps_mp > 0)) {
        throw InvalidInput("energy parameters must be positive");
    }

    std::sort(nodes.begin(), nodes.end(),
              [](const Node& a, const Node& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        if (nodes[i].id == nodes[i - 1].id) {
            throw InvalidInput("duplicate node id " + node_str(nodes[i].id));
        }
    }
    net.nodes_ = std::move(nodes);
    net.sink_ = sink;
    net.delta_t_ = delta_t;
    net.energy_ = energy;

    if (!net.has_node(sink)) throw InvalidInput("sink " + node_str(sink) + " is not a node");

    std::set<std::pair<NodeId, NodeId>> seen;
    net.adjacency_.resize(net.nodes_.size());
    for (const auto& spec : edges) {
        if (!net.has_node(spec.u) || !net.has_node(spec.v)) {
            throw InvalidInput("edge references unknown node");
        }
        if (spec.u == spec.v) throw InvalidInput("self-loop on node " + node_str(spec.u));
        Edge e{std::min(spec.u, spec.v), std::max(spec.u, spec.v), 0.0};
        if (!seen.emplace(e.u, e.v).second) {
            throw InvalidInput("duplicate edge " + node_str(e.u) + "-" + node_str(e.v));
        }

        const auto& pu = net.nodes_[net.index_of(e.u)].position;
        const auto& pv = net.nodes_[net.index_of(e.v)].position;
        std::optional<double> geometric;
        if (pu && pv) geometric = std::hypot(pu->x - pv->x, pu->y - pv->y);

        if (spec.length) {
            if (!(*spec.length >= 0) || !std::isfinite(*spec.length)) {
                throw InvalidInput("edge length must be finite and non-negative");
            }
            if (geometric && std::abs(*spec.length - *geometric) >
                                 1e-9 * std::max({1.0, *geometric, *spec.length})) {
                throw InvalidInput("edge length disagrees with node positions on edge " +
                                   node_str(e.u) + "-" + node_str(e.v));
            }
            e.length = geometric ? *geometric : *spec.length;
        } else if (geometric) {
            e.length = *geometric;
        } else {
            throw InvalidInput("edge " + node_str(e.u) + "-" + node_str(e.v) +
                               " has neither a length nor endpoint positions");
        }

        auto id = static_cast<EdgeId>(net.edges_.size());
        net.edges_.push_back(e);
        net.adjacency_[net.index_of(e.u)].push_back({net.index_of(e.v), id});
        net.adjacency_[net.index_of(e.v)].push_back({net.index_of(e.u), id});
    }
    // Index order equals id order, so sorting by index sorts by id.
    for (auto& adj : net.adjacency_) {
        std::sort(adj.begin(), adj.end(),
                  [](const Adjacent& a, const Adjacent& b) { return a.node < b.node; });
    }

    // connectivity
    std::vector<bool> reached(net.nodes_.size(), false);
    std::vector<std::size_t> stack{0};
    reached[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        auto at = stack.back();
        stack.pop_back();
        for (const auto& nb : net.adjacency_[at]) {
            if (!reached[nb.node]) {
                reached[nb.node] = true;
                ++count;
                stack.push_back(nb.node);
            }
        }
    }
    if (count != net.nodes_.size()) throw InvalidInput("network graph is not connected");

    for (const auto& s : streams) {
        if (!net.has_node(s.source)) {
            throw InvalidInput("stream source " + node_str(s.source) + " is not a node");
        }
        if (s.source == sink) throw InvalidInput("stream source equals the sink");
        if (s.rate <= 0) throw InvalidInput("stream rate must be positive");
    }
    net.streams_ = std::move(streams);

    net.edge_cost_.reserve(net.edges_.size());
    for (const auto& e : net.edges_) {
        net.edge_cost_.push_back(edge_energy_per_bit(e.length, net.energy_));
    }
    return net;
}

bool NetworkInstance::has_node(NodeId id) const {
    return std::binary_search(nodes_.begin(), nodes_.end(), Node{id, std::nullopt},
                              [](const Node& a, const Node& b) { return a.id < b.id; });
}

std::size_t NetworkInstance::index_of(NodeId id) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id,
                               [](const Node& n, NodeId value) { return n.id < value; });
    if (it == nodes_.end() || it->id != id) throw InvalidInput("unknown node " + node_str(id));
    return static_cast<std::size_t>(it - nodes_.begin());
}

double NetworkInstance::edge_cost_per_bit(EdgeId edge) const {
    return edge_cost_.at(static_cast<std::size_t>(edge));
}

nlohmann::json to_json(const NetworkInstance& net) {
    nlohmann::json j;
    j["nodes"] = nlohmann::json::array();
    for (const auto& n : net.nodes()) {
        nlohmann::json node{{"id", n.id}};
        if (n.position) {
            node["x"] = n.position->x;
            node["y"] = n.position->y;
        }
        j["nodes"].push_back(node);
    }
    j["edges"] = nlohmann::json::array();
    for (const auto& e : net.edges()) {
        j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"len", e.length}});
    }
    j["sink"] = net.sink();
    j["streams"] = nlohmann::json::array();
    for (const auto& s : net.streams()) {
        j["streams"].push_back({{"source", s.source}, {"rate", s.rate}});
    }
    j["delta_t"] = net.delta_t();
    const auto& p = net.energy();
    j["energy"] = {{"e_elec", p.e_elec}, {"eps_fs", p.eps_fs}, {"eps_mp", p.eps_mp}};
    return j;
}

NetworkInstance instance_from_json(const nlohmann::json& j) {
    try {
        std::vector<Node> nodes;
        for (const auto& n : j.at("nodes")) {
            Node node{n.at("id").get<NodeId>(), std::nullopt};
            if (n.contains("x") || n.contains("y")) {
                node.position = Position{n.at("x").get<double>(), n.at("y").get<double>()};
            }
            nodes.push_back(node);
        }
        std::vector<EdgeSpec> edges;
        for (const auto& e : j.at("edges")) {
            EdgeSpec spec{e.at("u").get<NodeId>(), e.at("v").get<NodeId>(), std::nullopt};
            if (e.contains("len")) spec.length = e.at("len").get<double>();
            edges.push_back(spec);
        }
        std::vector<TrafficStream> streams;
        for (const auto& s : j.at("streams")) {
            streams.push_back({s.at("source").get<NodeId>(), s.at("rate").get<int>()});
        }
        EnergyParams energy;
        if (j.contains("energy")) {
            const auto& p = j.at("energy");
            energy.e_elec = p.value("e_elec", energy.e_elec);
            energy.eps_fs = p.value("eps_fs", energy.eps_fs);
            energy.eps_mp = p.value("eps_mp", energy.eps_mp);
        }
        return NetworkInstance::create(std::move(nodes), edges, j.at("sink").get<NodeId>(),
                                       std::move(streams), j.value("delta_t", 1.0), energy);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed instance JSON: ") + e.what());
    }
}

NetworkInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput("cannot parse " + path + ": " + e.what());
    }
    return instance_from_json(j);
}

void save_instance(const NetworkInstance& net, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    out << to_json(net).dump(2) << '\n';
}

}  // namespace qroute
