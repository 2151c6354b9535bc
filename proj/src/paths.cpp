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

#include "qroute/paths.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "qroute/errors.hpp"

namespace qroute {

namespace {

constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> hop_distances(const NetworkInstance& net, std::size_t target) {
    std::vector<std::size_t> dist(net.num_nodes(), kUnreachable);
    std::deque<std::size_t> queue{target};
    dist[target] = 0;
    while (!queue.empty()) {
        auto at = queue.front();
        queue.pop_front();
        for (const auto& nb : net.neighbors(at)) {
            if (dist[nb.node] == kUnreachable) {
                dist[nb.node] = dist[at] + 1;
                queue.push_back(nb.node);
            }
        }
    }
    return dist;
}

class LevelSearch {
 public:
    LevelSearch(const NetworkInstance& net, std::size_t sink, const std::vector<std::size_t>& dist)
        : net_(net), sink_(sink), dist_(dist), on_path_(net.num_nodes(), false) {}

    std::vector<Path> paths_with_hops(std::size_t source, std::size_t hops) {
        found_.clear();
        nodes_.assign(1, source);
        edges_.clear();
        on_path_.assign(net_.num_nodes(), false);
        on_path_[source] = true;
        budget_ = hops;
        extend(source, 0.0);
        return std::move(found_);
    }

 private:
    void extend(std::size_t at, double length) {
        if (at == sink_) {
            if (edges_.size() == budget_) {
                Path p;
                p.nodes.reserve(nodes_.size());
                for (auto idx : nodes_) p.nodes.push_back(net_.nodes()[idx].id);
                p.edges = edges_;
                p.length = length;
                found_.push_back(std::move(p));
            }
            return;
        }
        for (const auto& nb : net_.neighbors(at)) {
            if (on_path_[nb.node]) continue;
            if (dist_[nb.node] == kUnreachable) continue;
            if (edges_.size() + 1 + dist_[nb.node] > budget_) continue;
            on_path_[nb.node] = true;
            nodes_.push_back(nb.node);
            edges_.push_back(nb.edge);
            extend(nb.node, length + net_.edges()[static_cast<std::size_t>(nb.edge)].length);
            edges_.pop_back();
            nodes_.pop_back();
            on_path_[nb.node] = false;
        }
    }

    const NetworkInstance& net_;
    std::size_t sink_;
    const std::vector<std::size_t>& dist_;
    std::vector<bool> on_path_;
    std::vector<std::size_t> nodes_;
    std::vector<EdgeId> edges_;
    std::vector<Path> found_;
    std::size_t budget_ = 0;
};

}  // namespace

std::size_t RouteTable::total_routes() const {
    std::size_t n = 0;
    for (const auto& r : routes) n += r.size();
    return n;
}

std::size_t RouteTable::path_id(RouteRef ref) const {
    std::size_t id = 0;
    for (std::size_t s = 0; s < ref.stream; ++s) id += routes[s].size();
    return id + ref.route;
}

RouteRef RouteTable::route_of(std::size_t path_id) const {
    for (std::size_t s = 0; s < routes.size(); ++s) {
        if (path_id < routes[s].size()) return {s, path_id};
        path_id -= routes[s].size();
    }
    throw InvalidInput("path id out of range");
}

RouteTable collect_paths(const NetworkInstance& net, std::size_t max_paths) {
    if (max_paths < 1) throw InvalidInput("need at least one path per stream");

    RouteTable rt;
    rt.max_paths = max_paths;
    rt.num_nodes = net.num_nodes();
    rt.edge_index.resize(net.edges().size());
    for (const auto& e : net.edges()) {
        auto a = net.index_of(e.u);
        auto b = net.index_of(e.v);
        rt.edge_endpoints.emplace_back(std::min(a, b), std::max(a, b));
    }

    const auto sink = net.index_of(net.sink());
    const auto dist = hop_distances(net, sink);
    LevelSearch search(net, sink, dist);

    for (const auto& stream : net.streams()) {
        const auto source = net.index_of(stream.source);
        if (dist[source] == kUnreachable) {
            throw InfeasibleInstance("no path from node " + std::to_string(stream.source) +
                                     " to the sink");
        }
        std::vector<Path> chosen;
        for (std::size_t hops = dist[source]; hops < net.num_nodes() && chosen.size() < max_paths;
             ++hops) {
            auto level = search.paths_with_hops(source, hops);
            std::sort(level.begin(), level.end(), [](const Path& a, const Path& b) {
                if (a.length != b.length) return a.length < b.length;
                return a.nodes < b.nodes;
            });
            for (auto& p : level) {
                if (chosen.size() == max_paths) break;
                chosen.push_back(std::move(p));
            }
        }
        rt.routes.push_back(std::move(chosen));
    }

    for (std::size_t s = 0; s < rt.routes.size(); ++s) {
        for (std::size_t k = 0; k < rt.routes[s].size(); ++k) {
            for (auto e : rt.routes[s][k].edges) {
                rt.edge_index[static_cast<std::size_t>(e)].push_back({s, k});
            }
        }
    }
    return rt;
}

std::size_t EdgePathMatrix::row_key(std::size_t i, std::size_t j, std::size_t num_nodes) {
    return i * num_nodes + j;
}

std::size_t EdgePathMatrix::column_of(std::size_t row, std::size_t path_id) const {
    auto it = rows.find(row);
    if (it == rows.end()) return 0;
    auto pos = std::find(it->second.begin(), it->second.end(), path_id);
    if (pos == it->second.end()) return 0;
    return static_cast<std::size_t>(pos - it->second.begin()) + 1;
}

EdgePathMatrix build_edge_index(const RouteTable& rt, std::size_t num_nodes) {
    EdgePathMatrix m;
    m.num_nodes = num_nodes;
    m.rows_of_path.resize(rt.total_routes());
    std::size_t pid = 0;
    for (const auto& stream_routes : rt.routes) {
        for (const auto& path : stream_routes) {
            for (auto e : path.edges) {
                auto [i, j] = rt.edge_endpoints.at(static_cast<std::size_t>(e));
                if (i >= num_nodes || j >= num_nodes) throw InvalidInput("node index exceeds N");
                auto row = EdgePathMatrix::row_key(i, j, num_nodes);
                m.rows[row].push_back(pid);
                m.rows_of_path[pid].push_back(row);
            }
            ++pid;
        }
    }
    return m;
}

}  // namespace qroute
