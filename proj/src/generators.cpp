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

#include "qroute/generators.hpp"

#include <bit>
#include <cmath>
#include <random>

#include "qroute/errors.hpp"

namespace qroute {

namespace {

bool is_connected(std::size_t n, const EdgeList& edges) {
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = n;
    for (auto [u, v] : edges) {
        auto a = find(static_cast<std::size_t>(u));
        auto b = find(static_cast<std::size_t>(v));
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components == 1;
}

std::vector<Node> place_nodes(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(0.0, kPlacementSide);
    std::vector<Node> nodes;
    for (std::size_t i = 0; i < n; ++i) {
        double x = coord(rng);
        double y = coord(rng);
        nodes.push_back({static_cast<NodeId>(i), Position{x, y}});
    }
    return nodes;
}

std::vector<EdgeSpec> to_specs(const EdgeList& edges) {
    std::vector<EdgeSpec> specs;
    for (auto [u, v] : edges) specs.push_back({u, v, std::nullopt});
    return specs;
}

std::string format_prob(double p) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", p);
    return buf;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> labels) {
    std::vector<std::uint32_t> words{static_cast<std::uint32_t>(master),
                                     static_cast<std::uint32_t>(master >> 32)};
    for (auto l : labels) {
        words.push_back(static_cast<std::uint32_t>(l));
        words.push_back(static_cast<std::uint32_t>(l >> 32));
    }
    std::seed_seq seq(words.begin(), words.end());
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

std::vector<EdgeList> connected_graphs(std::size_t n) {
    if (n < 1 || n > 7) throw InvalidInput("connected graph enumeration supports 1..7 nodes");
    EdgeList all;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) all.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::vector<EdgeList> out;
    const std::uint64_t masks = std::uint64_t{1} << all.size();
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        if (std::popcount(mask) + 1 < static_cast<int>(n)) continue;
        EdgeList edges;
        for (std::size_t b = 0; b < all.size(); ++b) {
            if (mask >> b & 1) edges.push_back(all[b]);
        }
        if (is_connected(n, edges)) out.push_back(std::move(edges));
    }
    return out;
}

std::vector<GeneratedInstance> gen_exhaustive(std::size_t n, const ExhaustiveOptions& opt) {
    if (n > 5) throw InvalidInput("exhaustive generation is limited to graphs of at most 5 nodes");
    if (n < 2) throw InvalidInput("exhaustive generation needs at least 2 nodes");
    if (opt.fixed_rate < 1 || opt.r_max < 1) throw InvalidInput("rates must be positive");

    const auto graphs = connected_graphs(n);
    const auto sink = static_cast<NodeId>(n - 1);
    std::vector<GeneratedInstance> out;
    for (std::size_t g = 0; g < graphs.size(); ++g) {
        std::mt19937_64 place_rng(derive_seed(opt.seed, {0x6578, n, g}));
        const auto nodes = place_nodes(n, place_rng);
        const auto specs = to_specs(graphs[g]);
        for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << (n - 1)); ++subset) {
            const auto seed = derive_seed(opt.seed, {0x6579, n, g, subset});
            std::mt19937_64 rate_rng(seed);
            std::uniform_int_distribution<int> rate(1, opt.r_max);
            std::vector<TrafficStream> streams;
            for (std::size_t v = 0; v + 1 < n; ++v) {
                if (subset >> v & 1) {
                    streams.push_back(
                        {static_cast<NodeId>(v), opt.random_rates ? rate(rate_rng) : opt.fixed_rate});
                }
            }
            GeneratedInstance inst{
                "ex-n" + std::to_string(n) + "-g" + std::to_string(g) + "-s" + std::to_string(subset),
                n, std::nullopt, seed,
                NetworkInstance::create(nodes, specs, sink, std::move(streams), opt.delta_t)};
            out.push_back(std::move(inst));
        }
    }
    return out;
}

std::vector<GeneratedInstance> gen_erdos_renyi(std::size_t n, double p, std::size_t count,
                                               std::uint64_t seed, const ErdosRenyiOptions& opt) {
    if (n < 2) throw InvalidInput("Erdos-Renyi graphs need at least 2 nodes");
    if (!(p > 0 && p <= 1)) throw InvalidInput("edge probability must be in (0, 1]");
    if (opt.r_max < 1) throw InvalidInput("r_max must be positive");

    const auto p_label = static_cast<std::uint64_t>(std::llround(p * 1e6));
    const auto sink = static_cast<NodeId>(n - 1);
    std::vector<GeneratedInstance> out;
    for (std::size_t k = 0; k < count; ++k) {
        const auto inst_seed = derive_seed(seed, {0x4552, n, p_label, k});
        std::mt19937_64 graph_rng(derive_seed(inst_seed, {1}));
        std::mt19937_64 place_rng(derive_seed(inst_seed, {2}));
        std::mt19937_64 source_rng(derive_seed(inst_seed, {3}));
        std::mt19937_64 rate_rng(derive_seed(inst_seed, {4}));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::uniform_int_distribution<int> rate(1, opt.r_max);

        EdgeList edges;
        std::size_t rejected = 0;
        while (true) {
            edges.clear();
            for (std::size_t u = 0; u < n; ++u) {
                for (std::size_t v = u + 1; v < n; ++v) {
                    if (unit(graph_rng) < p) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
                }
            }
            if (is_connected(n, edges)) break;
            if (++rejected >= opt.max_rejections) {
                throw InvalidInput("no connected G(" + std::to_string(n) + ", " + format_prob(p) +
                                   ") sample after " + std::to_string(rejected) + " attempts");
            }
        }

        auto nodes = place_nodes(n, place_rng);
        std::vector<TrafficStream> streams;
        while (streams.empty()) {
            for (std::size_t v = 0; v + 1 < n; ++v) {
                if (unit(source_rng) > 0.5) streams.push_back({static_cast<NodeId>(v), rate(rate_rng)});
            }
        }

        GeneratedInstance inst{"er-n" + std::to_string(n) + "-p" + format_prob(p) + "-i" + std::to_string(k),
                               n, p, inst_seed,
                               NetworkInstance::create(std::move(nodes), to_specs(edges), sink,
                                                       std::move(streams), opt.delta_t)};
        out.push_back(std::move(inst));
    }
    return out;
}

}  // namespace qroute
