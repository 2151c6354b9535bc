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
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qroute/network.hpp"

namespace qroute {

/// A generated routing instance plus the sweep coordinates it belongs to.
struct GeneratedInstance {
    std::string id;
    std::size_t graph_size = 0;
    std::optional<double> edge_prob;  // unset for exhaustive graphs
    std::uint64_t seed = 0;           // per-instance stream, also seeds the sampler
    NetworkInstance net;

    std::size_t source_count() const { return net.streams().size(); }
};

using EdgeList = std::vector<std::pair<int, int>>;

/// Every labeled connected simple graph on nodes 0..n-1, in increasing edge-mask order.
std::vector<EdgeList> connected_graphs(std::size_t n);

/// Placement square side (m) for generated node coordinates.
inline constexpr double kPlacementSide = 100.0;

/// Derives an independent 64-bit seed from a master seed and a tuple of labels.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> labels);

struct ExhaustiveOptions {
    /// Unset: every source gets `fixed_rate`. Set: rates drawn uniformly on 1..r_max.
    bool random_rates = false;
    int fixed_rate = 3;
    int r_max = 5;
    std::uint64_t seed = 0;  // node placement (and rates when random)
    double delta_t = 1.0;
};

/// All connected labeled graphs on n nodes (n <= 5), sink fixed to node n-1, and every
/// nonempty subset of the remaining nodes as the source set. Node coordinates are drawn
/// once per graph. Throws InvalidInput for n > 5 or n < 2.
std::vector<GeneratedInstance> gen_exhaustive(std::size_t n, const ExhaustiveOptions& opt = {});

struct ErdosRenyiOptions {
    int r_max = 5;
    double delta_t = 1.0;
    std::size_t max_rejections = 1000;
};

/// `count` connected G(n, p) samples. Node n-1 is the sink; coordinates are uniform in
/// the placement square. Each other node draws u ~ U(0, 1) from one generator and, when
/// u > 0.5, becomes a source with rate uniform on 1..r_max from a second generator. A
/// draw with no source at all is repeated. Throws InvalidInput after `max_rejections`
/// consecutive disconnected graphs.
std::vector<GeneratedInstance> gen_erdos_renyi(std::size_t n, double p, std::size_t count,
                                               std::uint64_t seed,
                                               const ErdosRenyiOptions& opt = {});

}  // namespace qroute
