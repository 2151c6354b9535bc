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

// Shared fixtures and independent reference implementations for the test suites.
// Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "qroute/network.hpp"
#include "qroute/qubo.hpp"

namespace qroute::testing {

/// The six-node example network: sink 6, streams from nodes 1 and 3.
/// Edge ids 0..5 are the example's edges 1..6: (1,2) (2,6) (2,3) (4,5) (3,4) (4,6).
inline NetworkInstance example_network(int r1 = 3, int r3 = 3) {
    std::vector<Node> nodes{{1, Position{0, 50}},  {2, Position{40, 50}}, {3, Position{40, 20}},
                            {4, Position{85, 15}}, {5, Position{100, 0}}, {6, Position{80, 50}}};
    std::vector<EdgeSpec> edges{{1, 2, {}}, {2, 6, {}}, {2, 3, {}},
                                {4, 5, {}}, {3, 4, {}}, {4, 6, {}}};
    return NetworkInstance::create(nodes, edges, 6, {{1, r1}, {3, r3}});
}

/// Straight evaluation of offset + sum Q[i,j] b_i b_j from the entry map.
inline double naive_energy(const QuboProblem& q, const Bits& bits) {
    double e = q.offset();
    for (const auto& [key, c] : q.entries()) {
        if (bits[key.first] && bits[key.second]) e += c;
    }
    return e;
}

inline Bits bits_of(std::uint64_t mask, std::size_t n) {
    Bits b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = static_cast<std::uint8_t>((mask >> i) & 1);
    return b;
}

/// Every energy of a small problem, indexed by bit mask (bit i of the mask is b_i).
inline std::vector<double> spectrum(const QuboProblem& q) {
    const auto n = q.num_variables();
    std::vector<double> out(std::size_t{1} << n);
    for (std::uint64_t m = 0; m < out.size(); ++m) out[m] = naive_energy(q, bits_of(m, n));
    return out;
}

/// Depth-first minimum search, independent of any Gray-code enumeration.
inline double recursive_min(const QuboProblem& q) {
    const auto n = q.num_variables();
    Bits bits(n, 0);
    double best = std::numeric_limits<double>::infinity();
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            best = std::min(best, naive_energy(q, bits));
            return;
        }
        bits[i] = 0;
        rec(i + 1);
        bits[i] = 1;
        rec(i + 1);
    };
    rec(0);
    return best;
}

/// Random problem with integer-valued coefficients in [-range, range], so sums are exact.
inline QuboProblem random_qubo(std::mt19937_64& rng, std::size_t n, double density = 0.5,
                               int range = 10) {
    QuboProblem q(n);
    std::uniform_int_distribution<int> coeff(-range, range);
    std::bernoulli_distribution keep(density);
    for (std::size_t i = 0; i < n; ++i) {
        q.add(i, i, coeff(rng));
        for (std::size_t j = i + 1; j < n; ++j) {
            if (keep(rng)) q.add(i, j, coeff(rng));
        }
    }
    q.add_offset(coeff(rng));
    q.prune();
    return q;
}

/// Random connected geometric instance on nodes 1..n with sink n: a random spanning
/// tree plus extra edges, coordinates in a 100 m square, `streams` distinct sources.
inline NetworkInstance random_instance(std::mt19937_64& rng, int n, int streams, int max_rate,
                                       double extra_edge_prob = 0.4) {
    std::uniform_real_distribution<double> coord(0.0, 100.0);
    std::vector<Node> nodes;
    for (int i = 1; i <= n; ++i) nodes.push_back({i, Position{coord(rng), coord(rng)}});
    std::vector<std::vector<bool>> adj(n + 1, std::vector<bool>(n + 1, false));
    std::vector<EdgeSpec> edges;
    for (int v = 2; v <= n; ++v) {
        int u = std::uniform_int_distribution<int>(1, v - 1)(rng);
        adj[u][v] = adj[v][u] = true;
        edges.push_back({u, v, {}});
    }
    std::bernoulli_distribution extra(extra_edge_prob);
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (!adj[u][v] && extra(rng)) edges.push_back({u, v, {}});
        }
    }
    std::vector<int> sources;
    for (int i = 1; i < n; ++i) sources.push_back(i);
    std::shuffle(sources.begin(), sources.end(), rng);
    sources.resize(static_cast<std::size_t>(std::min(streams, n - 1)));
    std::sort(sources.begin(), sources.end());
    std::vector<TrafficStream> ts;
    std::uniform_int_distribution<int> rate(1, max_rate);
    for (int s : sources) ts.push_back({s, rate(rng)});
    return NetworkInstance::create(nodes, edges, n, ts);
}

}  // namespace qroute::testing
