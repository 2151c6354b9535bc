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

#include <cmath>
#include <random>
#include <vector>

#include "catch_amalgamated.hpp"
#include "qroute/brute_force.hpp"
#include "qroute/errors.hpp"
#include "qroute/paths.hpp"
#include "qroute/routing.hpp"
#include "support.hpp"

namespace qroute {

TEST_CASE("Relay energy of a small instance", "[routing]") {
    // 1 -(30 m)- 2 -(100 m)- 4, 1 -(40 m)- 3 -(50 m)- 4, sink 4
    std::vector<Node> nodes{{1, Position{0, 0}}, {2, Position{30, 0}}, {3, Position{0, 40}},
                            {4, Position{30, 100}}};
    std::vector<EdgeSpec> edges{{1, 2, {}}, {2, 4, {}}, {1, 3, {}}, {3, 4, {}}};
    auto net = NetworkInstance::create(nodes, edges, 4, {{1, 2}, {2, 3}}, 0.5);
    auto rt = collect_paths(net, 2);
    REQUIRE(rt.routes[0].size() == 2);

    // per-edge hand sums: (amplifier + 2 E_elec) * (routed rate * delta_t)
    const double e_elec = 50e-9;
    auto fs = [&](double d) { return 10e-12 * d * d + 2 * e_elec; };
    auto mp = [&](double d) { return 0.0013e-12 * d * d * d * d + 2 * e_elec; };
    const double d34 = std::hypot(30.0, 60.0);

    SECTION("stream 1 via node 3, stream 2 direct") {
        // both routes of stream 1 take two hops; via node 3 is 107 m against 130 m
        REQUIRE(rt.routes[0][0].nodes == std::vector<NodeId>{1, 3, 4});
        REQUIRE(rt.routes[1][0].nodes == std::vector<NodeId>{2, 4});
        const double expected = fs(40) * (2 * 0.5) + fs(d34) * (2 * 0.5) + mp(100) * (3 * 0.5);
        CHECK(objective_energy(net, rt, {0, 0}) == Catch::Approx(expected).epsilon(1e-12));
        auto cap = check_capacity(net, rt, {0, 0}, 5);
        CHECK(cap.loads == std::vector<long>{0, 3, 2, 2});
        CHECK(cap.feasible);
        CHECK(route_cost(net, rt, 0, 0) == Catch::Approx(fs(40) + fs(d34)).epsilon(1e-12));
    }

    SECTION("both streams share the long edge into the sink") {
        const double expected = fs(30) * 1.0 + mp(100) * ((2 + 3) * 0.5);
        CHECK(objective_energy(net, rt, {1, 0}) == Catch::Approx(expected).epsilon(1e-12));
        auto cap = check_capacity(net, rt, {1, 0}, 5);
        CHECK(cap.loads == std::vector<long>{2, 5, 0, 0});
        CHECK(cap.feasible);
        CHECK_FALSE(check_capacity(net, rt, {1, 0}, 4).feasible);
    }

    SECTION("assignment shape is validated") {
        CHECK_THROWS_AS(objective_energy(net, rt, {0}), InvalidInput);
        CHECK_THROWS_AS(objective_energy(net, rt, {0, 5}), InvalidInput);
    }
}

TEST_CASE("Example network loads", "[routing]") {
    auto net = testing::example_network(3, 3);
    auto rt = collect_paths(net, 2);
    auto cap = check_capacity(net, rt, {0, 0}, 5);
    CHECK(cap.loads[0] == 3);  // edge 1 carries r1
    CHECK(cap.loads[2] == 3);  // edge 3 carries r3
    CHECK(cap.loads[1] == 6);  // edge 2 carries r1 + r3
    CHECK_FALSE(cap.feasible);
    CHECK(check_capacity(net, rt, {0, 1}, 5).feasible);
}

TEST_CASE("Exhaustive route search", "[routing][brute_force]") {
    SECTION("example network has four combinations") {
        auto net = testing::example_network(3, 3);
        auto rt = collect_paths(net, 2);
        auto opt = brute_force_route(net, rt, 5);
        CHECK(opt.evaluated == 4);
        REQUIRE(opt.feasible);
        CHECK_FALSE(opt.assignment == Assignment{0, 0});
        double best = 1e300;
        for (std::size_t a = 0; a < 2; ++a) {
            for (std::size_t b = 0; b < 2; ++b) {
                if (!check_capacity(net, rt, {a, b}, 5).feasible) continue;
                best = std::min(best, objective_energy(net, rt, {a, b}));
            }
        }
        CHECK(opt.objective == best);
    }

    SECTION("loose capacity picks the cheapest routes") {
        auto net = testing::example_network(2, 2);
        auto rt = collect_paths(net, 2);
        auto opt = brute_force_route(net, rt, 5);
        CHECK(opt.assignment == Assignment{0, 0});
    }

    SECTION("no feasible combination") {
        auto net = testing::example_network(4, 4);
        auto rt = collect_paths(net, 2);
        // both streams must enter the sink through edges 2 or 6, each limited to 3
        auto opt = brute_force_route(net, rt, 3);
        CHECK_FALSE(opt.feasible);
        CHECK(opt.evaluated == 4);
    }

    SECTION("matches a nested-loop search on random instances") {
        std::mt19937_64 rng(77);
        for (int trial = 0; trial < 40; ++trial) {
            auto net = testing::random_instance(rng, 6, 3, 5);
            auto rt = collect_paths(net, 3);
            auto opt = brute_force_route(net, rt, 5);
            bool any = false;
            double best = 0;
            for (std::size_t a = 0; a < rt.routes[0].size(); ++a) {
                for (std::size_t b = 0; b < rt.routes[1].size(); ++b) {
                    for (std::size_t c = 0; c < rt.routes[2].size(); ++c) {
                        Assignment x{a, b, c};
                        if (!check_capacity(net, rt, x, 5).feasible) continue;
                        double v = objective_energy(net, rt, x);
                        if (!any || v < best) best = v;
                        any = true;
                    }
                }
            }
            CAPTURE(trial);
            CHECK(opt.feasible == any);
            if (any) CHECK(opt.objective == best);
        }
    }
}

}  // namespace qroute
