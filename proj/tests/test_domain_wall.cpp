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

#include <algorithm>
#include <cmath>
#include <random>
#include <variant>
#include <vector>

#include "catch_amalgamated.hpp"
#include "qroute/errors.hpp"
#include "qroute/domain_wall.hpp"
#include "qroute/paths.hpp"
#include "qroute/qubo_builder.hpp"
#include "support.hpp"

namespace qroute {

namespace {

// A wall string is valid when no 1 follows a 0.
bool is_wall(const Bits& b) {
    for (std::size_t i = 1; i < b.size(); ++i) {
        if (b[i] && !b[i - 1]) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("Domain-wall penalty ground states", "[dw][property]") {
    const double lambda = 2.5;
    for (std::size_t k = 2; k <= 6; ++k) {
        auto q = dw_penalty(k, lambda);
        REQUIRE(q.num_variables() == k - 1);
        CHECK(q.degree() <= 2);
        std::size_t zeros = 0;
        for (std::uint64_t m = 0; m < (1ULL << (k - 1)); ++m) {
            auto b = testing::bits_of(m, k - 1);
            double e = testing::naive_energy(q, b);
            if (e == 0) {
                ++zeros;
                CHECK(is_wall(b));
            } else {
                CHECK(e >= lambda);
                CHECK_FALSE(is_wall(b));
            }
        }
        CHECK(zeros == k);
    }
    CHECK_THROWS_AS(dw_penalty(1, 1.0), InvalidInput);
}

TEST_CASE("Three options with a broken wall", "[dw]") {
    auto q = dw_penalty(3, 4.0);
    CHECK(qubo_energy(q, Bits{0, 1}) == 4.0);
    CHECK(qubo_energy(q, Bits{1, 0}) == 0.0);
    CHECK(decode_option(Bits{0, 1}) == std::nullopt);
}

TEST_CASE("Option encoding is a bijection", "[dw]") {
    for (std::size_t k = 1; k <= 7; ++k) {
        std::vector<Bits> seen;
        for (std::size_t o = 0; o < k; ++o) {
            auto b = encode_option(k, o);
            CHECK(b.size() == k - 1);
            CHECK(decode_option(b) == o);
            CHECK(std::count(b.begin(), b.end(), 1) == static_cast<long>(o));
            seen.push_back(b);
        }
        std::sort(seen.begin(), seen.end());
        CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    }
    CHECK_THROWS_AS(encode_option(3, 3), InvalidInput);
}

TEST_CASE("Substitution preserves energies of valid states", "[dw][property]") {
    std::mt19937_64 rng(77);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto net = testing::random_instance(rng, 4 + trial % 3, 1 + trial % 3, 3);
        const std::size_t k = 2 + trial % 4;
        auto rt = collect_paths(net, k);
        auto onehot = build_qubo(net, rt, {.c_max = 4});
        if (onehot.num_variables() > 14) continue;
        auto em = make_encoding_map(onehot);
        const double lambda_dw = 7.0;
        auto dw = substitute(onehot, em, lambda_dw);
        CAPTURE(trial);
        ++checked;

        CHECK(dw.degree() <= 2);
        REQUIRE(em.streams.size() == rt.routes.size());
        std::size_t path_vars = 0;
        for (std::size_t s = 0; s < em.streams.size(); ++s) {
            CHECK(em.streams[s].options == rt.routes[s].size());
            CHECK(em.streams[s].wall_vars.size() == rt.routes[s].size() - 1);
            path_vars += rt.routes[s].size();
        }
        CHECK(dw.num_variables() == onehot.num_variables() - em.streams.size());
        CHECK(em.passthrough.size() == onehot.num_variables() - path_vars);
        CHECK(dw.penalties().domain_wall == lambda_dw);
        for (const auto& meta : dw.var_meta()) CHECK_FALSE(std::holds_alternative<PathVar>(meta));

        // cancellation against penalty-sized terms limits agreement to their scale
        double mass = 0;
        for (const auto& [key, c] : onehot.entries()) mass += std::abs(c);
        const auto n_vars = static_cast<double>(onehot.num_variables());
        mass += (onehot.penalties().one_hot + lambda_dw) * n_vars;

        // every one-hot-valid string maps to a wall string of equal energy and back
        const auto n = onehot.num_variables();
        for (std::uint64_t m = 0; m < (1ULL << n); ++m) {
            auto b = testing::bits_of(m, n);
            bool valid = true;
            for (const auto& se : em.streams) {
                int ones = 0;
                for (auto v : se.onehot_vars) ones += b[v];
                valid = valid && ones == 1;
            }
            if (!valid) continue;
            auto w = to_domain_wall(b, em);
            CHECK(testing::naive_energy(dw, w) ==
                  Catch::Approx(testing::naive_energy(onehot, b)).epsilon(0).margin(1e-13 * mass));
            auto d = decode(w, em);
            REQUIRE(d.ok());
            for (std::size_t s = 0; s < em.streams.size(); ++s) {
                CHECK(b[em.streams[s].onehot_vars[d.options[s]]] == 1);
            }
        }
    }
    CHECK(checked >= 30);
}

TEST_CASE("Broken walls are reported per stream", "[dw]") {
    auto net = testing::example_network(3, 3);
    auto rt = collect_paths(net, 3);
    auto onehot = build_qubo(net, rt);
    auto em = make_encoding_map(onehot);
    Bits w(em.num_domain_wall, 0);
    auto d = decode(w, em);
    REQUIRE(d.ok());
    CHECK(d.options == std::vector<std::size_t>(em.streams.size(), 0));
    if (em.streams[0].wall_vars.size() >= 2) {
        w[em.streams[0].wall_vars[1]] = 1;
        d = decode(w, em);
        CHECK_FALSE(d.ok());
        CHECK(d.invalid_stream == 0u);
    }
    CHECK_THROWS_AS(decode(Bits{}, em), InvalidInput);
    CHECK_THROWS_AS(make_encoding_map(substitute(onehot, em, 1.0)), InvalidInput);
    CHECK_THROWS_AS(substitute(onehot, em, 0.0), InvalidInput);
}

}  // namespace qroute
