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

#include <memory>
#include <sstream>
#include <vector>

#include "catch_amalgamated.hpp"
#include "qroute/brute_force.hpp"
#include "qroute/classify.hpp"
#include "qroute/errors.hpp"
#include "qroute/pipeline.hpp"
#include "support.hpp"

namespace qroute {

namespace {

PipelineConfig exact_config(Encoding encoding) {
    PipelineConfig cfg;
    cfg.encoding = encoding;
    cfg.sampler = std::make_shared<ExactSampler>();
    cfg.embedding.max_variables = kMaxExactVariables;
    return cfg;
}

}  // namespace

TEST_CASE("Classifying raw samples", "[classify]") {
    auto net = testing::example_network(3, 3);
    auto cfg = exact_config(Encoding::OneHot);
    auto compiled = compile(net, cfg);
    const auto& q = compiled.onehot;
    const auto& rt = compiled.routes;
    auto layout = plan_layout(net, rt, 5, SlackEncoding::Binary);

    auto good = classify_sample(encode_assignment(rt, layout, {0, 1}), q, nullptr, net, rt, 5);
    CHECK(good.feasible);
    CHECK(good.reason == Violation::None);
    CHECK(good.assignment == Assignment{0, 1});
    CHECK(*good.objective == objective_energy(net, rt, {0, 1}));

    // both first routes use edge id 1 and carry 6 > 5
    auto congested = encode_assignment(rt, layout, {0, 1});
    std::fill(congested.begin(), congested.end(), 0);
    congested[layout.path_var(0, 0)] = 1;
    congested[layout.path_var(1, 0)] = 1;
    auto cap = classify_sample(congested, q, nullptr, net, rt, 5);
    CHECK_FALSE(cap.feasible);
    CHECK(cap.reason == Violation::Capacity);

    Bits none(q.num_variables(), 0);
    auto empty = classify_sample(none, q, nullptr, net, rt, 5);
    CHECK_FALSE(empty.feasible);
    CHECK(empty.reason == Violation::OneHot);
    CHECK_FALSE(empty.assignment);
}

TEST_CASE("Embedding model", "[classify]") {
    QuboProblem dense(4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i; j < 4; ++j) dense.add(i, j, 1);
    }
    CHECK(embedding_feasible(dense));
    CHECK_FALSE(embedding_feasible(dense, {.max_variables = 3}));
    CHECK_FALSE(embedding_feasible(dense, {.max_coupler_density = 0.5}));
    CHECK(embedding_feasible(dense, {.max_coupler_density = 0.5, .density_floor = 4}));
    CHECK(embedding_feasible(QuboProblem(21), {.max_variables = 21}));
    CHECK_FALSE(embedding_feasible(QuboProblem(21)));
}

TEST_CASE("Example network end to end", "[pipeline]") {
    auto net = testing::example_network(3, 3);
    auto oracle = brute_force_route(net, collect_paths(net, 2), 5);
    REQUIRE(oracle.feasible);
    for (auto encoding : {Encoding::OneHot, Encoding::DomainWall}) {
        auto cfg = exact_config(encoding);
        auto compiled = compile(net, cfg);
        CHECK(compiled.encoded.num_variables() ==
              compiled.onehot.num_variables() - (encoding == Encoding::DomainWall ? 2 : 0));
        CHECK(compiled.encoding_map.has_value() == (encoding == Encoding::DomainWall));
        auto outcome = solve_compiled(net, compiled, cfg, 1);
        CHECK(outcome.status == SolveStatus::Solved);
        REQUIRE(outcome.best_feasible);
        CHECK(outcome.best_feasible->objective == oracle.objective);
        CHECK(outcome.best_feasible->assignment == oracle.assignment);
        auto j = to_json(outcome);
        CHECK(j.at("status") == "solved");

        GeneratedInstance inst{"example", 6, std::nullopt, 9, net};
        auto rec = run_pipeline(inst, cfg);
        CHECK(rec.correct);
        CHECK(rec.status == SolveStatus::Solved);
        CHECK(rec.oracle_objective == oracle.objective);
        CHECK(rec.qubo_size <= rec.qubo_size_unfixed);
    }
}

TEST_CASE("Pipeline outcomes without sampling", "[pipeline]") {
    auto cfg = exact_config(Encoding::DomainWall);
    GeneratedInstance inst{"example", 6, std::nullopt, 9, testing::example_network(3, 3)};

    cfg.embedding.max_variables = 2;
    auto rec = run_pipeline(inst, cfg);
    CHECK(rec.status == SolveStatus::EmbeddingError);
    CHECK_FALSE(rec.correct);
    CHECK(rec.processing_time == 0);
    CHECK_FALSE(rec.objective);
    CHECK(rec.oracle_objective);

    // a rate above capacity cannot be routed at all
    GeneratedInstance heavy{"heavy", 6, std::nullopt, 9, testing::example_network(6, 1)};
    rec = run_pipeline(heavy, exact_config(Encoding::OneHot));
    CHECK(rec.status == SolveStatus::Infeasible);
    CHECK_FALSE(rec.oracle_objective);
}

TEST_CASE("Records CSV round trip", "[pipeline][csv]") {
    std::vector<ExperimentRecord> records(3);
    records[0] = {"er-n5-p0.6-i0", 5, 2, 0.6, 7, 9, Encoding::DomainWall, SolveStatus::Solved,
                  true, 0.125, 2e-4, 1.0 / 3.0, 1.0 / 3.0};
    records[1] = {"ex-n4-g3-s1", 4, 1, std::nullopt, 4, 4, Encoding::OneHot,
                  SolveStatus::NoFeasibleSample, false, 0.5, 2e-4, std::nullopt, 2.5e-7};
    records[2] = {"er-n12-p0.9-i3", 12, 4, 0.9, 0, 0, Encoding::DomainWall,
                  SolveStatus::Infeasible, false, 0, 0, std::nullopt, std::nullopt};
    std::stringstream ss;
    write_records_csv(records, ss);
    auto back = read_records_csv(ss);
    CHECK(back == records);

    std::stringstream bad("instance_id\nfoo\n");
    CHECK_THROWS_AS(read_records_csv(bad), InvalidInput);
}

TEST_CASE("Sweep configuration", "[pipeline][config]") {
    auto cfg = sweep_config_from_json(nlohmann::json::parse(R"({
        "mode": "erdos_renyi", "sizes": [4, 5], "edge_probs": [0.7],
        "instances_per_size": 3, "seed": 11, "k": 3, "encoding": "onehot",
        "sampler": "exact"
    })"));
    CHECK(cfg.sizes == std::vector<std::size_t>{4, 5});
    CHECK(cfg.instances_per_size == 3);
    CHECK(cfg.pipeline.max_paths == 3);
    CHECK(cfg.pipeline.encoding == Encoding::OneHot);
    CHECK(sweep_config_from_json(to_json(cfg)).seed == 11);
    CHECK(sweep_instances(cfg).size() == 6);
    CHECK_THROWS_AS(sweep_config_from_json(nlohmann::json::parse(R"({"sizes": []})")), InvalidInput);
    CHECK_THROWS_AS(sweep_config_from_json(nlohmann::json::parse(R"({"mode": "grid"})")),
                    InvalidInput);
}

TEST_CASE("Sweeps are reproducible", "[pipeline]") {
    SweepConfig cfg;
    cfg.sizes = {4, 6};
    cfg.edge_probs = {0.6, 0.9};
    cfg.instances_per_size = 3;
    cfg.seed = 5;
    cfg.pipeline.sampler_config.sweeps = 200;
    auto a = run_sweep(cfg);
    auto b = run_sweep(cfg);
    cfg.threads = 3;
    auto c = run_sweep(cfg);
    REQUIRE(a.size() == 12);
    auto strip = [](std::vector<ExperimentRecord> rs) {
        for (auto& r : rs) r.processing_time = 0;
        return rs;
    };
    CHECK(strip(a) == strip(b));
    CHECK(strip(a) == strip(c));
}

}  // namespace qroute
