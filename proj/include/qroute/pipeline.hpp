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
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qroute/classify.hpp"
#include "qroute/domain_wall.hpp"
#include "qroute/fix_variables.hpp"
#include "qroute/generators.hpp"
#include "qroute/qubo_builder.hpp"
#include "qroute/samplers.hpp"

namespace qroute {

enum class Encoding { OneHot, DomainWall };

std::string to_string(Encoding e);
Encoding encoding_from_string(const std::string& s);

struct PipelineConfig {
    std::size_t max_paths = 2;  // K
    long c_max = 5;
    Encoding encoding = Encoding::DomainWall;
    SlackEncoding slack = SlackEncoding::Binary;
    std::optional<double> lambda1;
    std::optional<double> lambda2;
    std::optional<double> lambda_dw;
    bool fix_variables = true;
    EmbeddingModel embedding;
    SamplerConfig sampler_config;
    /// Defaults to the annealing sampler.
    std::shared_ptr<const Sampler> sampler;
};

/// Every intermediate product of compiling one instance.
struct CompiledProblem {
    RouteTable routes;
    EdgePathMatrix edge_matrix;
    QuboProblem onehot;
    std::optional<EncodingMap> encoding_map;
    QuboProblem encoded;  // onehot, or its domain-wall translation
    FixReport fixing;
};

/// Path collection, edge matrix, QUBO build, encoding and variable fixing.
/// Throws InfeasibleInstance when a stream cannot be routed at all.
CompiledProblem compile(const NetworkInstance& net, const PipelineConfig& cfg);

/// Samples the fixed problem and classifies the samples against the full encoded problem.
SolveOutcome solve_compiled(const NetworkInstance& net, const CompiledProblem& compiled,
                            const PipelineConfig& cfg, std::uint64_t seed);

struct ExperimentRecord {
    std::string instance_id;
    std::size_t graph_size = 0;
    std::size_t source_count = 0;
    std::optional<double> edge_prob;
    std::size_t qubo_size = 0;         // after fixing
    std::size_t qubo_size_unfixed = 0;
    Encoding encoding = Encoding::DomainWall;
    SolveStatus status = SolveStatus::Infeasible;
    bool correct = false;
    double processing_time = 0;
    double reported_qpu_time = 0;
    std::optional<double> objective;
    std::optional<double> oracle_objective;

    bool operator==(const ExperimentRecord&) const = default;
};

/// Runs the full procedure on one instance and scores it against the routing oracle.
/// `correct` holds iff a feasible sample reaches the oracle objective exactly.
ExperimentRecord run_pipeline(const GeneratedInstance& inst, const PipelineConfig& cfg);

enum class SweepMode { Exhaustive, ErdosRenyi };

struct SweepConfig {
    SweepMode mode = SweepMode::ErdosRenyi;
    std::vector<std::size_t> sizes{4, 5, 6, 7, 8, 9, 10, 11, 12};
    std::vector<double> edge_probs{0.6, 0.7, 0.9};
    std::size_t instances_per_size = 20;
    int r_max = 5;
    bool exhaustive_random_rates = false;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    PipelineConfig pipeline;

    void validate() const;
};

nlohmann::json to_json(const SweepConfig& cfg);
/// Missing keys keep their defaults; "sampler" selects exact|anneal|remote and
/// "remote" gives {"host", "port"} for the remote sampler.
SweepConfig sweep_config_from_json(const nlohmann::json& j);

/// Generates the instance batch for a sweep, in deterministic order.
std::vector<GeneratedInstance> sweep_instances(const SweepConfig& cfg);

/// Runs every instance; records come back in instance order regardless of threading.
std::vector<ExperimentRecord> run_sweep(const SweepConfig& cfg);

void write_records_csv(const std::vector<ExperimentRecord>& records, std::ostream& out);
std::vector<ExperimentRecord> read_records_csv(std::istream& in);

}  // namespace qroute
