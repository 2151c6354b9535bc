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
#include <span>
#include <string>
#include <vector>

#include "qroute/domain_wall.hpp"
#include "qroute/network.hpp"
#include "qroute/paths.hpp"
#include "qroute/qubo.hpp"
#include "qroute/routing.hpp"
#include "qroute/samplers.hpp"

namespace qroute {

enum class Violation { None, OneHot, DomainWall, Capacity };

std::string to_string(Violation v);

struct SampleClass {
    std::optional<Assignment> assignment;  // set whenever decoding succeeded
    bool feasible = false;
    Violation reason = Violation::None;
    std::optional<double> objective;  // recomputed relay energy, when decoded
};

/// Decodes a sample of `q` into routes (through `em` when `q` is domain-wall encoded,
/// otherwise through its PathVar metadata), then checks one route per stream and edge
/// capacities. Invalid decodes are classified, never thrown.
SampleClass classify_sample(std::span<const std::uint8_t> bits, const QuboProblem& q,
                            const EncodingMap* em, const NetworkInstance& net,
                            const RouteTable& rt, long c_max);

enum class SolveStatus { Solved, NoFeasibleSample, EmbeddingError, Infeasible };

std::string to_string(SolveStatus s);
SolveStatus solve_status_from_string(const std::string& s);

struct ClassifiedSample {
    Bits bits;
    double energy = 0;
    SampleClass cls;
};

struct BestFeasible {
    Assignment assignment;
    double objective = 0;
};

struct SolveOutcome {
    std::vector<ClassifiedSample> samples;
    std::optional<BestFeasible> best_feasible;
    double processing_time = 0;
    double reported_qpu_time = 0;
    SolveStatus status = SolveStatus::NoFeasibleSample;
};

/// Classifies every sample (energies recomputed from `q`) and picks the feasible sample
/// with the lowest objective, ties broken by sample order.
SolveOutcome classify_outcome(const SampleSet& set, const QuboProblem& q, const EncodingMap* em,
                              const NetworkInstance& net, const RouteTable& rt, long c_max);

/// Size-based stand-in for minor-embedding limits: a problem embeds when it has at most
/// `max_variables` variables and, once it has more than `density_floor` variables, its
/// coupler density (couplers / (n (n-1) / 2)) is at most `max_coupler_density`.
struct EmbeddingModel {
    std::size_t max_variables = 20;
    double max_coupler_density = 1.0;
    std::size_t density_floor = 0;
};

bool embedding_feasible(const QuboProblem& q, const EmbeddingModel& model = {});

nlohmann::json to_json(const SolveOutcome& outcome);

}  // namespace qroute
