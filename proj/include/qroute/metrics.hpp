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
#include <iosfwd>
#include <optional>
#include <vector>

#include "qroute/pipeline.hpp"

namespace qroute {

/// Outcome counts over one group of records. Infeasible instances are counted
/// separately and excluded from the rate denominators.
struct MetricCell {
    std::size_t graph_size = 0;
    std::optional<double> edge_prob;
    std::optional<std::size_t> source_count;  // unset for per-size rollups

    std::size_t instances = 0;  // correct + incorrect + embedding_error
    std::size_t correct = 0;
    std::size_t incorrect = 0;  // sampled but optimum missed, or no feasible sample
    std::size_t embedding_error = 0;
    std::size_t infeasible = 0;
    double mean_processing_time = 0;  // over sampled instances
    double mean_qubo_size = 0;        // over instances, after fixing

    double correctness_rate() const;
    double incorrect_rate() const;
    double embedding_error_rate() const;
};

struct DegradationPoint {
    std::optional<double> edge_prob;
    std::optional<double> crossing;  // interpolated size where correct meets a failure rate
    std::optional<long> degradation_size;
};

struct MetricTable {
    std::vector<MetricCell> cells;    // per (size, edge_prob, source count)
    std::vector<MetricCell> by_size;  // per (size, edge_prob)
    std::vector<DegradationPoint> degradation;  // per edge_prob
};

/// First point where the correctness rate meets the incorrect or embedding-error rate,
/// interpolated linearly between adjacent sizes; the degradation size is one step past
/// it, ceil(crossing) + 1. Unset when correctness dominates throughout.
DegradationPoint degradation_size(const std::vector<MetricCell>& series);

/// Groups records into cells. Throws InvalidInput on an empty batch.
MetricTable aggregate(const std::vector<ExperimentRecord>& records);

void write_metric_csv(const MetricTable& table, std::ostream& out);
/// One row per (cell, metric): graph_size, edge_prob, source_count, metric, value.
void write_long_csv(const MetricTable& table, std::ostream& out);
void write_degradation_csv(const MetricTable& table, std::ostream& out);

}  // namespace qroute
