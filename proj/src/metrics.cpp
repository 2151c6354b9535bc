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

#include "qroute/metrics.hpp"

#include <cmath>
#include <map>
#include <ostream>
#include <tuple>

#include "qroute/errors.hpp"

namespace qroute {

namespace {

double ratio(std::size_t a, std::size_t b) {
    return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b);
}

// edge_prob sorts with "unset" (exhaustive) first
using CellKey = std::tuple<std::size_t, double, std::size_t>;

double prob_key(const std::optional<double>& p) { return p ? *p : -1.0; }

struct Accumulator {
    MetricCell cell;
    double time_sum = 0;
    std::size_t sampled = 0;
    double size_sum = 0;

    void add(const ExperimentRecord& r) {
        switch (r.status) {
            case SolveStatus::Infeasible: ++cell.infeasible; return;
            case SolveStatus::EmbeddingError: ++cell.embedding_error; break;
            case SolveStatus::Solved:
            case SolveStatus::NoFeasibleSample:
                if (r.correct) ++cell.correct;
                else ++cell.incorrect;
                time_sum += r.processing_time;
                ++sampled;
                break;
        }
        ++cell.instances;
        size_sum += static_cast<double>(r.qubo_size);
    }

    MetricCell finish() {
        cell.mean_processing_time = sampled ? time_sum / static_cast<double>(sampled) : 0.0;
        cell.mean_qubo_size = cell.instances ? size_sum / static_cast<double>(cell.instances) : 0.0;
        return cell;
    }
};

std::string opt_str(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

}  // namespace

double MetricCell::correctness_rate() const { return ratio(correct, instances); }
double MetricCell::incorrect_rate() const { return ratio(incorrect, instances); }
double MetricCell::embedding_error_rate() const { return ratio(embedding_error, instances); }

DegradationPoint degradation_size(const std::vector<MetricCell>& series) {
    DegradationPoint out;
    if (!series.empty()) out.edge_prob = series.front().edge_prob;

    std::vector<const MetricCell*> points;
    for (const auto& c : series) {
        if (c.instances > 0) points.push_back(&c);
    }
    auto margins = [](const MetricCell& c) {
        return std::pair{c.correctness_rate() - c.incorrect_rate(),
                         c.correctness_rate() - c.embedding_error_rate()};
    };
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto [di, de] = margins(*points[i]);
        const double here = static_cast<double>(points[i]->graph_size);
        if (i == 0) {
            if (di <= 0 || de <= 0) out.crossing = here;
        } else {
            const auto [pi, pe] = margins(*points[i - 1]);
            const double prev = static_cast<double>(points[i - 1]->graph_size);
            std::optional<double> x;
            for (auto [a, b] : {std::pair{pi, di}, std::pair{pe, de}}) {
                if (a > 0 && b <= 0) {
                    double at = prev + a / (a - b) * (here - prev);
                    if (!x || at < *x) x = at;
                }
            }
            out.crossing = x;
        }
        if (out.crossing) {
            out.degradation_size = static_cast<long>(std::ceil(*out.crossing)) + 1;
            return out;
        }
    }
    return out;
}

MetricTable aggregate(const std::vector<ExperimentRecord>& records) {
    if (records.empty()) throw InvalidInput("cannot aggregate an empty batch");

    std::map<CellKey, Accumulator> cells;
    std::map<std::pair<double, std::size_t>, Accumulator> by_size;
    for (const auto& r : records) {
        auto& c = cells[{r.graph_size, prob_key(r.edge_prob), r.source_count}];
        c.cell.graph_size = r.graph_size;
        c.cell.edge_prob = r.edge_prob;
        c.cell.source_count = r.source_count;
        c.add(r);
        auto& s = by_size[{prob_key(r.edge_prob), r.graph_size}];
        s.cell.graph_size = r.graph_size;
        s.cell.edge_prob = r.edge_prob;
        s.add(r);
    }

    MetricTable table;
    for (auto& [key, acc] : cells) table.cells.push_back(acc.finish());
    std::map<double, std::vector<MetricCell>> series;
    for (auto& [key, acc] : by_size) {
        auto cell = acc.finish();
        table.by_size.push_back(cell);
        series[key.first].push_back(cell);
    }
    for (const auto& [p, s] : series) table.degradation.push_back(degradation_size(s));
    return table;
}

void write_metric_csv(const MetricTable& table, std::ostream& out) {
    out << "graph_size,edge_prob,source_count,instances,correct,incorrect,embedding_error,"
           "infeasible,correctness_rate,incorrect_rate,embedding_error_rate,"
           "mean_processing_time,mean_qubo_size\n";
    auto row = [&](const MetricCell& c) {
        out << c.graph_size << ',' << opt_str(c.edge_prob) << ','
            << (c.source_count ? std::to_string(*c.source_count) : std::string("all")) << ','
            << c.instances << ',' << c.correct << ',' << c.incorrect << ',' << c.embedding_error
            << ',' << c.infeasible << ',' << format_double(c.correctness_rate()) << ','
            << format_double(c.incorrect_rate()) << ',' << format_double(c.embedding_error_rate())
            << ',' << format_double(c.mean_processing_time) << ','
            << format_double(c.mean_qubo_size) << '\n';
    };
    for (const auto& c : table.cells) row(c);
    for (const auto& c : table.by_size) row(c);
}

void write_long_csv(const MetricTable& table, std::ostream& out) {
    out << "graph_size,edge_prob,source_count,metric,value\n";
    auto emit = [&](const MetricCell& c) {
        const std::string key = std::to_string(c.graph_size) + ',' + opt_str(c.edge_prob) + ',' +
                                (c.source_count ? std::to_string(*c.source_count) : "all") + ',';
        out << key << "correctness_rate," << format_double(c.correctness_rate()) << '\n';
        out << key << "incorrect_rate," << format_double(c.incorrect_rate()) << '\n';
        out << key << "embedding_error_rate," << format_double(c.embedding_error_rate()) << '\n';
        out << key << "mean_processing_time," << format_double(c.mean_processing_time) << '\n';
        out << key << "mean_qubo_size," << format_double(c.mean_qubo_size) << '\n';
    };
    for (const auto& c : table.cells) emit(c);
    for (const auto& c : table.by_size) emit(c);
}

void write_degradation_csv(const MetricTable& table, std::ostream& out) {
    out << "edge_prob,crossing,degradation_size\n";
    for (const auto& d : table.degradation) {
        out << opt_str(d.edge_prob) << ',' << opt_str(d.crossing) << ','
            << (d.degradation_size ? std::to_string(*d.degradation_size) : std::string("none"))
            << '\n';
    }
}

}  // namespace qroute
