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

#include "qroute/samplers.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <random>

#include "qroute/errors.hpp"

namespace qroute {

namespace {

/// Linear terms plus a symmetric CSR coupling list.
struct SparseModel {
    std::vector<double> linear;
    std::vector<std::size_t> start;
    std::vector<std::size_t> neighbor;
    std::vector<double> weight;

    explicit SparseModel(const QuboProblem& q) : linear(q.num_variables(), 0.0) {
        const auto n = q.num_variables();
        std::vector<std::size_t> degree(n, 0);
        for (const auto& [key, value] : q.entries()) {
            if (key.first == key.second) {
                linear[key.first] += value;
            } else {
                ++degree[key.first];
                ++degree[key.second];
            }
        }
        start.assign(n + 1, 0);
        for (std::size_t i = 0; i < n; ++i) start[i + 1] = start[i] + degree[i];
        neighbor.resize(start[n]);
        weight.resize(start[n]);
        std::vector<std::size_t> fill(start.begin(), start.end() - 1);
        for (const auto& [key, value] : q.entries()) {
            if (key.first == key.second) continue;
            neighbor[fill[key.first]] = key.second;
            weight[fill[key.first]++] = value;
            neighbor[fill[key.second]] = key.first;
            weight[fill[key.second]++] = value;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

void SamplerConfig::validate() const {
    if (num_reads < 1) throw InvalidInput("num_reads must be at least 1");
    if (sweeps < 1) throw InvalidInput("sweeps must be at least 1");
    if (t_hot && t_cold && !(*t_hot > *t_cold && *t_cold > 0)) {
        throw InvalidInput("temperature schedule needs t_hot > t_cold > 0");
    }
    if (t_cold && !(*t_cold > 0)) throw InvalidInput("t_cold must be positive");
}

SampleSet solve_exact(const QuboProblem& q, std::size_t head) {
    const auto n = q.num_variables();
    if (n > kMaxExactVariables) {
        throw InvalidInput("exhaustive solver limited to " + std::to_string(kMaxExactVariables) +
                           " variables, got " + std::to_string(n));
    }
    head = std::max<std::size_t>(head, 1);
    const auto t0 = Clock::now();
    const SparseModel model(q);

    // local field h_i = linear_i + sum_j w_ij b_j; flipping i changes E by (1 - 2 b_i) h_i
    std::vector<double> field = model.linear;
    Bits bits(n, 0);
    double energy = q.offset();

    struct Candidate {
        double energy;
        std::uint64_t state;
    };
    // keep a margin beyond `head` so exact re-scoring can reorder near-ties
    const std::size_t keep = head + 8;
    std::vector<Candidate> best;
    auto consider = [&](double e, std::uint64_t state) {
        auto worse = [](const Candidate& a, const Candidate& b) { return a.energy < b.energy; };
        if (best.size() < keep) {
            best.push_back({e, state});
            std::push_heap(best.begin(), best.end(), worse);
        } else if (e < best.front().energy) {
            std::pop_heap(best.begin(), best.end(), worse);
            best.back() = {e, state};
            std::push_heap(best.begin(), best.end(), worse);
        }
    };

    std::uint64_t state = 0;
    consider(energy, state);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t step = 1; step < total; ++step) {
        const auto i = static_cast<std::size_t>(std::countr_zero(step));
        const double sign = bits[i] ? -1.0 : 1.0;
        energy += sign * field[i];
        bits[i] ^= 1;
        state ^= std::uint64_t{1} << i;
        for (auto k = model.start[i]; k < model.start[i + 1]; ++k) {
            field[model.neighbor[k]] += sign * model.weight[k];
        }
        consider(energy, state);
    }

    SampleSet out;
    for (const auto& c : best) {
        RawSample s;
        s.bits.resize(n);
        for (std::size_t i = 0; i < n; ++i) s.bits[i] = (c.state >> i) & 1;
        s.energy = qubo_energy(q, s.bits);
        out.samples.push_back(std::move(s));
    }
    std::sort(out.samples.begin(), out.samples.end(), [](const RawSample& a, const RawSample& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        return a.bits < b.bits;
    });
    if (out.samples.size() > head) out.samples.resize(head);
    out.processing_time = seconds_since(t0);
    return out;
}

std::pair<double, double> default_temperatures(const QuboProblem& q) {
    double hi = 0;
    double lo = 0;
    for (const auto& [key, value] : q.entries()) {
        const double a = std::abs(value);
        if (a == 0) continue;
        hi = std::max(hi, a);
        lo = lo == 0 ? a : std::min(lo, a);
    }
    if (hi == 0) return {1.0, 1e-3};
    return {hi, 1e-3 * lo};
}

SampleSet solve_anneal(const QuboProblem& q, const SamplerConfig& cfg) {
    cfg.validate();
    const auto t0 = Clock::now();
    const auto n = q.num_variables();
    const SparseModel model(q);

    auto [t_hot, t_cold] = default_temperatures(q);
    if (cfg.t_hot) t_hot = *cfg.t_hot;
    if (cfg.t_cold) t_cold = *cfg.t_cold;
    if (!(t_hot >= t_cold && t_cold > 0)) throw InvalidInput("invalid temperature schedule");

    std::vector<double> beta(cfg.sweeps);
    for (std::size_t k = 0; k < cfg.sweeps; ++k) {
        const double frac = cfg.sweeps == 1 ? 1.0 : static_cast<double>(k) / (cfg.sweeps - 1);
        beta[k] = 1.0 / (t_hot * std::pow(t_cold / t_hot, frac));
    }

    SampleSet out;
    out.samples.reserve(cfg.num_reads);
    for (std::size_t read = 0; read < cfg.num_reads; ++read) {
        std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                          static_cast<std::uint32_t>(read)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> unit(0.0, 1.0);

        Bits bits(n);
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
        std::vector<double> field = model.linear;
        for (std::size_t i = 0; i < n; ++i) {
            if (!bits[i]) continue;
            for (auto k = model.start[i]; k < model.start[i + 1]; ++k) {
                field[model.neighbor[k]] += model.weight[k];
            }
        }

        for (const double b : beta) {
            for (std::size_t i = 0; i < n; ++i) {
                const double delta = bits[i] ? -field[i] : field[i];
                if (delta > 0 && unit(rng) >= std::exp(-b * delta)) continue;
                const double sign = bits[i] ? -1.0 : 1.0;
                bits[i] ^= 1;
                for (auto k = model.start[i]; k < model.start[i + 1]; ++k) {
                    field[model.neighbor[k]] += sign * model.weight[k];
                }
            }
        }
        out.samples.push_back({bits, qubo_energy(q, bits)});
    }
    out.processing_time = seconds_since(t0);
    out.reported_qpu_time = static_cast<double>(cfg.num_reads) * cfg.anneal_time_per_read;
    return out;
}

SampleSet ExactSampler::sample(const QuboProblem& q, const SamplerConfig& cfg) const {
    return solve_exact(q, cfg.num_reads);
}

SampleSet AnnealSampler::sample(const QuboProblem& q, const SamplerConfig& cfg) const {
    return solve_anneal(q, cfg);
}

}  // namespace qroute
