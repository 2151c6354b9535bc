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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qroute/qubo.hpp"

namespace qroute {

struct SamplerConfig {
    std::size_t num_reads = 10;
    std::size_t sweeps = 1000;
    /// Geometric schedule end points. Unset means max |Q| and 1e-3 * min nonzero |Q|.
    std::optional<double> t_hot;
    std::optional<double> t_cold;
    std::uint64_t seed = 0;
    /// Modeled annealer time per read, only used for reported_qpu_time.
    double anneal_time_per_read = 20e-6;

    void validate() const;
};

/// One read: a bit vector and its energy, always recomputed with qubo_energy.
struct RawSample {
    Bits bits;
    double energy = 0;
};

/// Sampler output before decoding.
struct SampleSet {
    std::vector<RawSample> samples;
    double processing_time = 0;    // wall clock seconds
    double reported_qpu_time = 0;  // modeled: reads * anneal_time_per_read (annealers only)
};

/// Common interface of every sampler that can be plugged into the pipeline.
class Sampler {
 public:
    virtual ~Sampler() = default;
    virtual std::string name() const = 0;
    virtual SampleSet sample(const QuboProblem& q, const SamplerConfig& cfg) const = 0;
};

/// Largest problem the exhaustive sampler accepts.
inline constexpr std::size_t kMaxExactVariables = 30;

/// Enumerates all 2^n states in Gray-code order and returns the `head` lowest-energy
/// states, sorted by energy then bit pattern. Throws InvalidInput above 30 variables.
SampleSet solve_exact(const QuboProblem& q, std::size_t head = 10);

/// num_reads independent single-flip Metropolis anneals over a geometric temperature
/// schedule, one sweep per temperature step. Read r uses an RNG seeded from (seed, r),
/// so output is a pure function of (q, cfg).
SampleSet solve_anneal(const QuboProblem& q, const SamplerConfig& cfg);

/// Default schedule end points for a problem.
std::pair<double, double> default_temperatures(const QuboProblem& q);

class ExactSampler : public Sampler {
 public:
    std::string name() const override { return "exact"; }
    SampleSet sample(const QuboProblem& q, const SamplerConfig& cfg) const override;
};

class AnnealSampler : public Sampler {
 public:
    std::string name() const override { return "anneal"; }
    SampleSet sample(const QuboProblem& q, const SamplerConfig& cfg) const override;
};

}  // namespace qroute
