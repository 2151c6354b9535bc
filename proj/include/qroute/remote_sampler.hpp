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

#include <memory>
#include <string>

#include "json.hpp"
#include "qroute/samplers.hpp"

namespace qroute {

/// Wire format, JSON over HTTP POST to /sample:
///   request  {"n_vars": n, "num_reads": r, "entries": [[i, j, coeff], ...]}
///   response {"samples": [{"bits": [0, 1, ...], "energy": e}, ...],
///             "timing": {"sampling_time_us": t}}
/// The offset is not sent; energies in the response are informational only and are
/// recomputed locally.
nlohmann::json make_sample_request(const QuboProblem& q, std::size_t num_reads);

/// Parses a request into a problem (no metadata, zero offset) and the read count.
std::pair<QuboProblem, std::size_t> parse_sample_request(const nlohmann::json& request);

nlohmann::json make_sample_response(const SampleSet& set);

/// Validates a response against `q` and recomputes energies. `processing_time` is the
/// remote sampling time.
SampleSet parse_sample_response(const nlohmann::json& response, const QuboProblem& q);

/// Client side of the remote sampler contract.
class RemoteSampler : public Sampler {
 public:
    RemoteSampler(std::string host, int port, double timeout_seconds = 30.0);

    std::string name() const override { return "remote"; }
    SampleSet sample(const QuboProblem& q, const SamplerConfig& cfg) const override;

 private:
    std::string host_;
    int port_;
    double timeout_;
};

/// Reference server answering /sample with the annealing sampler. Runs on a background
/// thread until destroyed or stop() is called.
class LoopbackSamplerServer {
 public:
    explicit LoopbackSamplerServer(SamplerConfig cfg = {});
    ~LoopbackSamplerServer();

    LoopbackSamplerServer(const LoopbackSamplerServer&) = delete;
    LoopbackSamplerServer& operator=(const LoopbackSamplerServer&) = delete;

    /// Binds to `host:port` (port 0 picks a free port) and starts serving.
    /// Returns the bound port.
    int start(const std::string& host = "127.0.0.1", int port = 0);
    /// Blocks serving on the calling thread.
    void listen_blocking(const std::string& host, int port);
    void stop();

 private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace qroute
