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

#include "qroute/remote_sampler.hpp"

#include <chrono>
#include <thread>

#include "httplib.h"
#include "qroute/errors.hpp"

namespace qroute {

nlohmann::json make_sample_request(const QuboProblem& q, std::size_t num_reads) {
    nlohmann::json j;
    j["n_vars"] = q.num_variables();
    j["num_reads"] = num_reads;
    j["entries"] = nlohmann::json::array();
    for (const auto& [key, value] : q.entries()) {
        j["entries"].push_back(nlohmann::json::array({key.first, key.second, value}));
    }
    return j;
}

std::pair<QuboProblem, std::size_t> parse_sample_request(const nlohmann::json& request) {
    try {
        QuboProblem q(request.at("n_vars").get<std::size_t>());
        for (const auto& e : request.at("entries")) {
            if (e.size() != 3) throw InvalidInput("entry must be [i, j, coeff]");
            q.add(e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<double>());
        }
        q.prune();
        auto reads = request.at("num_reads").get<std::size_t>();
        if (reads < 1) throw InvalidInput("num_reads must be at least 1");
        return {std::move(q), reads};
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed sample request: ") + e.what());
    }
}

nlohmann::json make_sample_response(const SampleSet& set) {
    nlohmann::json j;
    j["samples"] = nlohmann::json::array();
    for (const auto& s : set.samples) j["samples"].push_back({{"bits", s.bits}, {"energy", s.energy}});
    j["timing"] = {{"sampling_time_us", set.processing_time * 1e6}};
    return j;
}

SampleSet parse_sample_response(const nlohmann::json& response, const QuboProblem& q) {
    try {
        SampleSet set;
        for (const auto& s : response.at("samples")) {
            RawSample raw;
            for (const auto& b : s.at("bits")) {
                auto v = b.get<int>();
                if (v != 0 && v != 1) throw InvalidInput("sample bits must be 0 or 1");
                raw.bits.push_back(static_cast<std::uint8_t>(v));
            }
            if (raw.bits.size() != q.num_variables()) {
                throw InvalidInput("remote sample has wrong length");
            }
            raw.energy = qubo_energy(q, raw.bits);
            set.samples.push_back(std::move(raw));
        }
        set.processing_time = response.at("timing").at("sampling_time_us").get<double>() * 1e-6;
        return set;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed sample response: ") + e.what());
    }
}

RemoteSampler::RemoteSampler(std::string host, int port, double timeout_seconds)
    : host_(std::move(host)), port_(port), timeout_(timeout_seconds) {}

SampleSet RemoteSampler::sample(const QuboProblem& q, const SamplerConfig& cfg) const {
    cfg.validate();
    httplib::Client client(host_, port_);
    const auto usec = static_cast<long>(timeout_ * 1e6);
    client.set_read_timeout(usec / 1000000, usec % 1000000);
    client.set_connection_timeout(usec / 1000000, usec % 1000000);
    auto res = client.Post("/sample", make_sample_request(q, cfg.num_reads).dump(),
                           "application/json");
    if (!res) {
        throw std::runtime_error("remote sampler unreachable at " + host_ + ":" +
                                 std::to_string(port_) + " (" + httplib::to_string(res.error()) +
                                 ")");
    }
    if (res->status != 200) {
        throw std::runtime_error("remote sampler returned HTTP " + std::to_string(res->status) +
                                 ": " + res->body);
    }
    nlohmann::json body;
    try {
        body = nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("remote sampler sent invalid JSON: ") + e.what());
    }
    return parse_sample_response(body, q);
}

struct LoopbackSamplerServer::Impl {
    SamplerConfig cfg;
    httplib::Server server;
    std::thread worker;
};

LoopbackSamplerServer::LoopbackSamplerServer(SamplerConfig cfg) : impl_(std::make_unique<Impl>()) {
    impl_->cfg = cfg;
    impl_->server.Post("/sample", [this](const httplib::Request& req, httplib::Response& res) {
        try {
            auto [q, reads] = parse_sample_request(nlohmann::json::parse(req.body));
            auto cfg = impl_->cfg;
            cfg.num_reads = reads;
            res.set_content(make_sample_response(solve_anneal(q, cfg)).dump(), "application/json");
        } catch (const std::exception& e) {
            res.status = 400;
            res.set_content(nlohmann::json{{"error", e.what()}}.dump(), "application/json");
        }
    });
}

LoopbackSamplerServer::~LoopbackSamplerServer() { stop(); }

int LoopbackSamplerServer::start(const std::string& host, int port) {
    int bound = port;
    if (port == 0) {
        bound = impl_->server.bind_to_any_port(host);
    } else if (!impl_->server.bind_to_port(host, port)) {
        bound = -1;
    }
    if (bound < 0) throw std::runtime_error("cannot bind sampler server on " + host);
    impl_->worker = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
    return bound;
}

void LoopbackSamplerServer::listen_blocking(const std::string& host, int port) {
    if (!impl_->server.listen(host, port)) {
        throw std::runtime_error("cannot listen on " + host + ":" + std::to_string(port));
    }
}

void LoopbackSamplerServer::stop() {
    if (!impl_) return;
    impl_->server.stop();
    if (impl_->worker.joinable()) impl_->worker.join();
}

}  // namespace qroute
