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

#include "qroute/classify.hpp"

#include "qroute/errors.hpp"

namespace qroute {

std::string to_string(Violation v) {
    switch (v) {
        case Violation::None: return "none";
        case Violation::OneHot: return "one_hot";
        case Violation::DomainWall: return "domain_wall";
        case Violation::Capacity: return "capacity";
    }
    return "unknown";
}

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Solved: return "solved";
        case SolveStatus::NoFeasibleSample: return "no_feasible_sample";
        case SolveStatus::EmbeddingError: return "embedding_error";
        case SolveStatus::Infeasible: return "infeasible";
    }
    return "unknown";
}

SolveStatus solve_status_from_string(const std::string& s) {
    if (s == "solved") return SolveStatus::Solved;
    if (s == "no_feasible_sample") return SolveStatus::NoFeasibleSample;
    if (s == "embedding_error") return SolveStatus::EmbeddingError;
    if (s == "infeasible") return SolveStatus::Infeasible;
    throw InvalidInput("unknown status '" + s + "'");
}

SampleClass classify_sample(std::span<const std::uint8_t> bits, const QuboProblem& q,
                            const EncodingMap* em, const NetworkInstance& net,
                            const RouteTable& rt, long c_max) {
    if (bits.size() != q.num_variables()) throw InvalidInput("sample length mismatch");
    SampleClass out;
    Assignment a;
    if (em) {
        auto decoded = decode(bits, *em);
        if (!decoded.ok()) {
            out.reason = Violation::DomainWall;
            return out;
        }
        a = std::move(decoded.options);
    } else {
        if (q.var_meta().size() != q.num_variables()) throw InvalidInput("problem lacks var_meta");
        std::vector<int> active(rt.routes.size(), 0);
        a.assign(rt.routes.size(), 0);
        for (std::size_t v = 0; v < bits.size(); ++v) {
            const auto* p = std::get_if<PathVar>(&q.var_meta()[v]);
            if (!p || !bits[v]) continue;
            if (p->stream >= a.size()) throw InvalidInput("var_meta stream out of range");
            ++active[p->stream];
            a[p->stream] = p->route;
        }
        for (auto count : active) {
            if (count != 1) {
                out.reason = Violation::OneHot;
                return out;
            }
        }
    }
    if (a.size() != rt.routes.size()) throw InvalidInput("decoded stream count mismatch");
    out.objective = objective_energy(net, rt, a);
    out.feasible = check_capacity(net, rt, a, c_max).feasible;
    out.reason = out.feasible ? Violation::None : Violation::Capacity;
    out.assignment = std::move(a);
    return out;
}

SolveOutcome classify_outcome(const SampleSet& set, const QuboProblem& q, const EncodingMap* em,
                              const NetworkInstance& net, const RouteTable& rt, long c_max) {
    SolveOutcome out;
    out.processing_time = set.processing_time;
    out.reported_qpu_time = set.reported_qpu_time;
    for (const auto& raw : set.samples) {
        ClassifiedSample s{raw.bits, qubo_energy(q, raw.bits),
                           classify_sample(raw.bits, q, em, net, rt, c_max)};
        if (s.cls.feasible &&
            (!out.best_feasible || *s.cls.objective < out.best_feasible->objective)) {
            out.best_feasible = BestFeasible{*s.cls.assignment, *s.cls.objective};
        }
        out.samples.push_back(std::move(s));
    }
    out.status = out.best_feasible ? SolveStatus::Solved : SolveStatus::NoFeasibleSample;
    return out;
}

bool embedding_feasible(const QuboProblem& q, const EmbeddingModel& model) {
    const auto n = q.num_variables();
    if (n > model.max_variables) return false;
    if (n <= model.density_floor || n < 2) return true;
    std::size_t couplers = 0;
    for (const auto& [key, value] : q.entries()) {
        if (key.first != key.second && value != 0.0) ++couplers;
    }
    const double density = static_cast<double>(couplers) / (0.5 * n * (n - 1));
    return density <= model.max_coupler_density;
}

nlohmann::json to_json(const SolveOutcome& outcome) {
    nlohmann::json j;
    j["status"] = to_string(outcome.status);
    j["processing_time"] = outcome.processing_time;
    j["reported_qpu_time"] = outcome.reported_qpu_time;
    j["samples"] = nlohmann::json::array();
    for (const auto& s : outcome.samples) {
        nlohmann::json js{{"bits", s.bits}, {"energy", s.energy}, {"feasible", s.cls.feasible},
                          {"violation", to_string(s.cls.reason)}};
        if (s.cls.assignment) js["assignment"] = *s.cls.assignment;
        if (s.cls.objective) js["objective"] = *s.cls.objective;
        j["samples"].push_back(js);
    }
    if (outcome.best_feasible) {
        j["best_feasible"] = {{"assignment", outcome.best_feasible->assignment},
                              {"objective", outcome.best_feasible->objective}};
    } else {
        j["best_feasible"] = nullptr;
    }
    return j;
}

}  // namespace qroute
