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

#include "qroute/pipeline.hpp"

#include <atomic>
#include <charconv>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "qroute/brute_force.hpp"
#include "qroute/errors.hpp"
#include "qroute/remote_sampler.hpp"

namespace qroute {

std::string to_string(Encoding e) { return e == Encoding::OneHot ? "onehot" : "domainwall"; }

Encoding encoding_from_string(const std::string& s) {
    if (s == "onehot") return Encoding::OneHot;
    if (s == "domainwall") return Encoding::DomainWall;
    throw InvalidInput("unknown encoding '" + s + "' (expected onehot or domainwall)");
}

CompiledProblem compile(const NetworkInstance& net, const PipelineConfig& cfg) {
    CompiledProblem c;
    c.routes = collect_paths(net, cfg.max_paths);
    c.edge_matrix = build_edge_index(c.routes, net.num_nodes());

    QuboBuildOptions options;
    options.c_max = cfg.c_max;
    options.slack = cfg.slack;
    options.lambda1 = cfg.lambda1;
    options.lambda2 = cfg.lambda2;
    c.onehot = build_qubo(net, c.routes, options);

    if (cfg.encoding == Encoding::DomainWall) {
        c.encoding_map = make_encoding_map(c.onehot);
        double lambda_dw = cfg.lambda_dw.value_or(0.0);
        if (!cfg.lambda_dw) {
            auto layout = plan_layout(net, c.routes, cfg.c_max, cfg.slack);
            lambda_dw = default_domain_wall_penalty(net, c.routes, layout,
                                                    c.onehot.penalties().capacity);
        }
        c.encoded = substitute(c.onehot, *c.encoding_map, lambda_dw);
    } else {
        c.encoded = c.onehot;
    }

    if (cfg.fix_variables) {
        c.fixing = fix_variables(c.encoded);
    } else {
        c.fixing.reduced = c.encoded;
        for (std::size_t i = 0; i < c.encoded.num_variables(); ++i) c.fixing.kept.push_back(i);
    }
    return c;
}

SolveOutcome solve_compiled(const NetworkInstance& net, const CompiledProblem& compiled,
                            const PipelineConfig& cfg, std::uint64_t seed) {
    static const AnnealSampler default_sampler;
    const Sampler& sampler = cfg.sampler ? *cfg.sampler : default_sampler;
    auto sampler_cfg = cfg.sampler_config;
    sampler_cfg.seed = seed;

    auto reduced_set = sampler.sample(compiled.fixing.reduced, sampler_cfg);
    SampleSet full;
    full.processing_time = reduced_set.processing_time;
    full.reported_qpu_time = reduced_set.reported_qpu_time;
    for (const auto& s : reduced_set.samples) {
        auto bits = compiled.fixing.expand(s.bits);
        double e = qubo_energy(compiled.encoded, bits);
        full.samples.push_back({std::move(bits), e});
    }
    const EncodingMap* em = compiled.encoding_map ? &*compiled.encoding_map : nullptr;
    return classify_outcome(full, compiled.encoded, em, net, compiled.routes, cfg.c_max);
}

ExperimentRecord run_pipeline(const GeneratedInstance& inst, const PipelineConfig& cfg) {
    ExperimentRecord rec;
    rec.instance_id = inst.id;
    rec.graph_size = inst.graph_size;
    rec.source_count = inst.source_count();
    rec.edge_prob = inst.edge_prob;
    rec.encoding = cfg.encoding;
    rec.status = SolveStatus::Infeasible;

    std::optional<CompiledProblem> compiled;
    try {
        compiled = compile(inst.net, cfg);
    } catch (const InfeasibleInstance&) {
        return rec;
    }
    rec.qubo_size_unfixed = compiled->encoded.num_variables();
    rec.qubo_size = compiled->fixing.reduced.num_variables();

    auto oracle = brute_force_route(inst.net, compiled->routes, cfg.c_max);
    if (!oracle.feasible) return rec;
    rec.oracle_objective = oracle.objective;

    if (!embedding_feasible(compiled->fixing.reduced, cfg.embedding)) {
        rec.status = SolveStatus::EmbeddingError;
        return rec;
    }

    auto outcome = solve_compiled(inst.net, *compiled, cfg, derive_seed(inst.seed, {0x5341}));
    rec.status = outcome.status;
    rec.processing_time = outcome.processing_time;
    rec.reported_qpu_time = outcome.reported_qpu_time;
    if (outcome.best_feasible) rec.objective = outcome.best_feasible->objective;
    rec.correct = outcome.status == SolveStatus::Solved && *rec.objective == oracle.objective;
    return rec;
}

void SweepConfig::validate() const {
    if (sizes.empty()) throw InvalidInput("sweep needs at least one graph size");
    if (instances_per_size < 1) throw InvalidInput("instances_per_size must be at least 1");
    if (mode == SweepMode::ErdosRenyi) {
        if (edge_probs.empty()) throw InvalidInput("sweep needs at least one edge probability");
        for (auto n : sizes) {
            if (n < 2) throw InvalidInput("graph sizes must be at least 2");
        }
    } else {
        for (auto n : sizes) {
            if (n < 2 || n > 5) throw InvalidInput("exhaustive sweeps support graph sizes 2..5");
        }
    }
    if (pipeline.max_paths < 1) throw InvalidInput("k must be at least 1");
    if (pipeline.c_max < 0) throw InvalidInput("c_max must be non-negative");
    pipeline.sampler_config.validate();
}

nlohmann::json to_json(const SweepConfig& cfg) {
    const auto& p = cfg.pipeline;
    nlohmann::json j{
        {"mode", cfg.mode == SweepMode::Exhaustive ? "exhaustive" : "erdos_renyi"},
        {"sizes", cfg.sizes},
        {"edge_probs", cfg.edge_probs},
        {"instances_per_size", cfg.instances_per_size},
        {"c_max", p.c_max},
        {"r_max", cfg.r_max},
        {"k", p.max_paths},
        {"encoding", to_string(p.encoding)},
        {"slack", to_string(p.slack)},
        {"sampler", p.sampler ? p.sampler->name() : "anneal"},
        {"seed", cfg.seed},
        {"threads", cfg.threads},
        {"num_reads", p.sampler_config.num_reads},
        {"sweeps", p.sampler_config.sweeps},
        {"fix_variables", p.fix_variables},
        {"exhaustive_random_rates", cfg.exhaustive_random_rates},
        {"embedding",
         {{"max_variables", p.embedding.max_variables},
          {"max_coupler_density", p.embedding.max_coupler_density},
          {"density_floor", p.embedding.density_floor}}}};
    return j;
}

SweepConfig sweep_config_from_json(const nlohmann::json& j) {
    SweepConfig cfg;
    try {
        auto& p = cfg.pipeline;
        if (j.contains("mode")) {
            auto mode = j.at("mode").get<std::string>();
            if (mode == "exhaustive") cfg.mode = SweepMode::Exhaustive;
            else if (mode == "erdos_renyi") cfg.mode = SweepMode::ErdosRenyi;
            else throw InvalidInput("unknown sweep mode '" + mode + "'");
        }
        cfg.sizes = j.value("sizes", cfg.sizes);
        cfg.edge_probs = j.value("edge_probs", cfg.edge_probs);
        cfg.instances_per_size = j.value("instances_per_size", cfg.instances_per_size);
        cfg.r_max = j.value("r_max", cfg.r_max);
        cfg.seed = j.value("seed", cfg.seed);
        cfg.threads = j.value("threads", cfg.threads);
        cfg.exhaustive_random_rates = j.value("exhaustive_random_rates", cfg.exhaustive_random_rates);
        p.c_max = j.value("c_max", p.c_max);
        p.max_paths = j.value("k", p.max_paths);
        if (j.contains("encoding")) p.encoding = encoding_from_string(j.at("encoding").get<std::string>());
        if (j.contains("slack")) p.slack = slack_encoding_from_string(j.at("slack").get<std::string>());
        p.fix_variables = j.value("fix_variables", p.fix_variables);
        p.sampler_config.num_reads = j.value("num_reads", p.sampler_config.num_reads);
        p.sampler_config.sweeps = j.value("sweeps", p.sampler_config.sweeps);
        if (j.contains("t_hot")) p.sampler_config.t_hot = j.at("t_hot").get<double>();
        if (j.contains("t_cold")) p.sampler_config.t_cold = j.at("t_cold").get<double>();
        if (j.contains("lambda1")) p.lambda1 = j.at("lambda1").get<double>();
        if (j.contains("lambda2")) p.lambda2 = j.at("lambda2").get<double>();
        if (j.contains("lambda_dw")) p.lambda_dw = j.at("lambda_dw").get<double>();
        if (j.contains("embedding")) {
            const auto& e = j.at("embedding");
            p.embedding.max_variables = e.value("max_variables", p.embedding.max_variables);
            p.embedding.max_coupler_density =
                e.value("max_coupler_density", p.embedding.max_coupler_density);
            p.embedding.density_floor = e.value("density_floor", p.embedding.density_floor);
        }
        auto sampler = j.value("sampler", std::string("anneal"));
        if (sampler == "exact") {
            p.sampler = std::make_shared<ExactSampler>();
        } else if (sampler == "anneal") {
            p.sampler = std::make_shared<AnnealSampler>();
        } else if (sampler == "remote") {
            const auto& r = j.at("remote");
            p.sampler = std::make_shared<RemoteSampler>(r.value("host", std::string("127.0.0.1")),
                                                        r.at("port").get<int>());
        } else {
            throw InvalidInput("unknown sampler '" + sampler + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed sweep config: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

std::vector<GeneratedInstance> sweep_instances(const SweepConfig& cfg) {
    cfg.validate();
    std::vector<GeneratedInstance> out;
    if (cfg.mode == SweepMode::Exhaustive) {
        ExhaustiveOptions opt;
        opt.random_rates = cfg.exhaustive_random_rates;
        opt.r_max = cfg.r_max;
        opt.seed = cfg.seed;
        for (auto n : cfg.sizes) {
            auto batch = gen_exhaustive(n, opt);
            for (auto& inst : batch) out.push_back(std::move(inst));
        }
    } else {
        ErdosRenyiOptions opt;
        opt.r_max = cfg.r_max;
        for (auto p : cfg.edge_probs) {
            for (auto n : cfg.sizes) {
                auto batch = gen_erdos_renyi(n, p, cfg.instances_per_size, cfg.seed, opt);
                for (auto& inst : batch) out.push_back(std::move(inst));
            }
        }
    }
    return out;
}

std::vector<ExperimentRecord> run_sweep(const SweepConfig& cfg) {
    const auto instances = sweep_instances(cfg);
    std::vector<std::optional<ExperimentRecord>> slots(instances.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        while (true) {
            const auto i = next.fetch_add(1);
            if (i >= instances.size()) return;
            try {
                slots[i] = run_pipeline(instances[i], cfg.pipeline);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = instances.size();
                return;
            }
        }
    };
    const auto threads = std::max<std::size_t>(1, std::min(cfg.threads, instances.size()));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<ExperimentRecord> records;
    records.reserve(slots.size());
    for (auto& s : slots) records.push_back(std::move(*s));
    return records;
}

namespace {

constexpr const char* kRecordHeader =
    "instance_id,graph_size,source_count,edge_prob,qubo_size,qubo_size_unfixed,encoding,status,"
    "correct,processing_time,reported_qpu_time,objective,oracle_objective";

std::string opt_str(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

double parse_double(const std::string& s) {
    double v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw InvalidInput("bad number '" + s + "' in CSV");
    }
    return v;
}

std::size_t parse_size(const std::string& s) {
    std::size_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw InvalidInput("bad integer '" + s + "' in CSV");
    }
    return v;
}

std::optional<double> parse_opt(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return parse_double(s);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

}  // namespace

void write_records_csv(const std::vector<ExperimentRecord>& records, std::ostream& out) {
    out << kRecordHeader << '\n';
    for (const auto& r : records) {
        out << r.instance_id << ',' << r.graph_size << ',' << r.source_count << ','
            << opt_str(r.edge_prob) << ',' << r.qubo_size << ',' << r.qubo_size_unfixed << ','
            << to_string(r.encoding) << ',' << to_string(r.status) << ',' << (r.correct ? 1 : 0)
            << ',' << format_double(r.processing_time) << ',' << format_double(r.reported_qpu_time)
            << ',' << opt_str(r.objective) << ',' << opt_str(r.oracle_objective) << '\n';
    }
}

std::vector<ExperimentRecord> read_records_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kRecordHeader) {
        throw InvalidInput("records CSV has an unexpected header");
    }
    std::vector<ExperimentRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split_csv(line);
        if (f.size() != 13) throw InvalidInput("records CSV row has " + std::to_string(f.size()) + " fields");
        ExperimentRecord r;
        r.instance_id = f[0];
        r.graph_size = parse_size(f[1]);
        r.source_count = parse_size(f[2]);
        r.edge_prob = parse_opt(f[3]);
        r.qubo_size = parse_size(f[4]);
        r.qubo_size_unfixed = parse_size(f[5]);
        r.encoding = encoding_from_string(f[6]);
        r.status = solve_status_from_string(f[7]);
        r.correct = f[8] == "1";
        r.processing_time = parse_double(f[9]);
        r.reported_qpu_time = parse_double(f[10]);
        r.objective = parse_opt(f[11]);
        r.oracle_objective = parse_opt(f[12]);
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace qroute
