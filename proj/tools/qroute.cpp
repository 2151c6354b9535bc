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

// Command line front end: gen, build, solve, sweep, report, serve.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qroute/errors.hpp"
#include "qroute/metrics.hpp"
#include "qroute/pipeline.hpp"
#include "qroute/remote_sampler.hpp"

namespace {

using namespace qroute;

constexpr int kExitInfeasible = 2;
constexpr int kExitEmbedding = 3;

/// Writes to `path`, or stdout for "" and "-".
void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    out << text;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json read_json(const std::string& path) {
    try {
        return nlohmann::json::parse(slurp(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

QuboProblem load_qubo(const std::string& path) {
    if (ends_with(path, ".json")) return qubo_from_json(read_json(path));
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    return read_triples(in);
}

/// Options shared by build and solve for compiling an instance.
struct CompileFlags {
    std::size_t k = 2;
    long c_max = 5;
    std::string encoding = "domainwall";
    std::string slack = "binary";
    std::optional<double> lambda1, lambda2, lambda_dw;
    bool no_fix = false;

    void attach(CLI::App* app) {
        app->add_option("--k", k, "Paths kept per stream")->capture_default_str();
        app->add_option("--c-max", c_max, "Edge capacity per time slot")->capture_default_str();
        app->add_option("--encoding", encoding, "onehot or domainwall")
            ->check(CLI::IsMember({"onehot", "domainwall"}))
            ->capture_default_str();
        app->add_option("--slack", slack, "unary or binary")
            ->check(CLI::IsMember({"unary", "binary"}))
            ->capture_default_str();
        app->add_option("--lambda1", lambda1, "Capacity penalty weight");
        app->add_option("--lambda2", lambda2, "One-hot penalty weight");
        app->add_option("--lambda-dw", lambda_dw, "Domain-wall penalty weight");
        app->add_flag("--no-fix", no_fix, "Skip variable fixing");
    }

    PipelineConfig config() const {
        PipelineConfig cfg;
        cfg.max_paths = k;
        cfg.c_max = c_max;
        cfg.encoding = encoding_from_string(encoding);
        cfg.slack = slack_encoding_from_string(slack);
        cfg.lambda1 = lambda1;
        cfg.lambda2 = lambda2;
        cfg.lambda_dw = lambda_dw;
        cfg.fix_variables = !no_fix;
        return cfg;
    }
};

struct SamplerFlags {
    std::string sampler = "anneal";
    std::string host = "127.0.0.1";
    int port = 0;
    std::size_t num_reads = 10;
    std::size_t sweeps = 1000;
    std::optional<double> t_hot, t_cold;
    std::uint64_t seed = 0;

    void attach(CLI::App* app) {
        app->add_option("--sampler", sampler, "exact, anneal or remote")
            ->check(CLI::IsMember({"exact", "anneal", "remote"}))
            ->capture_default_str();
        app->add_option("--host", host, "Remote sampler host")->capture_default_str();
        app->add_option("--port", port, "Remote sampler port");
        app->add_option("--num-reads", num_reads, "Anneal reads")->capture_default_str();
        app->add_option("--sweeps", sweeps, "Sweeps per read")->capture_default_str();
        app->add_option("--t-hot", t_hot, "Initial temperature");
        app->add_option("--t-cold", t_cold, "Final temperature");
        app->add_option("--seed", seed, "Sampler seed")->capture_default_str();
    }

    void apply(PipelineConfig& cfg) const {
        cfg.sampler_config.num_reads = num_reads;
        cfg.sampler_config.sweeps = sweeps;
        cfg.sampler_config.t_hot = t_hot;
        cfg.sampler_config.t_cold = t_cold;
        cfg.sampler_config.seed = seed;
        if (sampler == "exact") cfg.sampler = std::make_shared<ExactSampler>();
        else if (sampler == "remote") cfg.sampler = std::make_shared<RemoteSampler>(host, port);
        else cfg.sampler = std::make_shared<AnnealSampler>();
    }
};

struct EmbeddingFlags {
    EmbeddingModel model;
    bool skip = false;

    void attach(CLI::App* app) {
        app->add_option("--max-variables", model.max_variables, "Embedding variable limit")
            ->capture_default_str();
        app->add_option("--max-coupler-density", model.max_coupler_density,
                        "Embedding coupler density limit")
            ->capture_default_str();
        app->add_option("--density-floor", model.density_floor,
                        "Variable count below which density is not checked")
            ->capture_default_str();
        app->add_flag("--no-embedding-check", skip, "Skip the embedding check");
    }
};

// gen

struct GenFlags {
    std::string mode = "erdos_renyi";
    std::size_t n = 6;
    double p = 0.6;
    std::size_t count = 1;
    std::size_t index = 0;
    std::uint64_t seed = 0;
    int r_max = 5;
    bool random_rates = false;
    bool list = false;
    std::string out;
};

int run_gen(const GenFlags& f) {
    std::vector<GeneratedInstance> batch;
    if (f.mode == "exhaustive") {
        ExhaustiveOptions opt;
        opt.random_rates = f.random_rates;
        opt.r_max = f.r_max;
        opt.seed = f.seed;
        batch = gen_exhaustive(f.n, opt);
    } else {
        ErdosRenyiOptions opt;
        opt.r_max = f.r_max;
        batch = gen_erdos_renyi(f.n, f.p, f.count, f.seed, opt);
    }
    if (f.list) {
        std::ostringstream ss;
        for (const auto& inst : batch) ss << inst.id << ' ' << inst.source_count() << '\n';
        emit(f.out, ss.str());
        return 0;
    }
    if (f.index >= batch.size()) {
        throw InvalidInput("index " + std::to_string(f.index) + " out of range (batch has " +
                           std::to_string(batch.size()) + " instances)");
    }
    const auto& inst = batch[f.index];
    auto j = to_json(inst.net);
    j["id"] = inst.id;
    emit(f.out, j.dump(2) + "\n");
    return 0;
}

// build

struct BuildFlags {
    std::string instance;
    std::string out;
    std::string format = "json";
    bool fixed = false;
    CompileFlags compile;
};

int run_build(const BuildFlags& f) {
    auto net = load_instance(f.instance);
    CompiledProblem compiled;
    try {
        compiled = compile(net, f.compile.config());
    } catch (const InfeasibleInstance& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    }
    const auto& q = f.fixed ? compiled.fixing.reduced : compiled.encoded;
    if (f.format == "triples") {
        std::ostringstream ss;
        write_triples(q, ss);
        emit(f.out, ss.str());
    } else {
        emit(f.out, to_json(q).dump(2) + "\n");
    }
    return 0;
}

// solve

struct SolveFlags {
    std::string qubo;
    std::string instance;
    std::string out;
    CompileFlags compile;
    SamplerFlags sampler;
    EmbeddingFlags embedding;
};

nlohmann::json sample_set_json(const SampleSet& set) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : set.samples) samples.push_back({{"bits", s.bits}, {"energy", s.energy}});
    return {{"samples", samples},
            {"processing_time", set.processing_time},
            {"reported_qpu_time", set.reported_qpu_time}};
}

int run_solve(const SolveFlags& f) {
    auto q = load_qubo(f.qubo);
    auto cfg = f.compile.config();
    f.sampler.apply(cfg);
    cfg.embedding = f.embedding.model;

    if (f.instance.empty()) {
        // Raw sampling: no routing context, so no classification.
        QuboProblem problem = q;
        FixReport fixing;
        if (cfg.fix_variables) {
            fixing = fix_variables(q);
            problem = fixing.reduced;
        }
        if (!f.embedding.skip && !embedding_feasible(problem, cfg.embedding)) {
            std::cerr << "embedding error: " << problem.num_variables() << " variables\n";
            return kExitEmbedding;
        }
        auto set = cfg.sampler->sample(problem, cfg.sampler_config);
        if (cfg.fix_variables) {
            for (auto& s : set.samples) {
                s.bits = fixing.expand(s.bits);
                s.energy = qubo_energy(q, s.bits);
            }
        }
        emit(f.out, sample_set_json(set).dump(2) + "\n");
        return 0;
    }

    auto net = load_instance(f.instance);
    CompiledProblem compiled;
    try {
        compiled = compile(net, cfg);
    } catch (const InfeasibleInstance& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    }
    if (q.num_variables() != compiled.encoded.num_variables()) {
        throw InvalidInput("QUBO has " + std::to_string(q.num_variables()) +
                           " variables but the instance compiles to " +
                           std::to_string(compiled.encoded.num_variables()) +
                           "; pass the unfixed problem built with the same options");
    }
    // Triples carry no metadata, so take it from the compiled problem.
    q.set_var_meta(compiled.encoded.var_meta());
    q.set_penalties(compiled.encoded.penalties());
    compiled.encoded = q;
    if (cfg.fix_variables) {
        compiled.fixing = fix_variables(q);
    } else {
        compiled.fixing = {};
        compiled.fixing.reduced = q;
        for (std::size_t i = 0; i < q.num_variables(); ++i) compiled.fixing.kept.push_back(i);
    }

    if (!f.embedding.skip && !embedding_feasible(compiled.fixing.reduced, cfg.embedding)) {
        SolveOutcome outcome;
        outcome.status = SolveStatus::EmbeddingError;
        emit(f.out, to_json(outcome).dump(2) + "\n");
        return kExitEmbedding;
    }
    auto outcome = solve_compiled(net, compiled, cfg, f.sampler.seed);
    emit(f.out, to_json(outcome).dump(2) + "\n");
    return 0;
}

// sweep

struct SweepFlags {
    std::string config;
    std::string out;
    std::uint64_t seed = 0;
    std::optional<std::string> mode, encoding, slack, sampler, host;
    std::optional<std::vector<std::size_t>> sizes;
    std::optional<std::vector<double>> edge_probs;
    std::optional<std::size_t> instances, k, threads, num_reads, sweeps, max_variables;
    std::optional<long> c_max;
    std::optional<int> r_max, port;
    std::optional<double> max_coupler_density;
};

int run_sweep_cmd(const SweepFlags& f) {
    nlohmann::json j = f.config.empty() ? nlohmann::json::object() : read_json(f.config);
    if (!j.is_object()) throw InvalidInput("sweep config must be a JSON object");
    j["seed"] = f.seed;
    if (f.mode) j["mode"] = *f.mode;
    if (f.encoding) j["encoding"] = *f.encoding;
    if (f.slack) j["slack"] = *f.slack;
    if (f.sampler) j["sampler"] = *f.sampler;
    if (f.host) j["remote"]["host"] = *f.host;
    if (f.port) j["remote"]["port"] = *f.port;
    if (f.sizes) j["sizes"] = *f.sizes;
    if (f.edge_probs) j["edge_probs"] = *f.edge_probs;
    if (f.instances) j["instances_per_size"] = *f.instances;
    if (f.k) j["k"] = *f.k;
    if (f.threads) j["threads"] = *f.threads;
    if (f.num_reads) j["num_reads"] = *f.num_reads;
    if (f.sweeps) j["sweeps"] = *f.sweeps;
    if (f.c_max) j["c_max"] = *f.c_max;
    if (f.r_max) j["r_max"] = *f.r_max;
    if (f.max_variables) j["embedding"]["max_variables"] = *f.max_variables;
    if (f.max_coupler_density) j["embedding"]["max_coupler_density"] = *f.max_coupler_density;

    auto cfg = sweep_config_from_json(j);
    auto records = run_sweep(cfg);
    std::ostringstream ss;
    write_records_csv(records, ss);
    emit(f.out, ss.str());
    return 0;
}

// report

struct ReportFlags {
    std::string records;
    std::string table;
    std::string long_out;
    std::string degradation;
};

int run_report(const ReportFlags& f) {
    std::ifstream in(f.records);
    if (!in) throw InvalidInput("cannot open " + f.records);
    auto table = aggregate(read_records_csv(in));
    std::ostringstream t;
    write_metric_csv(table, t);
    emit(f.table, t.str());
    if (!f.long_out.empty()) {
        std::ostringstream l;
        write_long_csv(table, l);
        emit(f.long_out, l.str());
    }
    if (!f.degradation.empty()) {
        std::ostringstream d;
        write_degradation_csv(table, d);
        emit(f.degradation, d.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QUBO route selection for wireless sensor networks"};
    app.require_subcommand(1);

    GenFlags gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance JSON");
    gen_cmd->add_option("--mode", gen.mode, "exhaustive or erdos_renyi")
        ->check(CLI::IsMember({"exhaustive", "erdos_renyi"}))
        ->capture_default_str();
    gen_cmd->add_option("-n,--nodes", gen.n, "Graph size")->capture_default_str();
    gen_cmd->add_option("-p,--edge-prob", gen.p, "Edge probability")->capture_default_str();
    gen_cmd->add_option("--count", gen.count, "Batch size (erdos_renyi)")->capture_default_str();
    gen_cmd->add_option("--index", gen.index, "Batch member to emit")->capture_default_str();
    gen_cmd->add_option("--seed", gen.seed, "Master seed")->capture_default_str();
    gen_cmd->add_option("--r-max", gen.r_max, "Largest stream rate")->capture_default_str();
    gen_cmd->add_flag("--random-rates", gen.random_rates, "Random rates in exhaustive mode");
    gen_cmd->add_flag("--list", gen.list, "List batch ids and source counts");
    gen_cmd->add_option("-o,--out", gen.out, "Output file (default stdout)");

    BuildFlags build;
    auto* build_cmd = app.add_subcommand("build", "Compile an instance to a QUBO");
    build_cmd->add_option("instance", build.instance, "Instance JSON")->required();
    build_cmd->add_option("--format", build.format, "json or triples")
        ->check(CLI::IsMember({"json", "triples"}))
        ->capture_default_str();
    build_cmd->add_flag("--fixed", build.fixed, "Emit the problem after variable fixing");
    build_cmd->add_option("-o,--out", build.out, "Output file (default stdout)");
    build.compile.attach(build_cmd);

    SolveFlags solve;
    auto* solve_cmd = app.add_subcommand("solve", "Sample a QUBO");
    solve_cmd->add_option("qubo", solve.qubo, "QUBO file (.json, otherwise triples)")->required();
    solve_cmd->add_option("--instance", solve.instance,
                          "Instance the QUBO was built from; enables decoding");
    solve_cmd->add_option("-o,--out", solve.out, "Output file (default stdout)");
    solve.compile.attach(solve_cmd);
    solve.sampler.attach(solve_cmd);
    solve.embedding.attach(solve_cmd);

    SweepFlags sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run an experiment sweep");
    sweep_cmd->add_option("--config", sweep.config, "Sweep config JSON");
    sweep_cmd->add_option("--seed", sweep.seed, "Master seed")->required();
    sweep_cmd->add_option("-o,--out", sweep.out, "Records CSV (default stdout)");
    sweep_cmd->add_option("--mode", sweep.mode, "exhaustive or erdos_renyi");
    sweep_cmd->add_option("--sizes", sweep.sizes, "Graph sizes");
    sweep_cmd->add_option("--edge-probs", sweep.edge_probs, "Edge probabilities");
    sweep_cmd->add_option("--instances", sweep.instances, "Instances per size");
    sweep_cmd->add_option("--k", sweep.k, "Paths per stream");
    sweep_cmd->add_option("--c-max", sweep.c_max, "Edge capacity");
    sweep_cmd->add_option("--r-max", sweep.r_max, "Largest stream rate");
    sweep_cmd->add_option("--encoding", sweep.encoding, "onehot or domainwall");
    sweep_cmd->add_option("--slack", sweep.slack, "unary or binary");
    sweep_cmd->add_option("--sampler", sweep.sampler, "exact, anneal or remote");
    sweep_cmd->add_option("--host", sweep.host, "Remote sampler host");
    sweep_cmd->add_option("--port", sweep.port, "Remote sampler port");
    sweep_cmd->add_option("--threads", sweep.threads, "Worker threads");
    sweep_cmd->add_option("--num-reads", sweep.num_reads, "Anneal reads");
    sweep_cmd->add_option("--sweeps", sweep.sweeps, "Sweeps per read");
    sweep_cmd->add_option("--max-variables", sweep.max_variables, "Embedding variable limit");
    sweep_cmd->add_option("--max-coupler-density", sweep.max_coupler_density,
                          "Embedding coupler density limit");

    ReportFlags report;
    auto* report_cmd = app.add_subcommand("report", "Aggregate a records CSV");
    report_cmd->add_option("records", report.records, "Records CSV")->required();
    report_cmd->add_option("-o,--out", report.table, "Per-cell metric CSV (default stdout)");
    report_cmd->add_option("--long", report.long_out, "Plot-ready long-format CSV");
    report_cmd->add_option("--degradation", report.degradation, "Degradation size CSV");

    std::string serve_host = "127.0.0.1";
    int serve_port = 8787;
    auto* serve_cmd = app.add_subcommand("serve", "Run the loopback remote sampler");
    serve_cmd->add_option("--host", serve_host)->capture_default_str();
    serve_cmd->add_option("--port", serve_port)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*build_cmd) return run_build(build);
        if (*solve_cmd) return run_solve(solve);
        if (*sweep_cmd) return run_sweep_cmd(sweep);
        if (*report_cmd) return run_report(report);
        if (*serve_cmd) {
            LoopbackSamplerServer server;
            std::cerr << "serving on " << serve_host << ':' << serve_port << '\n';
            server.listen_blocking(serve_host, serve_port);
            return 0;
        }
    } catch (const InfeasibleInstance& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
