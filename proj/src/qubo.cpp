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

#include "qroute/qubo.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "qroute/errors.hpp"

namespace qroute {

std::size_t QuboProblem::add_variable(VarMeta meta) {
    if (meta_.size() != n_vars_) throw InvalidInput("var_meta out of sync with variable count");
    meta_.push_back(meta);
    return n_vars_++;
}

void QuboProblem::add(std::size_t i, std::size_t j, double value) {
    if (i >= n_vars_ || j >= n_vars_) throw InvalidInput("QUBO index out of range");
    if (i > j) std::swap(i, j);
    entries_[{i, j}] += value;
}

void QuboProblem::prune() {
    std::erase_if(entries_, [](const auto& kv) { return kv.second == 0.0; });
}

double QuboProblem::coefficient(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0.0 : it->second;
}

void QuboProblem::set_var_meta(std::vector<VarMeta> meta) {
    if (meta.size() != n_vars_) throw InvalidInput("var_meta size must equal n_vars");
    meta_ = std::move(meta);
}

int QuboProblem::degree() const {
    int d = 0;
    for (const auto& [key, value] : entries_) {
        if (value == 0.0) continue;
        d = std::max(d, key.first == key.second ? 1 : 2);
    }
    return d;
}

double qubo_energy(const QuboProblem& q, std::span<const std::uint8_t> bits) {
    if (bits.size() != q.num_variables()) {
        throw InvalidInput("bit vector length " + std::to_string(bits.size()) +
                           " does not match n_vars " + std::to_string(q.num_variables()));
    }
    double e = q.offset();
    for (const auto& [key, value] : q.entries()) {
        if (bits[key.first] && bits[key.second]) e += value;
    }
    return e;
}

std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

nlohmann::json to_json(const QuboProblem& q) {
    nlohmann::json j;
    j["n_vars"] = q.num_variables();
    j["offset"] = q.offset();
    j["entries"] = nlohmann::json::array();
    for (const auto& [key, value] : q.entries()) {
        j["entries"].push_back(nlohmann::json::array({key.first, key.second, value}));
    }
    j["var_meta"] = nlohmann::json::array();
    for (const auto& meta : q.var_meta()) {
        std::visit(
            [&](const auto& m) {
                using T = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<T, PathVar>) {
                    j["var_meta"].push_back(
                        {{"kind", "path"}, {"stream", m.stream}, {"route", m.route}});
                } else if constexpr (std::is_same_v<T, SlackVar>) {
                    j["var_meta"].push_back({{"kind", "slack"},
                                             {"edge", m.edge},
                                             {"bit", m.bit},
                                             {"weight", m.weight}});
                } else {
                    j["var_meta"].push_back(
                        {{"kind", "wall"}, {"stream", m.stream}, {"position", m.position}});
                }
            },
            meta);
    }
    const auto& p = q.penalties();
    j["penalties"] = {
        {"lambda1", p.capacity}, {"lambda2", p.one_hot}, {"lambda_dw", p.domain_wall}};
    return j;
}

QuboProblem qubo_from_json(const nlohmann::json& j) {
    try {
        QuboProblem q(j.at("n_vars").get<std::size_t>());
        q.add_offset(j.value("offset", 0.0));
        for (const auto& e : j.at("entries")) {
            if (e.size() != 3) throw InvalidInput("QUBO entry must be [i, j, coeff]");
            q.add(e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<double>());
        }
        q.prune();
        if (j.contains("var_meta") && !j.at("var_meta").empty()) {
            std::vector<VarMeta> meta;
            for (const auto& m : j.at("var_meta")) {
                auto kind = m.at("kind").get<std::string>();
                if (kind == "path") {
                    meta.emplace_back(
                        PathVar{m.at("stream").get<std::size_t>(), m.at("route").get<std::size_t>()});
                } else if (kind == "slack") {
                    meta.emplace_back(SlackVar{m.at("edge").get<int>(), m.at("bit").get<std::size_t>(),
                                               m.at("weight").get<long>()});
                } else if (kind == "wall") {
                    meta.emplace_back(WallVar{m.at("stream").get<std::size_t>(),
                                              m.at("position").get<std::size_t>()});
                } else {
                    throw InvalidInput("unknown var_meta kind '" + kind + "'");
                }
            }
            q.set_var_meta(std::move(meta));
        }
        if (j.contains("penalties")) {
            const auto& p = j.at("penalties");
            q.set_penalties({p.value("lambda1", 0.0), p.value("lambda2", 0.0),
                             p.value("lambda_dw", 0.0)});
        }
        return q;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed QUBO JSON: ") + e.what());
    }
}

void write_triples(const QuboProblem& q, std::ostream& out) {
    out << "# n_vars " << q.num_variables() << " offset " << format_double(q.offset()) << '\n';
    for (const auto& [key, value] : q.entries()) {
        out << key.first << ' ' << key.second << ' ' << format_double(value) << '\n';
    }
}

QuboProblem read_triples(std::istream& in) {
    std::size_t n_vars = 0;
    double offset = 0;
    struct Triple {
        std::size_t i, j;
        double c;
    };
    std::vector<Triple> triples;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (line[0] == '#') {
            std::string tag;
            ls >> tag;
            while (ls >> tag) {
                if (tag == "n_vars") ls >> n_vars;
                else if (tag == "offset") ls >> offset;
            }
            continue;
        }
        Triple t{};
        if (!(ls >> t.i >> t.j >> t.c)) throw InvalidInput("malformed triple line: " + line);
        n_vars = std::max({n_vars, t.i + 1, t.j + 1});
        triples.push_back(t);
    }
    QuboProblem q(n_vars);
    q.add_offset(offset);
    for (const auto& t : triples) q.add(t.i, t.j, t.c);
    q.prune();
    return q;
}

}  // namespace qroute
