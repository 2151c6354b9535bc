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

#include "qroute/domain_wall.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qroute/errors.hpp"
#include "qroute/routing.hpp"

namespace qroute {

EncodingMap make_encoding_map(const QuboProblem& onehot) {
    const auto n = onehot.num_variables();
    if (onehot.var_meta().size() != n) throw InvalidInput("one-hot problem lacks var_meta");

    EncodingMap em;
    em.num_onehot = n;
    std::map<std::size_t, std::map<std::size_t, std::size_t>> routes;  // stream -> route -> var
    std::vector<std::size_t> slack;
    for (std::size_t v = 0; v < n; ++v) {
        const auto& meta = onehot.var_meta()[v];
        if (const auto* p = std::get_if<PathVar>(&meta)) {
            if (!routes[p->stream].emplace(p->route, v).second) {
                throw InvalidInput("duplicate route variable in var_meta");
            }
        } else if (std::holds_alternative<SlackVar>(meta)) {
            slack.push_back(v);
        } else {
            throw InvalidInput("problem is already domain-wall encoded");
        }
    }
    std::size_t expected_stream = 0;
    for (const auto& [stream, by_route] : routes) {
        if (stream != expected_stream++) throw InvalidInput("stream indices are not contiguous");
        StreamEncoding se;
        se.options = by_route.size();
        std::size_t expected_route = 0;
        for (const auto& [route, var] : by_route) {
            if (route != expected_route++) throw InvalidInput("route indices are not 0..K-1");
            se.onehot_vars.push_back(var);
        }
        for (std::size_t w = 0; w + 1 < se.options; ++w) {
            se.wall_vars.push_back(em.num_domain_wall++);
        }
        em.streams.push_back(std::move(se));
    }
    for (auto v : slack) em.passthrough.emplace_back(v, em.num_domain_wall++);

    em.substitution.resize(n);
    for (const auto& se : em.streams) {
        const auto k = se.options;
        for (std::size_t i = 0; i < k; ++i) {
            LinearExpr expr;
            // x_i = y_{i-1} - y_i with y_{-1} = 1, y_{K-1} = 0
            if (i == 0) expr.constant = 1;
            else expr.terms.emplace_back(se.wall_vars[i - 1], 1.0);
            if (i + 1 < k) expr.terms.emplace_back(se.wall_vars[i], -1.0);
            em.substitution[se.onehot_vars[i]] = std::move(expr);
        }
    }
    for (auto [from, to] : em.passthrough) em.substitution[from] = LinearExpr{0.0, {{to, 1.0}}};
    return em;
}

QuboProblem dw_penalty(std::size_t options, double lambda) {
    if (options < 2) throw InvalidInput("domain-wall penalty needs at least two options");
    QuboProblem q(options - 1);
    for (std::size_t i = 0; i + 2 < options; ++i) {
        q.add(i + 1, i + 1, lambda);
        q.add(i, i + 1, -lambda);
    }
    q.prune();
    return q;
}

namespace {

void add_linear(QuboProblem& q, const LinearExpr& e, double scale) {
    q.add_offset(scale * e.constant);
    for (const auto& [v, c] : e.terms) q.add(v, v, scale * c);
}

void add_product(QuboProblem& q, const LinearExpr& a, const LinearExpr& b, double scale) {
    q.add_offset(scale * a.constant * b.constant);
    for (const auto& [v, c] : b.terms) q.add(v, v, scale * a.constant * c);
    for (const auto& [v, c] : a.terms) q.add(v, v, scale * b.constant * c);
    for (const auto& [u, cu] : a.terms) {
        for (const auto& [v, cv] : b.terms) q.add(u, v, scale * cu * cv);
    }
}

}  // namespace

QuboProblem substitute(const QuboProblem& onehot, const EncodingMap& em, double lambda_dw) {
    if (em.num_onehot != onehot.num_variables() || em.substitution.size() != em.num_onehot) {
        throw InvalidInput("encoding map does not match the problem");
    }
    if (!(lambda_dw > 0)) throw InvalidInput("domain-wall penalty must be positive");

    auto entries = onehot.entries();
    double offset = onehot.offset();
    const double l2 = onehot.penalties().one_hot;
    for (const auto& se : em.streams) {
        for (std::size_t a = 0; a < se.onehot_vars.size(); ++a) {
            entries[{se.onehot_vars[a], se.onehot_vars[a]}] += l2;
            for (std::size_t b = a + 1; b < se.onehot_vars.size(); ++b) {
                auto key = std::minmax(se.onehot_vars[a], se.onehot_vars[b]);
                entries[{key.first, key.second}] -= 2 * l2;
            }
        }
        offset -= l2;
    }

    QuboProblem out(em.num_domain_wall);
    std::vector<VarMeta> meta(em.num_domain_wall);
    for (std::size_t s = 0; s < em.streams.size(); ++s) {
        for (std::size_t w = 0; w < em.streams[s].wall_vars.size(); ++w) {
            meta[em.streams[s].wall_vars[w]] = WallVar{s, w};
        }
    }
    for (auto [from, to] : em.passthrough) meta[to] = onehot.var_meta().at(from);
    out.set_var_meta(std::move(meta));
    out.add_offset(offset);

    for (const auto& [key, value] : entries) {
        if (value == 0.0) continue;
        const auto& a = em.substitution[key.first];
        if (key.first == key.second) add_linear(out, a, value);
        else add_product(out, a, em.substitution[key.second], value);
    }

    for (const auto& se : em.streams) {
        if (se.options < 2) continue;
        auto pen = dw_penalty(se.options, lambda_dw);
        for (const auto& [key, value] : pen.entries()) {
            out.add(se.wall_vars[key.first], se.wall_vars[key.second], value);
        }
    }
    out.prune();
    out.set_penalties({onehot.penalties().capacity, 0.0, lambda_dw});
    return out;
}

double default_domain_wall_penalty(const NetworkInstance& net, const RouteTable& rt,
                                   const QuboLayout& layout, double lambda1) {
    std::vector<std::size_t> constrained_edges(layout.var_meta.size(), 0);
    for (const auto& block : layout.capacity) {
        for (const auto& [v, c] : block.terms) {
            if (std::holds_alternative<PathVar>(layout.var_meta[v])) ++constrained_edges[v];
        }
    }
    double spread = 0;
    double defect = 0;
    for (std::size_t s = 0; s < rt.routes.size(); ++s) {
        const auto k = rt.routes[s].size();
        for (std::size_t i = 0; i + 1 < k; ++i) {
            spread += std::abs(route_cost(net, rt, s, i + 1) - route_cost(net, rt, s, i));
        }
        const double r = net.streams()[s].rate;
        // only middle options can take the value -1 on a non-monotone string
        for (std::size_t i = 1; i + 1 < k; ++i) {
            auto m = static_cast<double>(constrained_edges[layout.path_var(s, i)]);
            defect = std::max(defect, 2 * lambda1 * r * r * m);
        }
    }
    double lambda = 2 * spread + defect;
    if (spread == 0) lambda += lambda1;
    return lambda;
}

std::optional<std::size_t> decode_option(std::span<const std::uint8_t> wall_bits) {
    std::size_t ones = 0;
    while (ones < wall_bits.size() && wall_bits[ones]) ++ones;
    for (std::size_t i = ones; i < wall_bits.size(); ++i) {
        if (wall_bits[i]) return std::nullopt;
    }
    return ones;
}

Bits encode_option(std::size_t options, std::size_t option) {
    if (options == 0 || option >= options) throw InvalidInput("option out of range");
    Bits bits(options - 1, 0);
    for (std::size_t i = 0; i < option; ++i) bits[i] = 1;
    return bits;
}

DecodeResult decode(std::span<const std::uint8_t> bits, const EncodingMap& em) {
    if (bits.size() != em.num_domain_wall) throw InvalidInput("sample length mismatch");
    DecodeResult out;
    Bits wall;
    for (std::size_t s = 0; s < em.streams.size(); ++s) {
        wall.clear();
        for (auto v : em.streams[s].wall_vars) wall.push_back(bits[v]);
        auto option = decode_option(wall);
        if (!option) {
            out.invalid_stream = s;
            out.options.clear();
            return out;
        }
        out.options.push_back(*option);
    }
    return out;
}

Bits to_domain_wall(std::span<const std::uint8_t> onehot_bits, const EncodingMap& em) {
    if (onehot_bits.size() != em.num_onehot) throw InvalidInput("sample length mismatch");
    Bits out(em.num_domain_wall, 0);
    for (const auto& se : em.streams) {
        std::optional<std::size_t> chosen;
        for (std::size_t i = 0; i < se.onehot_vars.size(); ++i) {
            if (!onehot_bits[se.onehot_vars[i]]) continue;
            if (chosen) throw InvalidInput("one-hot block has several active routes");
            chosen = i;
        }
        if (!chosen) throw InvalidInput("one-hot block has no active route");
        auto wall = encode_option(se.options, *chosen);
        for (std::size_t w = 0; w < wall.size(); ++w) out[se.wall_vars[w]] = wall[w];
    }
    for (auto [from, to] : em.passthrough) out[to] = onehot_bits[from];
    return out;
}

}  // namespace qroute
