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

#include "qroute/fix_variables.hpp"

#include "qroute/errors.hpp"

namespace qroute {

Bits FixReport::expand(std::span<const std::uint8_t> reduced_bits) const {
    if (reduced_bits.size() != kept.size()) throw InvalidInput("reduced sample has wrong length");
    Bits full(kept.size() + fixed.size(), 0);
    for (const auto& [v, value] : fixed) full[v] = value;
    for (std::size_t r = 0; r < kept.size(); ++r) full[kept[r]] = reduced_bits[r];
    return full;
}

FixReport fix_variables(const QuboProblem& q) {
    const auto n = q.num_variables();
    std::vector<double> linear(n, 0.0);
    std::vector<std::map<std::size_t, double>> coupling(n);
    for (const auto& [key, value] : q.entries()) {
        if (key.first == key.second) {
            linear[key.first] += value;
        } else {
            coupling[key.first][key.second] += value;
            coupling[key.second][key.first] += value;
        }
    }

    FixReport report;
    std::vector<bool> active(n, true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            double lo = linear[i];
            double hi = linear[i];
            for (const auto& [j, c] : coupling[i]) {
                if (!active[j]) continue;
                if (c < 0) lo += c;
                else hi += c;
            }
            if (lo >= 0) {
                report.fixed[i] = 0;
            } else if (hi <= 0) {
                report.fixed[i] = 1;
                report.offset_delta += linear[i];
                for (const auto& [j, c] : coupling[i]) {
                    if (active[j]) linear[j] += c;
                }
            } else {
                continue;
            }
            active[i] = false;
            changed = true;
        }
    }

    std::vector<std::size_t> new_index(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (active[i]) {
            new_index[i] = report.kept.size();
            report.kept.push_back(i);
        }
    }
    QuboProblem reduced(report.kept.size());
    reduced.add_offset(q.offset());
    for (auto i : report.kept) {
        reduced.add(new_index[i], new_index[i], linear[i]);
        for (const auto& [j, c] : coupling[i]) {
            if (j > i && active[j]) reduced.add(new_index[i], new_index[j], c);
        }
    }
    reduced.prune();
    if (q.var_meta().size() == n) {
        std::vector<VarMeta> meta;
        for (auto i : report.kept) meta.push_back(q.var_meta()[i]);
        reduced.set_var_meta(std::move(meta));
    }
    reduced.set_penalties(q.penalties());
    report.reduced = std::move(reduced);
    return report;
}

}  // namespace qroute
