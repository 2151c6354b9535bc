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
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace qroute {

/// Binary selecting route `route` of stream `stream` (one-hot encoding).
struct PathVar {
    std::size_t stream = 0;
    std::size_t route = 0;
    bool operator==(const PathVar&) const = default;
};

/// Slack bit `bit` of the capacity register attached to edge `edge`.
struct SlackVar {
    int edge = 0;
    std::size_t bit = 0;
    long weight = 1;
    bool operator==(const SlackVar&) const = default;
};

/// Domain-wall bit at `position` (0..K-2) of stream `stream`.
struct WallVar {
    std::size_t stream = 0;
    std::size_t position = 0;
    bool operator==(const WallVar&) const = default;
};

using VarMeta = std::variant<PathVar, SlackVar, WallVar>;

struct Penalties {
    double capacity = 0;     // lambda1
    double one_hot = 0;      // lambda2
    double domain_wall = 0;  // zero unless domain-wall encoded
};

using Bits = std::vector<std::uint8_t>;

/// Quadratic unconstrained binary problem: offset + sum_{i<=j} Q[i,j] b_i b_j.
/// Diagonal entries are linear terms. Only upper-triangular entries are stored.
class QuboProblem {
 public:
    using Key = std::pair<std::size_t, std::size_t>;

    QuboProblem() = default;
    explicit QuboProblem(std::size_t n_vars) : n_vars_(n_vars) {}

    std::size_t num_variables() const { return n_vars_; }
    /// Appends a variable and returns its index.
    std::size_t add_variable(VarMeta meta);

    /// Q[min(i,j), max(i,j)] += value.
    void add(std::size_t i, std::size_t j, double value);
    void add_offset(double value) { offset_ += value; }
    /// Drops stored entries that are exactly zero.
    void prune();

    double coefficient(std::size_t i, std::size_t j) const;
    double offset() const { return offset_; }
    const std::map<Key, double>& entries() const { return entries_; }

    const std::vector<VarMeta>& var_meta() const { return meta_; }
    void set_var_meta(std::vector<VarMeta> meta);

    const Penalties& penalties() const { return penalties_; }
    void set_penalties(Penalties p) { penalties_ = p; }

    /// Highest polynomial degree present (0, 1 or 2).
    int degree() const;

 private:
    std::size_t n_vars_ = 0;
    std::map<Key, double> entries_;
    double offset_ = 0;
    std::vector<VarMeta> meta_;
    Penalties penalties_;
};

/// offset + sum Q[i,j] b_i b_j. Throws InvalidInput on length mismatch.
double qubo_energy(const QuboProblem& q, std::span<const std::uint8_t> bits);

nlohmann::json to_json(const QuboProblem& q);
QuboProblem qubo_from_json(const nlohmann::json& j);

/// Plain-text triples, one "i j coeff" per line. Lines starting with '#' are comments;
/// the header comment carries n_vars and the offset.
void write_triples(const QuboProblem& q, std::ostream& out);
QuboProblem read_triples(std::istream& in);

/// Full-precision, locale-independent formatting used by every text output.
std::string format_double(double value);

}  // namespace qroute
