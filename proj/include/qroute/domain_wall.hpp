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
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qroute/network.hpp"
#include "qroute/paths.hpp"
#include "qroute/qubo.hpp"
#include "qroute/qubo_builder.hpp"

namespace qroute {

/// constant + sum coeff * y over domain-wall variables.
struct LinearExpr {
    double constant = 0;
    std::vector<std::pair<std::size_t, double>> terms;
};

struct StreamEncoding {
    std::size_t options = 0;               // K
    std::vector<std::size_t> onehot_vars;  // K indices in the one-hot problem, route order
    std::vector<std::size_t> wall_vars;    // K-1 indices in the domain-wall problem
};

/// Correspondence between a one-hot problem and its domain-wall translation.
///
/// With virtual boundary bits y_{-1} = 1 and y_{K-1} = 0, option i of a stream maps to
/// x_i = y_{i-1} - y_i, so the K indicators sum to one for every bit string. Valid
/// strings are the monotone ones 1..10..0 and the selected option is the number of
/// leading ones. Slack variables pass through unchanged, after the wall variables.
struct EncodingMap {
    std::vector<StreamEncoding> streams;
    std::vector<std::pair<std::size_t, std::size_t>> passthrough;  // one-hot idx -> dw idx
    std::vector<LinearExpr> substitution;                          // per one-hot variable
    std::size_t num_onehot = 0;
    std::size_t num_domain_wall = 0;
};

/// Builds the map from the PathVar/SlackVar metadata of a one-hot problem.
/// Throws InvalidInput if the metadata is missing or a stream's routes are not 0..K-1.
EncodingMap make_encoding_map(const QuboProblem& onehot);

/// lambda * sum_i y_{i+1} (1 - y_i) over K-1 variables: zero exactly on the K monotone
/// non-increasing strings, at least lambda on every other string. K < 2 is rejected.
QuboProblem dw_penalty(std::size_t options, double lambda);

/// Replaces every stream's one-hot block by its domain-wall form: removes the
/// lambda2 (sum x - 1)^2 terms, substitutes x_i = y_{i-1} - y_i into the remaining
/// quadratic form and adds dw_penalty per stream. Energies of jointly valid states are
/// preserved exactly (up to rounding). Diagonal entries are treated as linear terms.
QuboProblem substitute(const QuboProblem& onehot, const EncodingMap& em, double lambda_dw);

/// Default wall penalty: twice the spread of the substituted objective over all bit
/// strings, plus 2 * lambda1 * rate^2 * (constrained edges on a middle route) for the
/// worst stream. Every invalid string then costs more than the constrained optimum.
double default_domain_wall_penalty(const NetworkInstance& net, const RouteTable& rt,
                                   const QuboLayout& layout, double lambda1);

/// Option selected by a K-1 bit wall string, or nullopt if it is not monotone.
std::optional<std::size_t> decode_option(std::span<const std::uint8_t> wall_bits);
/// K-1 bit string selecting `option` (option leading ones).
Bits encode_option(std::size_t options, std::size_t option);

struct DecodeResult {
    std::vector<std::size_t> options;         // per stream, valid only when ok()
    std::optional<std::size_t> invalid_stream;
    bool ok() const { return !invalid_stream.has_value(); }
};

/// Decodes a full domain-wall problem sample into per-stream options.
DecodeResult decode(std::span<const std::uint8_t> bits, const EncodingMap& em);

/// Maps a one-hot problem sample to the domain-wall problem. Requires every stream
/// block to be one-hot valid.
Bits to_domain_wall(std::span<const std::uint8_t> onehot_bits, const EncodingMap& em);

}  // namespace qroute
