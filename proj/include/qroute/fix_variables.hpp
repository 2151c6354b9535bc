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
#include <map>
#include <span>
#include <vector>

#include "qroute/qubo.hpp"

namespace qroute {

struct FixReport {
    std::map<std::size_t, std::uint8_t> fixed;  // original index -> value
    QuboProblem reduced;
    double offset_delta = 0;
    std::vector<std::size_t> kept;  // reduced index -> original index

    /// Completes a reduced-problem sample with the fixed values.
    Bits expand(std::span<const std::uint8_t> reduced_bits) const;
};

/// Fixes variables whose optimal value is forced by coefficient dominance, to a fixpoint.
///
/// With a_i the linear term and c_ij the couplings to still-free variables, b_i = 0 is
/// fixed when a_i + sum min(0, c_ij) >= 0 and b_i = 1 when a_i + sum max(0, c_ij) <= 0.
/// Fixed ones are folded into neighbors' linear terms and `offset_delta`; the reduced
/// problem keeps the original offset, so for every completion x of the fixed values,
/// E_original(x) == E_reduced(x restricted to kept) + offset_delta.
FixReport fix_variables(const QuboProblem& q);

}  // namespace qroute
