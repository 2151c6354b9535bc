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

#include <cfloat>
#include <cmath>

namespace qroute::testing {

// Values worked out in exact decimal arithmetic from the radio constants, then rounded.
struct TxCase {
    double bits;
    double distance;
    double expected;
};

inline constexpr TxCase kTxCases[] = {
    {1, 0, 5e-08},
    {1, 10, 5.1e-08},
    {1, 50, 7.5e-08},
    {4000, 25.5, 0.00022601},
    {1, 87, 1.2569e-07},
    {1, 87.7, 1.269129e-07},
    {1, 87.705, 1.2692167025e-07},
    {1, 87.71, 1.2693780578190827e-07},
    {1, 100, 1.8e-07},
    {2000, 120, 0.000639136},
    {8, 141.42, 4.559840423930349e-06},
    {3, 1, 1.5003e-07},
    {512, 60, 4.4032e-05},
    {1000, 200, 0.00213},
};

struct RxCase {
    double bits;
    double expected;
};

inline constexpr RxCase kRxCases[] = {
    {0, 0.0}, {1, 5e-08}, {8, 4e-07}, {1000, 5e-05}, {4096, 0.0002048}, {3, 1.5e-07},
};

/// Relative agreement within a few units in the last place.
inline bool within_ulps(double actual, double expected, int ulps = 4) {
    return std::abs(actual - expected) <= ulps * DBL_EPSILON * std::abs(expected);
}

}  // namespace qroute::testing
