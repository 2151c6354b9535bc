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

#include <cfloat>
#include <cmath>

#include "catch_amalgamated.hpp"
#include "qroute/energy.hpp"
#include "qroute/errors.hpp"
#include "energy_cases.hpp"

namespace qroute {

using testing::kRxCases;
using testing::kTxCases;
using testing::within_ulps;

TEST_CASE("Crossover distance", "[energy]") {
    EnergyParams p;
    CHECK(std::abs(p.d0() - 87.7058) < 1e-3);
    CHECK(p.d0() * p.d0() == Catch::Approx(p.eps_fs / p.eps_mp));
}

TEST_CASE("Transmit and receive energies", "[energy]") {
    for (const auto& c : kTxCases) {
        CAPTURE(c.bits, c.distance);
        CHECK(within_ulps(tx_energy(c.bits, c.distance), c.expected));
    }
    for (const auto& c : kRxCases) {
        CAPTURE(c.bits);
        CHECK(within_ulps(rx_energy(c.bits), c.expected));
    }
}

TEST_CASE("Edge relay cost", "[energy]") {
    CHECK(within_ulps(edge_energy_per_bit(50), 1.25e-07));
    CHECK(edge_energy_per_bit(87.7058) == Catch::Approx(1.7692e-7).epsilon(1e-4));
    CHECK(edge_energy_per_bit(0) == 2 * EnergyParams{}.e_elec);
}

TEST_CASE("Amplifier branch selection", "[energy]") {
    EnergyParams p;
    const double d0 = p.d0();
    SECTION("below the crossover the d^2 term applies") {
        for (double d : {0.0, 1.0, 42.0, 87.0, std::nextafter(d0, 0.0)}) {
            CHECK(amplifier_energy_per_bit(d) == p.eps_fs * d * d);
        }
    }
    SECTION("at and above the crossover the d^4 term applies") {
        for (double d : {d0, 87.71, 100.0, 250.0}) {
            CHECK(amplifier_energy_per_bit(d) == p.eps_mp * (d * d) * (d * d));
        }
    }
    SECTION("custom constants move the crossover") {
        EnergyParams q;
        q.eps_fs = 4e-12;
        q.eps_mp = 1e-15;
        CHECK(q.d0() == Catch::Approx(std::sqrt(4000.0)));
        CHECK(amplifier_energy_per_bit(70, q) == q.eps_mp * (70.0 * 70.0) * (70.0 * 70.0));
    }
}

TEST_CASE("Energy input validation", "[energy]") {
    CHECK_THROWS_AS(tx_energy(-1, 10), InvalidInput);
    CHECK_THROWS_AS(tx_energy(1, -10), InvalidInput);
    CHECK_THROWS_AS(rx_energy(-2), InvalidInput);
    CHECK_THROWS_AS(edge_energy_per_bit(std::nan("")), InvalidInput);
}

}  // namespace qroute
