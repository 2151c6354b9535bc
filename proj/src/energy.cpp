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

#include "qroute/energy.hpp"

#include <cmath>

#include "qroute/errors.hpp"

namespace qroute {

double EnergyParams::d0() const { return std::sqrt(eps_fs / eps_mp); }

double amplifier_energy_per_bit(double distance, const EnergyParams& p) {
    if (!(distance >= 0)) throw InvalidInput("distance must be non-negative");
    if (distance < p.d0()) return p.eps_fs * distance * distance;
    double d2 = distance * distance;
    return p.eps_mp * d2 * d2;
}

double tx_energy(double bits, double distance, const EnergyParams& p) {
    if (!(bits >= 0)) throw InvalidInput("bit count must be non-negative");
    return bits * p.e_elec + bits * amplifier_energy_per_bit(distance, p);
}

double rx_energy(double bits, const EnergyParams& p) {
    if (!(bits >= 0)) throw InvalidInput("bit count must be non-negative");
    return bits * p.e_elec;
}

double edge_energy_per_bit(double distance, const EnergyParams& p) {
    return amplifier_energy_per_bit(distance, p) + 2 * p.e_elec;
}

}  // namespace qroute
