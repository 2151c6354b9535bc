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

namespace qroute {

/// First-order radio model constants. All values in SI units (J/bit, J/bit/m^2, J/bit/m^4).
struct EnergyParams {
    double e_elec = 50e-9;
    double eps_fs = 10e-12;
    double eps_mp = 0.0013e-12;

    /// Crossover distance between the free-space and multipath branches, in meters.
    double d0() const;
};

/// Energy to transmit `bits` over `distance` meters.
/// The free-space d^2 term applies strictly below d0; d >= d0 uses the d^4 term.
double tx_energy(double bits, double distance, const EnergyParams& p = {});

/// Energy to receive `bits`.
double rx_energy(double bits, const EnergyParams& p = {});

/// Amplifier term alone: eps_fs*d^2 below d0, eps_mp*d^4 otherwise (J/bit).
double amplifier_energy_per_bit(double distance, const EnergyParams& p = {});

/// Cost of relaying one bit across one edge: transmit plus receive.
double edge_energy_per_bit(double distance, const EnergyParams& p = {});

}  // namespace qroute
