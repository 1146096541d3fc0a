// SPDX-License-Identifier: Apache-2.0
//
// jamguard: direction-based jamming detection and suppression for mmWave massive MIMO
// Copyright (C) 2026 The jamguard authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef JAMGUARD_CONFIG_HPP
#define JAMGUARD_CONFIG_HPP

#include "jamguard/types.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace jamguard {

double dbw_to_watts(double dbw);
double watts_to_dbw(double watts);

// Single-cell uplink configuration. All powers and gains are linear (watts,
// power ratios); dB values are converted once when a config is parsed.
// Defaults are the reference operating point: M=200, K=tau=10, T=200,
// p=0 dBW, sigma^2=-25 dBW, beta=0 dB, spread pi/18, g=6, N_d=20.
struct SystemConfig {
    int antennas = 200;               // M
    int users = 10;                   // K
    int pilot_length = 10;            // tau, equal to K
    int coherence_block = 200;        // T in symbols
    int total_subcarriers = 1024;     // N
    int coherence_subcarriers = 16;   // N_c
    int detection_subcarriers = 20;   // N_d <= N / N_c

    std::vector<double> pilot_power; // p_{t,k}, one per user
    std::vector<double> data_power;  // p_{d,k}, one per user
    double jammer_pilot_power = 1.0; // q_t
    double jammer_data_power = 1.0;  // q_d
    double noise_power;              // sigma_z^2

    double angular_spread;           // user spread Delta
    double jammer_angular_spread;    // Delta_w
    double user_gain = 1.0;          // beta_k, shared by all users
    double jammer_gain = 1.0;        // beta_w

    double fap_target = 1e-3;        // eta
    // Explicit per-RP thresholds keyed by N_d. N_d values without an entry
    // derive the threshold from fap_target.
    std::map<int, double> explicit_thresholds{{1, 0.02}, {20, 0.11}};
    int detector_g = 6;
    // Whether the estimator's power scale uses the true active-RP count or
    // the size of the estimated user set.
    bool estimator_uses_true_rp_count = true;
    std::uint64_t seed = 1;

    SystemConfig();

    int estimated_subcarriers() const { return total_subcarriers / coherence_subcarriers; }

    // Same power for every user.
    void set_uniform_user_power(double pilot_watts, double data_watts);

    // Threshold epsilon applied to the summed RP energy for `subcarriers` terms.
    double rp_threshold(int subcarriers) const;

    // Throws ConfigError on any violated invariant.
    void validate() const;
};

} // namespace jamguard

#endif
