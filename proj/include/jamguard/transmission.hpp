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

#ifndef JAMGUARD_TRANSMISSION_HPP
#define JAMGUARD_TRANSMISSION_HPP

#include "jamguard/channel_model.hpp"
#include "jamguard/config.hpp"
#include "jamguard/rng.hpp"
#include "jamguard/types.hpp"

#include <span>
#include <vector>

namespace jamguard {

// Orthonormal pilot sequences, column k is pilot s_k.
struct PilotBook {
    CMatrix sequences; // tau x tau, unitary

    int length() const { return static_cast<int>(sequences.rows()); }
};

// Normalized DFT matrix; deterministic.
PilotBook generate_pilot_book(int tau);

// Jammer training sequence per subcarrier, s_w ~ CN(0, I / tau), and its
// correlation gamma_k = s_w^H s_k with every pilot.
struct JammerPilot {
    CMatrix sequences;    // tau x N_d
    CMatrix correlations; // tau x N_d
};

JammerPilot generate_jammer_pilot(RngStream &rng, const PilotBook &pilots, int subcarriers);

struct JammerSignal {
    const ChannelRealization &channel;
    const JammerPilot &pilot;
};

struct TrainingObservation {
    std::vector<CMatrix> received; // per subcarrier, M x tau block Y_t
    std::vector<CMatrix> despread; // per subcarrier, column k is y_{t,k} = Y_t s_k

    int subcarriers() const { return static_cast<int>(received.size()); }
    auto despread_pilot(int k, int n) const { return despread[n].col(k); }
};

// Pilot-phase reception over all subcarriers of the channel realizations:
//   Y_t = sum_k sqrt(tau p_{t,k}) h_k s_k^H + sqrt(tau q_t) h_w s_w^H + Z_t,
// with Z_t entries CN(0, sigma^2) drawn from `noise_rng`. `jammer` may be null.
TrainingObservation simulate_training(RngStream &noise_rng,
                                      std::span<const ChannelRealization> users,
                                      const JammerSignal *jammer, const PilotBook &pilots,
                                      const SystemConfig &config);

struct DataObservation {
    CMatrix received;      // M x N_d
    CMatrix user_symbols;  // K x N_d
    CVector jammer_symbols; // N_d, zero when the jammer is absent
};

// Data-phase reception y_d = sum_k sqrt(p_{d,k}) h_k x_k + sqrt(q_d) h_w x_w + z_d.
DataObservation simulate_data(RngStream &rng, std::span<const ChannelRealization> users,
                              const ChannelRealization *jammer, const SystemConfig &config);

} // namespace jamguard

#endif
