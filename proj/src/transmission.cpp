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

#include "jamguard/transmission.hpp"

#include <cmath>
#include <numbers>

namespace jamguard {

PilotBook generate_pilot_book(int tau)
{
    if (tau < 1)
        throw ContractError("pilot length must be positive");
    CMatrix s(tau, tau);
    const double scale = 1.0 / std::sqrt(static_cast<double>(tau));
    for (int r = 0; r < tau; ++r)
        for (int c = 0; c < tau; ++c)
            s(r, c) = std::polar(scale, -2.0 * std::numbers::pi * r * c / tau);
    return PilotBook{std::move(s)};
}

JammerPilot generate_jammer_pilot(RngStream &rng, const PilotBook &pilots, int subcarriers)
{
    const int tau = pilots.length();
    JammerPilot out{CMatrix(tau, subcarriers), CMatrix(tau, subcarriers)};
    rng.fill_complex_normal(out.sequences, 1.0 / tau);
    // gamma_k^n = (s_w^n)^H s_k for every pilot k
    out.correlations = pilots.sequences.transpose() * out.sequences.conjugate();
    return out;
}

namespace {

void check_users(std::span<const ChannelRealization> users, const PilotBook &pilots,
                 const SystemConfig &config)
{
    if (static_cast<int>(users.size()) != config.users)
        throw ContractError("user channel count differs from configured K");
    if (pilots.length() != config.pilot_length)
        throw ContractError("pilot book length differs from configured tau");
    if (config.users > pilots.length())
        throw ContractError("more users than orthogonal pilots");
    if (static_cast<int>(config.pilot_power.size()) != config.users ||
        static_cast<int>(config.data_power.size()) != config.users)
        throw ContractError("per-user power vectors must have K entries");
    for (const auto &u : users) {
        if (u.channels.rows() != config.antennas)
            throw ContractError("channel length differs from configured M");
        if (u.subcarriers() != users.front().subcarriers())
            throw ContractError("users disagree on subcarrier count");
    }
}

} // namespace

TrainingObservation simulate_training(RngStream &noise_rng,
                                      std::span<const ChannelRealization> users,
                                      const JammerSignal *jammer, const PilotBook &pilots,
                                      const SystemConfig &config)
{
    check_users(users, pilots, config);
    const int m_count = config.antennas;
    const int k_count = config.users;
    const int tau = pilots.length();
    const int subcarriers = users.front().subcarriers();
    if (jammer != nullptr &&
        (jammer->channel.subcarriers() != subcarriers ||
         jammer->pilot.sequences.cols() != subcarriers || jammer->channel.channels.rows() != m_count))
        throw ContractError("jammer dimensions differ from user channels");

    const CMatrix used_pilots_h = pilots.sequences.leftCols(k_count).adjoint(); // K x tau

    TrainingObservation out;
    out.received.reserve(subcarriers);
    out.despread.reserve(subcarriers);
    CMatrix scaled(m_count, k_count);
    for (int n = 0; n < subcarriers; ++n) {
        for (int k = 0; k < k_count; ++k)
            scaled.col(k) = std::sqrt(tau * config.pilot_power[k]) * users[k].channels.col(n);

        CMatrix y(m_count, tau);
        noise_rng.fill_complex_normal(y, config.noise_power);
        y.noalias() += scaled * used_pilots_h;
        if (jammer != nullptr) {
            y.noalias() += std::sqrt(tau * config.jammer_pilot_power) *
                           jammer->channel.channels.col(n) *
                           jammer->pilot.sequences.col(n).adjoint();
        }
        out.despread.push_back(y * pilots.sequences);
        out.received.push_back(std::move(y));
    }
    return out;
}

DataObservation simulate_data(RngStream &rng, std::span<const ChannelRealization> users,
                              const ChannelRealization *jammer, const SystemConfig &config)
{
    if (static_cast<int>(users.size()) != config.users)
        throw ContractError("user channel count differs from configured K");
    const int m_count = config.antennas;
    const int subcarriers = users.front().subcarriers();

    DataObservation out{CMatrix(m_count, subcarriers), CMatrix(config.users, subcarriers),
                        CVector::Zero(subcarriers)};
    rng.fill_complex_normal(out.user_symbols);
    if (jammer != nullptr)
        for (int n = 0; n < subcarriers; ++n)
            out.jammer_symbols[n] = rng.complex_normal();
    rng.fill_complex_normal(out.received, config.noise_power);

    for (int n = 0; n < subcarriers; ++n) {
        for (int k = 0; k < config.users; ++k)
            out.received.col(n) +=
                (std::sqrt(config.data_power[k]) * out.user_symbols(k, n)) * users[k].channels.col(n);
        if (jammer != nullptr)
            out.received.col(n) += (std::sqrt(config.jammer_data_power) * out.jammer_symbols[n]) *
                                   jammer->channels.col(n);
    }
    return out;
}

} // namespace jamguard
