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

#include "jamguard/config.hpp"

#include "jamguard/rp_detector.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace jamguard {

double dbw_to_watts(double dbw)
{
    return std::pow(10.0, dbw / 10.0);
}

double watts_to_dbw(double watts)
{
    return 10.0 * std::log10(watts);
}

SystemConfig::SystemConfig()
    : pilot_power(10, 1.0), data_power(10, 1.0), noise_power(dbw_to_watts(-25.0)),
      angular_spread(std::numbers::pi / 18.0), jammer_angular_spread(std::numbers::pi / 18.0)
{
}

void SystemConfig::set_uniform_user_power(double pilot_watts, double data_watts)
{
    pilot_power.assign(static_cast<std::size_t>(users), pilot_watts);
    data_power.assign(static_cast<std::size_t>(users), data_watts);
}

double SystemConfig::rp_threshold(int subcarriers) const
{
    if (const auto it = explicit_thresholds.find(subcarriers); it != explicit_thresholds.end())
        return it->second;
    return threshold_for_fap(subcarriers, noise_power, fap_target);
}

void SystemConfig::validate() const
{
    auto fail = [](const std::string &what) { throw ConfigError(what); };
    if (antennas < 2)
        fail("antennas must be at least 2");
    if (users < 1)
        fail("users must be at least 1");
    if (pilot_length != users)
        fail("pilot_length must equal users");
    if (coherence_block <= pilot_length)
        fail("coherence_block must exceed pilot_length");
    if (total_subcarriers < 1 || coherence_subcarriers < 1)
        fail("subcarrier counts must be positive");
    if (detection_subcarriers < 1 || detection_subcarriers > estimated_subcarriers())
        fail("detection_subcarriers must lie in [1, total_subcarriers / coherence_subcarriers]");
    if (static_cast<int>(pilot_power.size()) != users || static_cast<int>(data_power.size()) != users)
        fail("pilot and data powers need one entry per user");
    for (double p : pilot_power)
        if (!(p >= 0.0))
            fail("pilot powers must be non-negative");
    for (double p : data_power)
        if (!(p >= 0.0))
            fail("data powers must be non-negative");
    if (!(jammer_pilot_power >= 0.0) || !(jammer_data_power >= 0.0))
        fail("jammer powers must be non-negative");
    if (!(noise_power > 0.0))
        fail("noise power must be positive");
    if (!(angular_spread > 0.0 && angular_spread < std::numbers::pi))
        fail("angular_spread must lie in (0, pi)");
    if (!(jammer_angular_spread > 0.0 && jammer_angular_spread < std::numbers::pi))
        fail("jammer_angular_spread must lie in (0, pi)");
    if (!(user_gain > 0.0) || !(jammer_gain > 0.0))
        fail("large-scale gains must be positive");
    if (!(fap_target > 0.0 && fap_target < 1.0))
        fail("fap_target must lie in (0, 1)");
    for (const auto &[nd, eps] : explicit_thresholds)
        if (nd < 1 || !(eps > 0.0))
            fail("explicit thresholds need N_d >= 1 and a positive epsilon");
    if (users >= 2 && (detector_g < 2 || detector_g > users))
        fail("detector_g must lie in [2, users]");
}

} // namespace jamguard
