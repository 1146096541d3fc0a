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

#ifndef JAMGUARD_CONFIG_IO_HPP
#define JAMGUARD_CONFIG_IO_HPP

#include "jamguard/config.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace jamguard {

// JSON keys mirror SystemConfig fields one-to-one; powers and gains are given
// in dBW / dB and converted here. Missing keys keep their defaults, unknown
// keys throw ConfigError. Per-user powers accept a scalar or a K-entry array.
//
//   antennas, users, pilot_length, coherence_block, total_subcarriers,
//   coherence_subcarriers, detection_subcarriers, pilot_power_dbw,
//   data_power_dbw, jammer_pilot_power_dbw, jammer_data_power_dbw,
//   noise_power_dbw, angular_spread_rad, jammer_angular_spread_rad,
//   user_gain_db, jammer_gain_db, fap_target, explicit_thresholds,
//   detector_g, estimator_uses_true_rp_count, seed
void apply_system_json(SystemConfig &config, const nlohmann::json &doc);

SystemConfig system_config_from_json(const nlohmann::json &doc);

// Snapshot that reloads to the same configuration.
nlohmann::json system_config_to_json(const SystemConfig &config);

} // namespace jamguard

#endif
