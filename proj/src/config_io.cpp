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

#include "jamguard/config_io.hpp"

#include <set>
#include <string>

namespace jamguard {

namespace {

using nlohmann::json;

const std::set<std::string> &known_keys()
{
    static const std::set<std::string> keys{
        "antennas",           "users",
        "pilot_length",       "coherence_block",
        "total_subcarriers",  "coherence_subcarriers",
        "detection_subcarriers", "pilot_power_dbw",
        "data_power_dbw",     "jammer_pilot_power_dbw",
        "jammer_data_power_dbw", "noise_power_dbw",
        "angular_spread_rad", "jammer_angular_spread_rad",
        "user_gain_db",       "jammer_gain_db",
        "fap_target",         "explicit_thresholds",
        "detector_g",         "estimator_uses_true_rp_count",
        "seed"};
    return keys;
}

// 0 W has no finite dB value; it is written as null.
double watts_from_db(const json &value)
{
    return value.is_null() ? 0.0 : dbw_to_watts(value.get<double>());
}

json db_from_watts(double watts)
{
    return watts > 0.0 ? json(watts_to_dbw(watts)) : json(nullptr);
}

std::vector<double> per_user_watts(const json &value, int users, const char *key)
{
    if (value.is_number() || value.is_null())
        return std::vector<double>(static_cast<std::size_t>(users), watts_from_db(value));
    if (value.is_array()) {
        if (static_cast<int>(value.size()) != users)
            throw ConfigError(std::string(key) + " needs one entry per user");
        std::vector<double> out;
        for (const auto &v : value)
            out.push_back(watts_from_db(v));
        return out;
    }
    throw ConfigError(std::string(key) + " must be a number or an array");
}

template <class T>
void read(const json &doc, const char *key, T &out)
{
    if (const auto it = doc.find(key); it != doc.end())
        out = it->get<T>();
}

} // namespace

void apply_system_json(SystemConfig &config, const json &doc)
{
    if (!doc.is_object())
        throw ConfigError("system configuration must be a JSON object");
    for (const auto &item : doc.items())
        if (!known_keys().contains(item.key()))
            throw ConfigError("unknown configuration key '" + item.key() + "'");

    try {
        const int old_users = config.users;
        read(doc, "antennas", config.antennas);
        read(doc, "users", config.users);
        if (!doc.contains("pilot_length") && config.users != old_users)
            config.pilot_length = config.users;
        read(doc, "pilot_length", config.pilot_length);
        read(doc, "coherence_block", config.coherence_block);
        read(doc, "total_subcarriers", config.total_subcarriers);
        read(doc, "coherence_subcarriers", config.coherence_subcarriers);
        read(doc, "detection_subcarriers", config.detection_subcarriers);

        if (config.users != old_users) {
            // Resize keeping the first user's power for the new entries.
            const double p_t = config.pilot_power.empty() ? 1.0 : config.pilot_power.front();
            const double p_d = config.data_power.empty() ? 1.0 : config.data_power.front();
            config.set_uniform_user_power(p_t, p_d);
        }
        if (doc.contains("pilot_power_dbw"))
            config.pilot_power = per_user_watts(doc["pilot_power_dbw"], config.users, "pilot_power_dbw");
        if (doc.contains("data_power_dbw"))
            config.data_power = per_user_watts(doc["data_power_dbw"], config.users, "data_power_dbw");

        if (doc.contains("jammer_pilot_power_dbw"))
            config.jammer_pilot_power = watts_from_db(doc["jammer_pilot_power_dbw"]);
        if (doc.contains("jammer_data_power_dbw"))
            config.jammer_data_power = watts_from_db(doc["jammer_data_power_dbw"]);
        if (doc.contains("noise_power_dbw"))
            config.noise_power = watts_from_db(doc["noise_power_dbw"]);
        read(doc, "angular_spread_rad", config.angular_spread);
        read(doc, "jammer_angular_spread_rad", config.jammer_angular_spread);
        if (doc.contains("user_gain_db"))
            config.user_gain = watts_from_db(doc["user_gain_db"]);
        if (doc.contains("jammer_gain_db"))
            config.jammer_gain = watts_from_db(doc["jammer_gain_db"]);
        read(doc, "fap_target", config.fap_target);
        if (doc.contains("explicit_thresholds")) {
            config.explicit_thresholds.clear();
            for (const auto &item : doc["explicit_thresholds"].items())
                config.explicit_thresholds[std::stoi(item.key())] = item.value().get<double>();
        }
        read(doc, "detector_g", config.detector_g);
        read(doc, "estimator_uses_true_rp_count", config.estimator_uses_true_rp_count);
        read(doc, "seed", config.seed);
    } catch (const json::exception &e) {
        throw ConfigError(std::string("malformed configuration value: ") + e.what());
    } catch (const std::invalid_argument &) {
        throw ConfigError("explicit_thresholds keys must be integers");
    }
    config.validate();
}

SystemConfig system_config_from_json(const json &doc)
{
    SystemConfig config;
    apply_system_json(config, doc);
    return config;
}

json system_config_to_json(const SystemConfig &config)
{
    json pilot = json::array();
    json data = json::array();
    for (double p : config.pilot_power)
        pilot.push_back(db_from_watts(p));
    for (double p : config.data_power)
        data.push_back(db_from_watts(p));
    json thresholds = json::object();
    for (const auto &[nd, eps] : config.explicit_thresholds)
        thresholds[std::to_string(nd)] = eps;

    return json{
        {"antennas", config.antennas},
        {"users", config.users},
        {"pilot_length", config.pilot_length},
        {"coherence_block", config.coherence_block},
        {"total_subcarriers", config.total_subcarriers},
        {"coherence_subcarriers", config.coherence_subcarriers},
        {"detection_subcarriers", config.detection_subcarriers},
        {"pilot_power_dbw", pilot},
        {"data_power_dbw", data},
        {"jammer_pilot_power_dbw", db_from_watts(config.jammer_pilot_power)},
        {"jammer_data_power_dbw", db_from_watts(config.jammer_data_power)},
        {"noise_power_dbw", db_from_watts(config.noise_power)},
        {"angular_spread_rad", config.angular_spread},
        {"jammer_angular_spread_rad", config.jammer_angular_spread},
        {"user_gain_db", db_from_watts(config.user_gain)},
        {"jammer_gain_db", db_from_watts(config.jammer_gain)},
        {"fap_target", config.fap_target},
        {"explicit_thresholds", thresholds},
        {"detector_g", config.detector_g},
        {"estimator_uses_true_rp_count", config.estimator_uses_true_rp_count},
        {"seed", config.seed},
    };
}

} // namespace jamguard
