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

#ifndef JAMGUARD_RESULT_TABLE_HPP
#define JAMGUARD_RESULT_TABLE_HPP

#include <nlohmann/json.hpp>

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace jamguard {

struct ResultRow {
    std::string sweep_param;
    double sweep_value = 0.0;
    std::string arm;
    std::string metric;
    double mean = 0.0;
    double std_error = 0.0;
    int trials = 0;
};

inline constexpr const char *csv_header = "sweep_param,sweep_value,arm,metric,mean,stderr,trials";

struct ResultTable {
    std::vector<ResultRow> rows;
    nlohmann::json metadata = nlohmann::json::object();
    bool passed = true; // validation verdict; always true for plain sweeps

    // Row from per-trial samples: mean and sample std / sqrt(n).
    void add_samples(const std::string &param, double value, const std::string &arm,
                     const std::string &metric, std::span<const double> samples);
    void add(ResultRow row) { rows.push_back(std::move(row)); }

    // Rows matching (arm, metric), in insertion order.
    std::vector<ResultRow> select(const std::string &arm, const std::string &metric) const;
};

// Deterministic CSV: fixed header, rows in insertion order, numbers at 17
// significant digits.
std::string to_csv(const ResultTable &table);

// Parses text produced by to_csv. Throws std::runtime_error on a schema
// mismatch.
ResultTable parse_csv(const std::string &text);

// Writes <stem>.csv and <stem>.json into `directory`, creating it if needed.
void write_result_files(const ResultTable &table, const std::filesystem::path &directory,
                        const std::string &stem);

} // namespace jamguard

#endif
