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

#include "jamguard/result_table.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace jamguard {

void ResultTable::add_samples(const std::string &param, double value, const std::string &arm,
                              const std::string &metric, std::span<const double> samples)
{
    const auto n = static_cast<double>(samples.size());
    double sum = 0.0;
    for (double x : samples)
        sum += x;
    const double mean = samples.empty() ? 0.0 : sum / n;
    double ss = 0.0;
    for (double x : samples)
        ss += (x - mean) * (x - mean);
    const double se = samples.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
    rows.push_back({param, value, arm, metric, mean, se, static_cast<int>(samples.size())});
}

std::vector<ResultRow> ResultTable::select(const std::string &arm, const std::string &metric) const
{
    std::vector<ResultRow> out;
    for (const auto &r : rows)
        if (r.arm == arm && r.metric == metric)
            out.push_back(r);
    return out;
}

namespace {

std::string number(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

std::string to_csv(const ResultTable &table)
{
    std::string out = csv_header;
    out += '\n';
    for (const auto &r : table.rows) {
        out += r.sweep_param + ',' + number(r.sweep_value) + ',' + r.arm + ',' + r.metric + ',' +
               number(r.mean) + ',' + number(r.std_error) + ',' + std::to_string(r.trials) + '\n';
    }
    return out;
}

ResultTable parse_csv(const std::string &text)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != csv_header)
        throw std::runtime_error("CSV header does not match the result schema");
    ResultTable table;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> fields;
        std::istringstream row(line);
        std::string field;
        while (std::getline(row, field, ','))
            fields.push_back(field);
        if (fields.size() != 7)
            throw std::runtime_error("CSV row does not have 7 fields: " + line);
        try {
            table.rows.push_back({fields[0], std::stod(fields[1]), fields[2], fields[3],
                                  std::stod(fields[4]), std::stod(fields[5]), std::stoi(fields[6])});
        } catch (const std::logic_error &) {
            throw std::runtime_error("CSV row has a malformed number: " + line);
        }
    }
    return table;
}

void write_result_files(const ResultTable &table, const std::filesystem::path &directory,
                        const std::string &stem)
{
    std::filesystem::create_directories(directory);
    {
        std::ofstream csv(directory / (stem + ".csv"), std::ios::binary);
        csv << to_csv(table);
        if (!csv)
            throw std::runtime_error("could not write " + (directory / (stem + ".csv")).string());
    }
    std::ofstream meta(directory / (stem + ".json"), std::ios::binary);
    meta << table.metadata.dump(2) << '\n';
    if (!meta)
        throw std::runtime_error("could not write " + (directory / (stem + ".json")).string());
}

} // namespace jamguard
