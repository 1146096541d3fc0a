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

#include "jamguard/jamming_detector.hpp"

#include "jamguard/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jamguard {

std::vector<int> rp_occurrence_counts(std::span<const IndexSet> sets, int rp_count)
{
    std::vector<int> counts(static_cast<std::size_t>(rp_count), 0);
    for (const auto &set : sets) {
        for (int i : set) {
            if (i < 0 || i >= rp_count)
                throw ContractError("RP index outside the grid");
            ++counts[static_cast<std::size_t>(i)];
        }
    }
    return counts;
}

DetectionOutcome detect_jammer(std::span<const int> counts, int min_pilots)
{
    if (min_pilots < 2)
        throw std::domain_error("detector parameter g must be at least 2");
    DetectionOutcome out;
    out.occurrence_counts.assign(counts.begin(), counts.end());
    out.min_pilots = min_pilots;
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] >= min_pilots)
            out.common_set.push_back(static_cast<int>(i));
    out.jammer_detected = !out.common_set.empty();
    return out;
}

double collision_probability_bound(int users, int min_pilots, double spread)
{
    if (min_pilots < 2 || min_pilots > users)
        throw std::domain_error("bound needs 2 <= g <= K");
    if (!(spread > 0.0 && spread < std::numbers::pi))
        throw std::domain_error("bound needs 0 < spread < pi");

    const double pi = std::numbers::pi;
    const double ratio = (pi - 2.0 * spread) / (pi - spread);
    // 1 - r^2 = (1 - r)(1 + r) with 1 - r = spread / (pi - spread), free of
    // cancellation for small spreads. Past pi/2 the mean-angle interval is
    // narrower than the spread and every pair of spans overlaps.
    const double pair_overlap =
        spread >= pi / 2.0 ? 1.0 : spread / (pi - spread) * (1.0 + ratio);
    const double log_bound =
        log_binomial(users, min_pilots) + (min_pilots - 1) * std::log(pair_overlap);
    return std::min(1.0, std::exp(log_bound));
}

} // namespace jamguard
