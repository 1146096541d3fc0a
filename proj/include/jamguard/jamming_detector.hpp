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

#ifndef JAMGUARD_JAMMING_DETECTOR_HPP
#define JAMGUARD_JAMMING_DETECTOR_HPP

#include "jamguard/types.hpp"

#include <span>
#include <vector>

namespace jamguard {

// R(i): number of sets that contain RP i. Throws ContractError for an index
// outside [0, rp_count).
std::vector<int> rp_occurrence_counts(std::span<const IndexSet> sets, int rp_count);

struct DetectionOutcome {
    std::vector<int> occurrence_counts;
    IndexSet common_set; // Q_g; also the estimate of the jammer's RPs
    bool jammer_detected = false;
    int min_pilots = 0;  // g
};

// Q_g = { i : R(i) >= g }; a jammer is declared when Q_g is non-empty.
DetectionOutcome detect_jammer(std::span<const int> counts, int min_pilots);

// Upper bound on the probability that some g of K users share an active RP
// with no jammer present:
//   min(1, C(K, g) (1 - ((pi - 2 Delta) / (pi - Delta))^2)^(g - 1)).
// Evaluated in log space.
double collision_probability_bound(int users, int min_pilots, double spread);

} // namespace jamguard

#endif
