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

#ifndef JAMGUARD_RNG_HPP
#define JAMGUARD_RNG_HPP

#include "jamguard/types.hpp"

#include <cstdint>
#include <random>

namespace jamguard {

// Independent sub-streams of one Monte-Carlo trial. Keeping them separate
// lets experiment arms share draws (common random numbers).
enum class StreamTag : std::uint64_t {
    geometry = 1,
    user_channels = 2,
    jammer_channel = 3,
    jammer_pilot = 4,
    training_noise = 5,
    data = 6,
    validation = 7,
};

std::uint64_t splitmix64(std::uint64_t x);

// Seed of trial `trial_index` under `master_seed`. Independent of sweep point
// and thread count.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    static RngStream for_trial(std::uint64_t trial_seed, StreamTag tag);

    double uniform(double lo, double hi);
    double standard_normal();
    // Circularly-symmetric complex Gaussian CN(0, variance).
    cplx complex_normal(double variance = 1.0);
    void fill_complex_normal(CMatrix &out, double variance = 1.0);

    std::mt19937_64 &engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace jamguard

#endif
