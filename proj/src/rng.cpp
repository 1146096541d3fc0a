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

#include "jamguard/rng.hpp"

#include <cmath>

namespace jamguard {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index)
{
    return splitmix64(splitmix64(master_seed) ^ (trial_index * 0xd1b54a32d192ed03ULL));
}

RngStream::RngStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

RngStream RngStream::for_trial(std::uint64_t trial_seed, StreamTag tag)
{
    return RngStream(trial_seed ^ splitmix64(static_cast<std::uint64_t>(tag)));
}

double RngStream::uniform(double lo, double hi)
{
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(engine_);
}

double RngStream::standard_normal()
{
    return normal_(engine_);
}

cplx RngStream::complex_normal(double variance)
{
    const double s = std::sqrt(0.5 * variance);
    const double re = normal_(engine_);
    const double im = normal_(engine_);
    return {s * re, s * im};
}

void RngStream::fill_complex_normal(CMatrix &out, double variance)
{
    for (Eigen::Index c = 0; c < out.cols(); ++c)
        for (Eigen::Index r = 0; r < out.rows(); ++r)
            out(r, c) = complex_normal(variance);
}

} // namespace jamguard
