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

#ifndef JAMGUARD_TEST_HELPERS_HPP
#define JAMGUARD_TEST_HELPERS_HPP

#include <cmath>
#include <vector>

namespace testutil {

struct MeanSe {
    double mean;
    double se;
};

inline MeanSe mean_se(const std::vector<double> &x)
{
    double s = 0.0, ss = 0.0;
    for (double v : x)
        s += v;
    const double n = static_cast<double>(x.size());
    const double m = s / n;
    for (double v : x)
        ss += (v - m) * (v - m);
    return {m, std::sqrt(ss / (n - 1.0) / n)};
}

inline bool rel_close(double a, double b, double tol)
{
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

} // namespace testutil

#endif
