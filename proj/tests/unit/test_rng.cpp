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

#include "helpers.hpp"

#include "jamguard/rng.hpp"
#include "jamguard/types.hpp"

#include <doctest.h>

using namespace jamguard;

TEST_SUITE("rng")
{
    TEST_CASE("streams are reproducible and distinct")
    {
        auto a = RngStream::for_trial(trial_seed(1, 4), StreamTag::geometry);
        auto b = RngStream::for_trial(trial_seed(1, 4), StreamTag::geometry);
        auto c = RngStream::for_trial(trial_seed(1, 4), StreamTag::training_noise);
        auto d = RngStream::for_trial(trial_seed(1, 5), StreamTag::geometry);
        const double x = a.standard_normal();
        CHECK(x == b.standard_normal());
        CHECK(x != c.standard_normal());
        CHECK(x != d.standard_normal());
    }

    TEST_CASE("complex normal variance")
    {
        RngStream rng(10);
        std::vector<double> p, re;
        for (int i = 0; i < 20000; ++i) {
            const cplx z = rng.complex_normal(2.0);
            p.push_back(std::norm(z));
            re.push_back(z.real());
        }
        const auto s = testutil::mean_se(p);
        CHECK(std::abs(s.mean - 2.0) <= 3 * s.se);
        const auto r = testutil::mean_se(re);
        CHECK(std::abs(r.mean) <= 3 * r.se);
    }

    TEST_CASE("set helpers")
    {
        CHECK(set_difference({1, 2, 3}, {2}) == IndexSet{1, 3});
        CHECK(set_intersection({1, 2, 3}, {2, 3, 4}) == IndexSet{2, 3});
        CHECK(set_union({1, 5}, {2}) == IndexSet{1, 2, 5});
        CHECK(intersection_size({1, 2, 3}, {3, 4}) == 1);
        CHECK(contains({1, 4}, 4));
        CHECK(to_one_based({0, 9}) == std::vector<int>{1, 10});
    }
}
