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

#include "jamguard/jamming_detector.hpp"
#include "jamguard/trial.hpp"

#include <boost/math/special_functions/binomial.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <doctest.h>

#include <numbers>

using namespace jamguard;
using big = boost::multiprecision::cpp_bin_float_50;

namespace {

double bound_oracle(int k, int g, double spread)
{
    const big pi = boost::math::constants::pi<big>();
    const big d(spread);
    // Mean angles span pi - d; once that is narrower than d every pair overlaps.
    const big r = (pi - 2 * d) / (pi - d);
    const big pair = 2 * d >= pi ? big(1) : big(1 - r * r);
    const big value = boost::math::binomial_coefficient<big>(k, g) * pow(pair, g - 1);
    return static_cast<double>(value < 1 ? value : big(1));
}

} // namespace

TEST_SUITE("jamming_detector")
{
    TEST_CASE("occurrence counts")
    {
        const std::vector<IndexSet> sets{{0, 1}, {1, 2}, {1, 4}};
        CHECK(rp_occurrence_counts(sets, 6) == std::vector<int>{1, 3, 1, 0, 1, 0});
        const std::vector<IndexSet> empty(4);
        CHECK(rp_occurrence_counts(empty, 5) == std::vector<int>(5, 0));
        const std::vector<IndexSet> same(7, IndexSet{2, 3});
        CHECK(rp_occurrence_counts(same, 5) == std::vector<int>{0, 0, 7, 7, 0});
        const std::vector<IndexSet> bad{{9}};
        CHECK_THROWS_AS(rp_occurrence_counts(bad, 5), ContractError);
    }

    TEST_CASE("common set and verdict")
    {
        const std::vector<IndexSet> sets{{0, 1}, {1, 2}, {1, 4}};
        const auto counts = rp_occurrence_counts(sets, 6);
        const auto q3 = detect_jammer(counts, 3);
        CHECK(q3.common_set == IndexSet{1});
        CHECK(q3.jammer_detected);
        const auto q4 = detect_jammer(counts, 4);
        CHECK(q4.common_set.empty());
        CHECK_FALSE(q4.jammer_detected);
        CHECK_THROWS_AS(detect_jammer(counts, 1), std::domain_error);
    }

    TEST_CASE("common sets are nested in g")
    {
        RngStream rng(3);
        for (int t = 0; t < 200; ++t) {
            std::vector<int> counts(30);
            for (auto &c : counts)
                c = static_cast<int>(rng.uniform(0.0, 11.0));
            for (int g = 2; g < 10; ++g) {
                const auto hi = detect_jammer(counts, g + 1).common_set;
                const auto lo = detect_jammer(counts, g).common_set;
                CHECK(set_difference(hi, lo).empty());
            }
        }
    }

    TEST_CASE("bound at the reference spread")
    {
        const double d = std::numbers::pi / 18;
        CHECK(collision_probability_bound(10, 6, d) == doctest::Approx(4.0766157715901817e-3).epsilon(1e-12));
        CHECK(collision_probability_bound(10, 8, d) == doctest::Approx(1.1390038541021440e-5).epsilon(1e-12));
        CHECK(collision_probability_bound(10, 10, d) == doctest::Approx(3.3002350629508608e-9).epsilon(1e-12));
        CHECK(collision_probability_bound(10, 2, d) == 1.0);
    }

    TEST_CASE("bound matches a 50-digit evaluation")
    {
        for (int k : {2, 5, 10, 40})
            for (int g = 2; g <= k; ++g)
                for (double d : {0.001, 0.05, std::numbers::pi / 18, 0.6, 1.2, 1.6, 3.0}) {
                    CAPTURE(k);
                    CAPTURE(g);
                    CAPTURE(d);
                    const double oracle = bound_oracle(k, g, d);
                    CHECK(testutil::rel_close(collision_probability_bound(k, g, d), oracle, 1e-12));
                }
    }

    TEST_CASE("bound vanishes for narrow spreads")
    {
        CHECK(collision_probability_bound(10, 2, 1e-9) < 1e-7);
        CHECK(collision_probability_bound(10, 6, 1e-6) < 1e-20);
    }

    TEST_CASE("reference operating point detects the jammer")
    {
        SystemConfig cfg;
        const auto grid = build_angular_grid(ArrayGeometry(cfg.antennas));
        const auto pilots = generate_pilot_book(cfg.pilot_length);
        int detected = 0;
        for (int t = 0; t < 100; ++t) {
            const auto scene = draw_scene(cfg, grid, pilots, trial_seed(3, t), 20);
            const auto training = observe_training(scene, grid, pilots, cfg, true);
            detected += detect(training, 20, cfg.rp_threshold(20), 6).outcome.jammer_detected;
        }
        CHECK(detected >= 95);
    }
}
