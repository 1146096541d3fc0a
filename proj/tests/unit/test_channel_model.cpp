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

#include "jamguard/channel_model.hpp"
#include "jamguard/rng.hpp"

#include <doctest.h>

#include <numbers>

using namespace jamguard;

namespace {
const double spread = std::numbers::pi / 18;
}

TEST_SUITE("channel_model")
{
    TEST_CASE("broadside terminal at the reference point")
    {
        const auto grid = build_angular_grid(ArrayGeometry(200));
        const auto t = make_terminal(grid, 0.0, spread, 1.0);
        CHECK(t.active_rp_count() == 18);
        CHECK(t.power_scale == doctest::Approx(200.0 / 18.0).epsilon(1e-14));
    }

    TEST_CASE("support size shrinks away from broadside")
    {
        const auto grid = build_angular_grid(ArrayGeometry(200));
        for (double mean = -1.48; mean <= 1.48; mean += 0.02) {
            const auto t = make_terminal(grid, mean, spread, 1.0);
            CHECK(t.active_rp_count() >= 1);
            CHECK(t.active_rp_count() <= 18);
        }
        CHECK(make_terminal(grid, 1.0, spread, 1.0).active_rp_count() < 18);
    }

    TEST_CASE("full span activates every RP")
    {
        const auto grid = build_angular_grid(ArrayGeometry(12));
        const auto t = make_terminal(grid, 0.0, std::numbers::pi, 2.0);
        CHECK(t.active_rp_count() == 12);
        CHECK(t.power_scale == doctest::Approx(2.0));
    }

    TEST_CASE("empty support is a configuration error")
    {
        const auto grid = build_angular_grid(ArrayGeometry(4));
        CHECK_THROWS_AS(make_terminal(grid, 0.0, 0.4, 1.0), ConfigError);
    }

    TEST_CASE("sampled mean angles stay inside the admissible interval")
    {
        const auto grid = build_angular_grid(ArrayGeometry(200));
        RngStream rng(11);
        const double limit = std::numbers::pi / 2 - spread / 2;
        for (int i = 0; i < 2000; ++i) {
            const auto t = sample_terminal(rng, grid, spread, 1.0);
            CHECK(std::abs(t.mean_angle) <= limit);
            CHECK(!t.active_rps.empty());
        }
    }

    TEST_CASE("channel lives on its support")
    {
        const auto grid = build_angular_grid(ArrayGeometry(16));
        const auto t = make_terminal(grid, 0.0, 0.3, 1.0);
        RngStream rng(5);
        const auto ch = draw_channel(rng, t, grid, 3);
        CHECK(has_common_support(ch, t.active_rps));
        for (int n = 0; n < 3; ++n) {
            const CMatrix image = grid.basis().adjoint() * ch.channels.col(n);
            for (int i = 0; i < 16; ++i) {
                const cplx expected = std::sqrt(t.power_scale) * ch.gains(i, n);
                CHECK(std::abs(image(i, 0) - expected) < 1e-10);
            }
        }
    }

    TEST_CASE("perturbing one subcarrier breaks support consistency")
    {
        const auto grid = build_angular_grid(ArrayGeometry(16));
        const auto t = make_terminal(grid, 0.0, 0.3, 1.0);
        RngStream rng(5);
        auto ch = draw_channel(rng, t, grid, 3);
        const int outside = t.active_rps.front() == 0 ? 15 : 0;
        ch.gains(outside, 1) = cplx(0.1, 0.0);
        CHECK_FALSE(has_common_support(ch, t.active_rps));
    }

    TEST_CASE("mean channel power equals M beta")
    {
        const auto grid = build_angular_grid(ArrayGeometry(200));
        const auto t = make_terminal(grid, 0.4, spread, 1.0);
        RngStream rng(21);
        std::vector<double> power;
        for (int d = 0; d < 10000; ++d)
            power.push_back(draw_channel(rng, t, grid, 1).channels.squaredNorm());
        const auto s = testutil::mean_se(power);
        CHECK(std::abs(s.mean - 200.0) / 200.0 < 0.02);
    }

    TEST_CASE("same seed gives the same realization")
    {
        const auto grid = build_angular_grid(ArrayGeometry(32));
        const auto t = make_terminal(grid, 0.2, 0.5, 1.0);
        RngStream a(99), b(99);
        CHECK(draw_channel(a, t, grid, 4).channels == draw_channel(b, t, grid, 4).channels);
    }
}
