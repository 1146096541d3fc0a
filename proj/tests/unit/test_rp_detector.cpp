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

#include "jamguard/config.hpp"
#include "jamguard/rp_detector.hpp"
#include "jamguard/trial.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <doctest.h>

#include <numbers>

using namespace jamguard;

namespace {
const double sigma2 = std::pow(10.0, -2.5);
}

TEST_SUITE("rp_detector")
{
    TEST_CASE("angular transform basics")
    {
        const auto grid = build_angular_grid(ArrayGeometry(24));
        const CVector e = to_angular_domain(CVector(grid.column(7)), grid);
        for (int i = 0; i < 24; ++i)
            CHECK(std::abs(e[i] - (i == 7 ? cplx(1.0, 0.0) : cplx(0.0, 0.0))) < 1e-12);

        RngStream rng(2);
        CMatrix y(24, 1);
        rng.fill_complex_normal(y);
        CHECK(to_angular_domain(CVector(y.col(0)), grid).norm() == doctest::Approx(y.norm()).epsilon(1e-12));
        CHECK_THROWS_AS(to_angular_domain(CVector(CVector::Zero(5)), grid), ContractError);
    }

    TEST_CASE("sparse channel maps back to its gains")
    {
        const auto grid = build_angular_grid(ArrayGeometry(40));
        const double mu = 3.5;
        CVector y = CVector::Zero(40);
        const IndexSet omega{4, 5, 6, 30};
        RngStream rng(1);
        CVector g = CVector::Zero(40);
        for (int i : omega) {
            g[i] = rng.complex_normal();
            y += std::sqrt(mu) * g[i] * grid.column(i);
        }
        const CVector image = to_angular_domain(y, grid);
        CHECK((image - std::sqrt(mu) * g).norm() < 1e-10);
    }

    TEST_CASE("energy statistic arithmetic")
    {
        CHECK(energy_statistic(CMatrix::Zero(3, 4)).isZero());
        CMatrix y(1, 2);
        y << cplx(1, 1), cplx(1, 1);
        CHECK(energy_statistic(y)[0] == doctest::Approx(4.0));
    }

    TEST_CASE("threshold closed forms")
    {
        CHECK(threshold_for_fap(1, sigma2, 1e-3) == doctest::Approx(0.02184424020063540).epsilon(1e-9));
        CHECK(threshold_for_fap(1, sigma2, 1e-2) == doctest::Approx(0.01456282680042360).epsilon(1e-9));
        CHECK(threshold_for_fap(1, sigma2, 0.5) == doctest::Approx(sigma2 * std::log(2.0)).epsilon(1e-9));
    }

    TEST_CASE("threshold at 20 subcarriers")
    {
        const double eps = threshold_for_fap(20, sigma2, 1e-3);
        CHECK(eps == doctest::Approx(0.11605868523746686).epsilon(1e-9));
        CHECK(boost::math::gamma_q(20.0, eps / sigma2) == doctest::Approx(1e-3).epsilon(1e-8));
        CHECK(std::abs(eps - 0.11) < 0.01);
    }

    TEST_CASE("thresholds invert the Gamma survival function")
    {
        for (int nd : {1, 2, 5, 20, 64})
            for (double eta : {1e-1, 1e-3, 1e-6}) {
                const double eps = threshold_for_fap(nd, 0.7, eta);
                CHECK(boost::math::gamma_q(static_cast<double>(nd), eps / 0.7) ==
                      doctest::Approx(eta).epsilon(1e-8));
            }
    }

    TEST_CASE("strict threshold comparison")
    {
        EnergyStatistics stats;
        stats.energy = RMatrix(3, 1);
        stats.energy << 0.3, 0.01, 0.5;
        stats.thresholds = {0.1};
        CHECK(estimate_rp_sets(stats).pilot_sets[0] == IndexSet{0, 2});
        stats.thresholds = {0.3};
        CHECK(estimate_rp_sets(stats).pilot_sets[0] == IndexSet{2});
    }

    TEST_CASE("noise-only false inclusions stay near M eta")
    {
        SystemConfig cfg;
        cfg.set_uniform_user_power(0.0, 0.0);
        const auto grid = build_angular_grid(ArrayGeometry(cfg.antennas));
        const auto pilots = generate_pilot_book(cfg.pilot_length);
        const double eps = threshold_for_fap(20, cfg.noise_power, 1e-3);
        std::vector<double> sizes;
        for (int t = 0; t < 200; ++t) {
            const auto scene = draw_scene(cfg, grid, pilots, trial_seed(77, t), 20);
            const auto training = observe_training(scene, grid, pilots, cfg, false);
            const auto est = estimate_rp_sets(energy_statistics(training, 20, eps));
            for (const auto &set : est.pilot_sets)
                sizes.push_back(static_cast<double>(set.size()));
        }
        const auto s = testutil::mean_se(sizes);
        CHECK(s.mean <= 0.2 + 3 * s.se);
    }

    TEST_CASE("high SNR recovers every active RP")
    {
        SystemConfig cfg;
        const auto grid = build_angular_grid(ArrayGeometry(cfg.antennas));
        const auto pilots = generate_pilot_book(cfg.pilot_length);
        const double eps = cfg.rp_threshold(20);
        int covered = 0, total = 0;
        for (int t = 0; t < 100; ++t) {
            const auto scene = draw_scene(cfg, grid, pilots, trial_seed(5, t), 20);
            const auto training = observe_training(scene, grid, pilots, cfg, false);
            const auto est = estimate_rp_sets(energy_statistics(training, 20, eps));
            for (int k = 0; k < cfg.users; ++k, ++total) {
                const auto &truth = scene.users[k].active_rps;
                covered += intersection_size(est.pilot_sets[k], truth) == static_cast<int>(truth.size());
            }
        }
        CHECK(static_cast<double>(covered) / total >= 0.99);
    }
}
