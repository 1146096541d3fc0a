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

#include "jamguard/suppression.hpp"
#include "jamguard/trial.hpp"

#include <doctest.h>

#include <numbers>

using namespace jamguard;

namespace {

const double sigma2 = std::pow(10.0, -2.5);

SystemConfig config_for(int m, int k)
{
    SystemConfig c;
    c.antennas = m;
    c.users = c.pilot_length = k;
    c.detector_g = std::min(2, k);
    c.set_uniform_user_power(1.0, 1.0);
    return c;
}

} // namespace

TEST_SUITE("suppression")
{
    TEST_CASE("estimation set removes the common RPs")
    {
        CHECK(user_rp_set({0, 1, 2}, {1}).rps == IndexSet{0, 2});
        const auto untouched = user_rp_set({0, 1}, {});
        CHECK(untouched.rps == IndexSet{0, 1});
        CHECK_FALSE(untouched.degenerate);
        const auto gone = user_rp_set({1, 4}, {1, 4});
        CHECK(gone.rps.empty());
        CHECK(gone.degenerate);
    }

    TEST_CASE("LMMSE coefficients at the reference point")
    {
        const EstimatorParams p{1.0, 10, 200.0 / 18.0, sigma2};
        CHECK(gain_mean_square(p) == doctest::Approx(0.99997154031103543).epsilon(1e-14));
        CHECK(lmmse_gain_coefficient(p) == doctest::Approx(0.09486562988189254).epsilon(1e-14));
        CHECK(gain_error_mean_square(p) == doctest::Approx(2.845968896456776e-5).epsilon(1e-12));
    }

    TEST_CASE("gain and error mean-squares sum to one")
    {
        RngStream rng(4);
        for (int t = 0; t < 100; ++t) {
            const EstimatorParams p{rng.uniform(0.0, 5.0), 1 + t % 12, rng.uniform(0.1, 50.0),
                                    rng.uniform(1e-4, 3.0)};
            CHECK(gain_mean_square(p) + gain_error_mean_square(p) == doctest::Approx(1.0).epsilon(1e-14));
        }
    }

    TEST_CASE("noiseless estimate recovers the channel")
    {
        auto cfg = config_for(64, 1);
        cfg.noise_power = 1e-12;
        const auto grid = build_angular_grid(ArrayGeometry(64));
        const auto pilots = generate_pilot_book(1);
        const auto user = make_terminal(grid, 0.2, 0.4, 1.0);
        RngStream rng(3);
        const std::vector<ChannelRealization> ch{draw_channel(rng, user, grid, 1)};
        const auto tr = simulate_training(rng, ch, nullptr, pilots, cfg);
        const EstimatorParams p{1.0, 1, user.power_scale, cfg.noise_power};
        const auto est = lmmse_estimate(tr.despread_pilot(0, 0), user.active_rps, grid, p);
        const CVector h = ch[0].channels.col(0);
        CHECK((est.channel - h).norm() <= 1e-4 * h.norm());
        const auto ang = lmmse_estimate_angular(grid.project(tr.despread_pilot(0, 0)), user.active_rps, grid, p);
        CHECK((ang.channel - est.channel).norm() <= 1e-12 * h.norm());
    }

    TEST_CASE("disjoint estimate is orthogonal to the jammer")
    {
        auto cfg = config_for(200, 1);
        const auto grid = build_angular_grid(ArrayGeometry(200));
        const auto pilots = generate_pilot_book(1);
        RngStream rng(17);
        for (int t = 0; t < 50; ++t) {
            const auto user = sample_terminal(rng, grid, std::numbers::pi / 18, 1.0);
            const auto jam = sample_terminal(rng, grid, std::numbers::pi / 18, 1.0);
            const auto rps = set_difference(user.active_rps, jam.active_rps);
            if (rps.empty())
                continue;
            const std::vector<ChannelRealization> ch{draw_channel(rng, user, grid, 1)};
            const auto jch = draw_channel(rng, jam, grid, 1);
            const auto jp = generate_jammer_pilot(rng, pilots, 1);
            const JammerSignal js{jch, jp};
            const auto tr = simulate_training(rng, ch, &js, pilots, cfg);
            const auto est = lmmse_estimate(tr.despread_pilot(0, 0), rps, grid,
                                            {1.0, 1, user.power_scale, cfg.noise_power});
            const CVector hw = jch.channels.col(0);
            CHECK(std::abs(est.channel.dot(hw)) <= 1e-10 * est.channel.norm() * hw.norm());
        }
    }

    TEST_CASE("baseline estimator equals the LMMSE estimate on the same set")
    {
        const auto grid = build_angular_grid(ArrayGeometry(32));
        RngStream rng(1);
        CMatrix y(32, 1);
        rng.fill_complex_normal(y);
        const EstimatorParams p{1.0, 4, 2.0, 0.1};
        const IndexSet set{3, 4, 9};
        CHECK(baseline_estimate_no_suppression(y.col(0), set, grid, p).channel ==
              lmmse_estimate(y.col(0), set, grid, p).channel);
    }

    TEST_CASE("MRC decoding identities")
    {
        auto cfg = config_for(48, 1);
        cfg.noise_power = 1e-300;
        cfg.set_uniform_user_power(1.0, 2.0);
        const auto grid = build_angular_grid(ArrayGeometry(48));
        const auto user = make_terminal(grid, -0.3, 0.5, 1.0);
        RngStream rng(6);
        const std::vector<ChannelRealization> ch{draw_channel(rng, user, grid, 1)};
        const auto est = lmmse_estimate(ch[0].channels.col(0), user.active_rps, grid,
                                        {1.0, 1, user.power_scale, 0.01});
        const auto data = simulate_data(rng, ch, nullptr, cfg);
        const std::vector<ChannelEstimate> ests{est};
        const cplx decoded = mrc_combine(ests, data.received.col(0))[0];
        const cplx expected = std::sqrt(2.0) * est.channel.dot(ch[0].channels.col(0)) * data.user_symbols(0, 0);
        CHECK(std::abs(decoded - expected) <= 1e-10 * std::abs(expected));
        const cplx gain = est.channel.dot(ch[0].channels.col(0));
        CHECK(gain.real() > 10.0 * std::abs(gain.imag()));

        ChannelEstimate zero;
        zero.channel = CVector::Zero(48);
        const std::vector<ChannelEstimate> zeros{zero};
        CHECK(mrc_combine(zeros, data.received.col(0))[0] == cplx(0.0, 0.0));
    }

    TEST_CASE("closed-form SINR examples")
    {
        const std::vector<IndexSet> sets{IndexSet{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17}};
        const auto counts = overlap_counts(sets);
        const std::vector<double> p{1.0}, mu{200.0 / 18.0};
        const std::vector<double> xi{gain_mean_square({1.0, 10, mu[0], sigma2})};
        CHECK(sinr_closed_form(0, counts, {p, mu, xi, sigma2}) ==
              doctest::Approx(17.99487842205864779).epsilon(1e-12));

        const std::vector<double> off{0.0};
        CHECK(sinr_closed_form(0, counts, {off, mu, xi, sigma2}) == 0.0);
        CHECK(sinr_closed_form(0, counts, {p, mu, xi, 1e-300}) == doctest::Approx(18.0));
    }

    TEST_CASE("overlap counts")
    {
        const std::vector<IndexSet> sets{{0, 1, 2}, {2, 3}, {5}};
        const auto c = overlap_counts(sets);
        CHECK(c.own == std::vector<int>{3, 2, 1});
        CHECK(c.pairwise(0, 1) == 1);
        CHECK(c.pairwise(1, 0) == 1);
        CHECK(c.pairwise(0, 2) == 0);
    }

    TEST_CASE("achievable rate")
    {
        CHECK(achievable_rate(0.0, 10, 200) == 0.0);
        CHECK(achievable_rate(1.0, 10, 200) == doctest::Approx(0.95));
        CHECK(achievable_rate(199.9, 10, 200) == doctest::Approx(7.268).epsilon(1e-4));
    }

    TEST_CASE("conditional moments reduce to the closed forms on clean supports")
    {
        auto cfg = config_for(200, 3);
        const auto grid = build_angular_grid(ArrayGeometry(200));
        const std::vector<TerminalGeometry> users{make_terminal(grid, 0.0, std::numbers::pi / 18, 1.0),
                                                  make_terminal(grid, 0.06, std::numbers::pi / 18, 1.0),
                                                  make_terminal(grid, -0.9, std::numbers::pi / 18, 1.0)};
        const auto jam = make_terminal(grid, 0.8, std::numbers::pi / 18, 1.0);
        std::vector<IndexSet> comb{users[0].active_rps, users[1].active_rps, users[2].active_rps};
        comb[0].pop_back();
        const LinkState link{users, &jam, comb};
        const auto t = conditional_moments(0, link, cfg);
        const double mu = users[0].power_scale, c = static_cast<double>(comb[0].size());
        const double xi = gain_mean_square({1.0, 3, mu, sigma2});
        const auto counts = overlap_counts(comb);
        CHECK(t.desired == doctest::Approx(mu * mu * c * c * xi * xi).epsilon(1e-12));
        CHECK(t.gain_uncertainty == doctest::Approx(mu * mu * c * xi).epsilon(1e-12));
        CHECK(t.inter_user == doctest::Approx(counts.pairwise(0, 1) * xi * mu * users[1].power_scale).epsilon(1e-12));
        CHECK(t.jammer == 0.0);
        CHECK(t.noise == doctest::Approx(mu * c * xi * sigma2).epsilon(1e-12));

        std::vector<double> mus, xis;
        for (const auto &u : users) {
            mus.push_back(u.power_scale);
            xis.push_back(gain_mean_square({1.0, 3, u.power_scale, sigma2}));
        }
        CHECK(sinr_conditional(0, link, cfg) ==
              doctest::Approx(sinr_closed_form(0, counts, {cfg.data_power, mus, xis, sigma2})).epsilon(1e-4));
    }

    TEST_CASE("conditional moments match Monte-Carlo on contaminated supports")
    {
        // Combiner holds own RPs, jammer RPs, one RP shared with another user
        // and a noise-only RP.
        auto cfg = config_for(64, 2);
        cfg.jammer_pilot_power = 0.5;
        cfg.jammer_data_power = 2.0;
        cfg.noise_power = 0.05;
        const auto grid = build_angular_grid(ArrayGeometry(64));
        const std::vector<TerminalGeometry> users{make_terminal(grid, 0.0, 0.3, 1.0),
                                                  make_terminal(grid, 0.2, 0.3, 1.0)};
        const auto jam = make_terminal(grid, -0.25, 0.3, 1.0);
        IndexSet comb0 = set_union(users[0].active_rps, jam.active_rps);
        comb0.push_back(60);
        const std::vector<IndexSet> comb{comb0, users[1].active_rps};
        REQUIRE(intersection_size(comb0, users[1].active_rps) > 0);
        REQUIRE(intersection_size(users[0].active_rps, jam.active_rps) > 0);
        const LinkState link{users, &jam, comb};

        const auto exact = conditional_moments(0, link, cfg);
        const auto mc = sinr_empirical_moments(0, link, grid, cfg, 20000, 123);
        CHECK(std::abs(mc.desired.value - exact.desired) <= 3 * mc.desired.std_error);
        CHECK(std::abs(mc.gain_uncertainty.value - exact.gain_uncertainty) <= 3 * mc.gain_uncertainty.std_error);
        CHECK(std::abs(mc.inter_user.value - exact.inter_user) <= 3 * mc.inter_user.std_error);
        CHECK(std::abs(mc.jammer.value - exact.jammer) <= 3 * mc.jammer.std_error);
        CHECK(std::abs(mc.noise.value - exact.noise) <= 3 * mc.noise.std_error);
        CHECK(std::abs(mc.sinr.value - sinr_conditional(0, link, cfg)) <= 3 * mc.sinr.std_error);
    }

    TEST_CASE("suppression beats keeping the jammer's RPs")
    {
        // Users that keep at least half of their RPs after suppression must
        // gain; users sitting almost entirely under the jammer may lose.
        SystemConfig cfg;
        const auto grid = build_angular_grid(ArrayGeometry(cfg.antennas));
        const auto pilots = generate_pilot_book(cfg.pilot_length);
        int mostly_clear = 0, clear_wins = 0;
        std::vector<double> gain;
        for (int t = 0; t < 100; ++t) {
            const auto scene = draw_scene(cfg, grid, pilots, trial_seed(9, t), 20);
            const auto training = observe_training(scene, grid, pilots, cfg, true);
            const auto det = detect(training, 20, cfg.rp_threshold(20), cfg.detector_g);
            const auto sup = evaluate_arm(Arm::suppressed, scene, det, cfg);
            const auto uns = evaluate_arm(Arm::unsuppressed, scene, det, cfg);
            gain.push_back(sup.sum_se - uns.sum_se);
            for (int k = 0; k < cfg.users; ++k) {
                const auto &own = det.estimate.pilot_sets[k];
                const int shared = intersection_size(own, det.outcome.common_set);
                if (shared == 0 || 2 * shared > static_cast<int>(own.size()))
                    continue;
                ++mostly_clear;
                clear_wins += uns.sinr[k] < sup.sinr[k];
            }
        }
        REQUIRE(mostly_clear > 0);
        CHECK(clear_wins >= 0.99 * mostly_clear);
        const auto g = testutil::mean_se(gain);
        CHECK(g.mean > 3 * g.se);
    }
}
