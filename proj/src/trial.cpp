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

#include "jamguard/trial.hpp"

#include "jamguard/rng.hpp"

namespace jamguard {

TrialScene draw_scene(const SystemConfig &config, const AngularGrid &grid, const PilotBook &pilots,
                      std::uint64_t trial_seed, int subcarriers)
{
    TrialScene scene;
    scene.seed = trial_seed;

    auto geometry_rng = RngStream::for_trial(trial_seed, StreamTag::geometry);
    scene.users.reserve(static_cast<std::size_t>(config.users));
    for (int k = 0; k < config.users; ++k)
        scene.users.push_back(
            sample_terminal(geometry_rng, grid, config.angular_spread, config.user_gain));
    scene.jammer =
        sample_terminal(geometry_rng, grid, config.jammer_angular_spread, config.jammer_gain);

    auto channel_rng = RngStream::for_trial(trial_seed, StreamTag::user_channels);
    scene.user_channels.reserve(scene.users.size());
    for (const auto &user : scene.users)
        scene.user_channels.push_back(draw_channel(channel_rng, user, grid, subcarriers));

    auto jammer_rng = RngStream::for_trial(trial_seed, StreamTag::jammer_channel);
    scene.jammer_channel = draw_channel(jammer_rng, scene.jammer, grid, subcarriers);
    auto pilot_rng = RngStream::for_trial(trial_seed, StreamTag::jammer_pilot);
    scene.jammer_pilot = generate_jammer_pilot(pilot_rng, pilots, subcarriers);
    return scene;
}

AngularTraining observe_training(const TrialScene &scene, const AngularGrid &grid,
                                 const PilotBook &pilots, const SystemConfig &config,
                                 bool jammer_present)
{
    auto noise_rng = RngStream::for_trial(scene.seed, StreamTag::training_noise);
    const JammerSignal jammer{scene.jammer_channel, scene.jammer_pilot};
    const auto training = simulate_training(noise_rng, scene.user_channels,
                                            jammer_present ? &jammer : nullptr, pilots, config);
    return angular_training(training, grid, config.users);
}

DetectionStage detect(const AngularTraining &training, int subcarriers, double threshold,
                      int min_pilots)
{
    DetectionStage out;
    out.statistics = energy_statistics(training, subcarriers, threshold);
    out.estimate = estimate_rp_sets(out.statistics);
    const auto counts =
        rp_occurrence_counts(out.estimate.pilot_sets, static_cast<int>(out.statistics.energy.rows()));
    out.outcome = detect_jammer(counts, min_pilots);
    return out;
}

const char *arm_name(Arm arm)
{
    switch (arm) {
    case Arm::no_jammer:
        return "no_jammer";
    case Arm::suppressed:
        return "suppressed";
    case Arm::unsuppressed:
        return "unsuppressed";
    }
    return "unknown";
}

ArmEvaluation evaluate_arm(Arm arm, const TrialScene &scene, DetectionStage detection,
                           const SystemConfig &config)
{
    const auto k_count = static_cast<std::size_t>(config.users);
    ArmEvaluation out;
    out.arm = arm;
    out.detection = std::move(detection);

    const auto &pilot_sets = out.detection.estimate.pilot_sets;
    std::vector<IndexSet> combiner(k_count);
    out.user_sets.reserve(k_count);
    for (std::size_t k = 0; k < k_count; ++k) {
        UserRpSet set = arm == Arm::unsuppressed
                            ? UserRpSet{pilot_sets[k], pilot_sets[k].empty()}
                            : user_rp_set(pilot_sets[k], out.detection.outcome.common_set);
        combiner[k] = set.rps;
        out.degenerate_users += set.degenerate ? 1 : 0;
        out.user_sets.push_back(std::move(set));
    }

    const LinkState link{scene.users, arm == Arm::no_jammer ? nullptr : &scene.jammer, combiner};
    std::vector<double> mu(k_count), xi(k_count);
    for (std::size_t k = 0; k < k_count; ++k) {
        const auto kk = static_cast<int>(k);
        mu[k] = estimator_power_scale(kk, link, config);
        xi[k] = gain_mean_square(
            EstimatorParams{config.pilot_power[k], config.pilot_length, mu[k], config.noise_power});
    }
    const auto counts = overlap_counts(combiner);
    const ClosedFormInputs closed{config.data_power, mu, xi, config.noise_power};

    out.sinr.resize(k_count);
    out.sinr_closed_form.resize(k_count);
    for (std::size_t k = 0; k < k_count; ++k) {
        const auto kk = static_cast<int>(k);
        out.sinr[k] = sinr_conditional(kk, link, config);
        out.sinr_closed_form[k] = sinr_closed_form(kk, counts, closed);
        out.sum_se += achievable_rate(out.sinr[k], config.pilot_length, config.coherence_block);
        out.sum_se_closed_form +=
            achievable_rate(out.sinr_closed_form[k], config.pilot_length, config.coherence_block);
    }
    return out;
}

ArmEvaluation run_arm(Arm arm, const TrialScene &scene, const AngularGrid &grid,
                      const PilotBook &pilots, const SystemConfig &config)
{
    const auto training = observe_training(scene, grid, pilots, config, arm != Arm::no_jammer);
    const int nd = config.detection_subcarriers;
    auto detection = detect(training, nd, config.rp_threshold(nd), config.detector_g);
    return evaluate_arm(arm, scene, std::move(detection), config);
}

} // namespace jamguard
