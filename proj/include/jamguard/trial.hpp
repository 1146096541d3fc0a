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

#ifndef JAMGUARD_TRIAL_HPP
#define JAMGUARD_TRIAL_HPP

#include "jamguard/angular_grid.hpp"
#include "jamguard/channel_model.hpp"
#include "jamguard/config.hpp"
#include "jamguard/jamming_detector.hpp"
#include "jamguard/rp_detector.hpp"
#include "jamguard/suppression.hpp"
#include "jamguard/transmission.hpp"

#include <cstdint>
#include <vector>

namespace jamguard {

// Everything random in one coherence block except the training noise.
struct TrialScene {
    std::uint64_t seed = 0;
    std::vector<TerminalGeometry> users;
    TerminalGeometry jammer;
    std::vector<ChannelRealization> user_channels;
    ChannelRealization jammer_channel;
    JammerPilot jammer_pilot;
};

TrialScene draw_scene(const SystemConfig &config, const AngularGrid &grid, const PilotBook &pilots,
                      std::uint64_t trial_seed, int subcarriers);

// Pilot phase followed by the angular transform. The noise stream depends on
// the trial seed only, so jammer-present and jammer-free runs of one scene see
// the same noise.
AngularTraining observe_training(const TrialScene &scene, const AngularGrid &grid,
                                 const PilotBook &pilots, const SystemConfig &config,
                                 bool jammer_present);

struct DetectionStage {
    EnergyStatistics statistics;
    RpEstimate estimate;
    DetectionOutcome outcome;
};

DetectionStage detect(const AngularTraining &training, int subcarriers, double threshold,
                      int min_pilots);

enum class Arm { no_jammer, suppressed, unsuppressed };

const char *arm_name(Arm arm);

struct ArmEvaluation {
    Arm arm = Arm::no_jammer;
    DetectionStage detection;
    std::vector<UserRpSet> user_sets;   // combiner RP set per user
    std::vector<double> sinr;           // support-conditioned SINR
    std::vector<double> sinr_closed_form;
    double sum_se = 0.0;
    double sum_se_closed_form = 0.0;
    int degenerate_users = 0;
};

// Estimation-set selection and SINR for one arm given its detection result:
// suppressed removes Q_g from every pilot's RP set, unsuppressed keeps the
// pilot sets untouched, no_jammer behaves like suppressed with no jammer on
// the air.
ArmEvaluation evaluate_arm(Arm arm, const TrialScene &scene, DetectionStage detection,
                           const SystemConfig &config);

// Full pipeline for one arm at the configured N_d and g.
ArmEvaluation run_arm(Arm arm, const TrialScene &scene, const AngularGrid &grid,
                      const PilotBook &pilots, const SystemConfig &config);

} // namespace jamguard

#endif
