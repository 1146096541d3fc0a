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

#ifndef JAMGUARD_CHANNEL_MODEL_HPP
#define JAMGUARD_CHANNEL_MODEL_HPP

#include "jamguard/angular_grid.hpp"
#include "jamguard/rng.hpp"
#include "jamguard/types.hpp"

namespace jamguard {

// Angular footprint of a user or the jammer: the span [mean - spread/2,
// mean + spread/2], its active resolvable paths and the per-path power scale
// mu = M beta / C.
struct TerminalGeometry {
    double mean_angle = 0.0;
    double angular_spread = 0.0;
    double large_scale_gain = 1.0;
    IndexSet active_rps;
    double power_scale = 0.0;

    int active_rp_count() const { return static_cast<int>(active_rps.size()); }
};

// Geometry for a given mean angle. Throws ConfigError if the span holds no
// grid angle.
TerminalGeometry make_terminal(const AngularGrid &grid, double mean_angle, double spread,
                               double large_scale_gain);

inline constexpr int max_empty_support_redraws = 1000;

// Mean angle uniform on [-pi/2 + spread/2, pi/2 - spread/2]; redrawn while the
// span is empty, up to max_empty_support_redraws times.
TerminalGeometry sample_terminal(RngStream &rng, const AngularGrid &grid, double spread,
                                 double large_scale_gain);

// Per-subcarrier RP gains and channel vectors, one column per subcarrier.
struct ChannelRealization {
    CMatrix gains;    // M x N_d, zero outside the active set
    CMatrix channels; // M x N_d

    int subcarriers() const { return static_cast<int>(channels.cols()); }
};

ChannelRealization draw_channel(RngStream &rng, const TerminalGeometry &terminal,
                                const AngularGrid &grid, int subcarriers);

// True when every subcarrier's gain vector is supported exactly on `support`.
bool has_common_support(const ChannelRealization &channel, const IndexSet &support);

} // namespace jamguard

#endif
