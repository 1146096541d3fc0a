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

#include "jamguard/channel_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace jamguard {

TerminalGeometry make_terminal(const AngularGrid &grid, double mean_angle, double spread,
                               double large_scale_gain)
{
    TerminalGeometry t;
    t.mean_angle = mean_angle;
    t.angular_spread = spread;
    t.large_scale_gain = large_scale_gain;
    t.active_rps = grid_indices_in_span(grid, mean_angle, spread);
    if (t.active_rps.empty())
        throw ConfigError("angular span holds no grid angle");
    t.power_scale = grid.size() * large_scale_gain / t.active_rp_count();
    return t;
}

TerminalGeometry sample_terminal(RngStream &rng, const AngularGrid &grid, double spread,
                                 double large_scale_gain)
{
    if (!(spread > 0.0 && spread <= std::numbers::pi))
        throw std::domain_error("angular spread must lie in (0, pi]");
    const double limit = std::numbers::pi / 2.0 - spread / 2.0;
    for (int attempt = 0; attempt < max_empty_support_redraws; ++attempt) {
        const double mean = limit > 0.0 ? rng.uniform(-limit, limit) : 0.0;
        IndexSet rps = grid_indices_in_span(grid, mean, spread);
        if (rps.empty())
            continue;
        TerminalGeometry t;
        t.mean_angle = mean;
        t.angular_spread = spread;
        t.large_scale_gain = large_scale_gain;
        t.active_rps = std::move(rps);
        t.power_scale = grid.size() * large_scale_gain / t.active_rp_count();
        return t;
    }
    throw ConfigError("grid of " + std::to_string(grid.size()) +
                      " antennas too coarse for angular spread " + std::to_string(spread));
}

ChannelRealization draw_channel(RngStream &rng, const TerminalGeometry &terminal,
                                const AngularGrid &grid, int subcarriers)
{
    if (subcarriers < 1)
        throw ContractError("need at least one subcarrier");
    const int m_count = grid.size();
    ChannelRealization out{CMatrix::Zero(m_count, subcarriers), CMatrix::Zero(m_count, subcarriers)};
    const double amplitude = std::sqrt(terminal.power_scale);
    for (int n = 0; n < subcarriers; ++n) {
        for (int i : terminal.active_rps) {
            const cplx g = rng.complex_normal();
            out.gains(i, n) = g;
            out.channels.col(n) += (amplitude * g) * grid.column(i);
        }
    }
    return out;
}

bool has_common_support(const ChannelRealization &channel, const IndexSet &support)
{
    for (Eigen::Index n = 0; n < channel.gains.cols(); ++n) {
        for (Eigen::Index i = 0; i < channel.gains.rows(); ++i) {
            const bool active = channel.gains(i, n) != cplx(0.0, 0.0);
            if (active != contains(support, static_cast<int>(i)))
                return false;
        }
    }
    return true;
}

} // namespace jamguard
