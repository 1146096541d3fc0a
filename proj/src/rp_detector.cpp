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

#include "jamguard/rp_detector.hpp"

#include "jamguard/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace jamguard {

CVector to_angular_domain(const CVector &y, const AngularGrid &grid)
{
    if (y.size() != grid.size())
        throw ContractError("received vector length differs from grid size");
    return grid.project(y);
}

CMatrix to_angular_domain(const CMatrix &y, const AngularGrid &grid)
{
    if (y.rows() != grid.size())
        throw ContractError("received block height differs from grid size");
    return grid.project(y);
}

AngularTraining angular_training(const TrainingObservation &training, const AngularGrid &grid,
                                 int pilots)
{
    const int subcarriers = training.subcarriers();
    const int m_count = grid.size();
    if (subcarriers == 0)
        return {};
    if (training.despread.front().rows() != m_count)
        throw ContractError("training block height differs from grid size");
    if (pilots > training.despread.front().cols())
        throw ContractError("more pilots requested than were de-spread");

    CMatrix stacked(m_count, static_cast<Eigen::Index>(pilots) * subcarriers);
    for (int n = 0; n < subcarriers; ++n)
        stacked.middleCols(static_cast<Eigen::Index>(n) * pilots, pilots) =
            training.despread[n].leftCols(pilots);
    const CMatrix angular = to_angular_domain(stacked, grid);

    AngularTraining out;
    out.images.reserve(subcarriers);
    for (int n = 0; n < subcarriers; ++n)
        out.images.push_back(angular.middleCols(static_cast<Eigen::Index>(n) * pilots, pilots));
    return out;
}

RVector energy_statistic(const CMatrix &angular_pilot)
{
    return angular_pilot.cwiseAbs2().rowwise().sum();
}

EnergyStatistics energy_statistics(const AngularTraining &training, int subcarriers,
                                   double threshold)
{
    if (subcarriers < 1 || subcarriers > training.subcarriers())
        throw ContractError("energy window exceeds available subcarriers");
    const auto &first = training.images.front();
    EnergyStatistics out{RMatrix::Zero(first.rows(), first.cols()),
                         std::vector<double>(static_cast<std::size_t>(first.cols()), threshold)};
    for (int n = 0; n < subcarriers; ++n)
        out.energy += training.images[n].cwiseAbs2();
    return out;
}

double threshold_for_fap(int subcarriers, double noise_power, double fap_target)
{
    if (subcarriers < 1)
        throw std::domain_error("threshold needs at least one subcarrier");
    if (!(noise_power > 0.0))
        throw std::domain_error("noise power must be positive");
    if (!(fap_target > 0.0 && fap_target < 1.0))
        throw std::domain_error("false-alarm target must lie in (0, 1)");

    // Work in units of sigma^2: Q(N_d, x) is decreasing in x.
    const double shape = subcarriers;
    auto survival = [&](double x) { return regularized_gamma_q(shape, x); };

    double lo = 0.0;
    double hi = shape;
    while (survival(hi) > fap_target) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300)
            throw NumericError("false-alarm threshold bracket diverged");
    }
    constexpr int max_steps = 200;
    constexpr double rel_tol = 1e-10;
    for (int step = 0; step < max_steps; ++step) {
        if (hi - lo <= rel_tol * hi)
            return hi * noise_power;
        const double mid = 0.5 * (lo + hi);
        if (survival(mid) > fap_target)
            lo = mid;
        else
            hi = mid;
    }
    throw NumericError("false-alarm threshold bisection did not converge");
}

RpEstimate estimate_rp_sets(const EnergyStatistics &stats)
{
    const auto pilots = stats.energy.cols();
    if (static_cast<Eigen::Index>(stats.thresholds.size()) != pilots)
        throw ContractError("one threshold per pilot required");
    RpEstimate out;
    out.pilot_sets.resize(static_cast<std::size_t>(pilots));
    for (Eigen::Index k = 0; k < pilots; ++k) {
        auto &set = out.pilot_sets[static_cast<std::size_t>(k)];
        for (Eigen::Index i = 0; i < stats.energy.rows(); ++i)
            if (stats.energy(i, k) > stats.thresholds[static_cast<std::size_t>(k)])
                set.push_back(static_cast<int>(i));
    }
    return out;
}

} // namespace jamguard
