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

#ifndef JAMGUARD_RP_DETECTOR_HPP
#define JAMGUARD_RP_DETECTOR_HPP

#include "jamguard/angular_grid.hpp"
#include "jamguard/transmission.hpp"
#include "jamguard/types.hpp"

#include <span>
#include <vector>

namespace jamguard {

// U^H y. Throws ContractError when the length differs from the grid size.
CVector to_angular_domain(const CVector &y, const AngularGrid &grid);
// Column-wise U^H Y.
CMatrix to_angular_domain(const CMatrix &y, const AngularGrid &grid);

// Angular images of every de-spread pilot: images[n].col(k) = U^H y_{t,k}^n.
struct AngularTraining {
    std::vector<CMatrix> images; // per subcarrier, M x K

    int subcarriers() const { return static_cast<int>(images.size()); }
    int pilots() const { return images.empty() ? 0 : static_cast<int>(images.front().cols()); }
};

// Transforms the first `pilots` de-spread vectors of every subcarrier in one
// matrix product.
AngularTraining angular_training(const TrainingObservation &training, const AngularGrid &grid,
                                 int pilots);

// Sum over subcarriers of |[y~]_i|^2; columns of `angular_pilot` are subcarriers.
RVector energy_statistic(const CMatrix &angular_pilot);

struct EnergyStatistics {
    RMatrix energy;                 // M x K, column k holds W_{., k}
    std::vector<double> thresholds; // epsilon_k per pilot
};

// Energy of every pilot over the first `subcarriers` subcarriers, all pilots
// sharing `threshold`.
EnergyStatistics energy_statistics(const AngularTraining &training, int subcarriers,
                                   double threshold);

// Smallest epsilon with Prob{Gamma(N_d, sigma^2) > epsilon} <= eta, found by
// bisection on the regularized upper incomplete gamma to 1e-10 relative.
double threshold_for_fap(int subcarriers, double noise_power, double fap_target);

struct RpEstimate {
    std::vector<IndexSet> pilot_sets; // estimated active RPs per pilot
};

// Omega_hat_k = { i : W_{i,k} > epsilon_k } (ties stay inactive).
RpEstimate estimate_rp_sets(const EnergyStatistics &stats);

} // namespace jamguard

#endif
