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

#ifndef JAMGUARD_SUPPRESSION_HPP
#define JAMGUARD_SUPPRESSION_HPP

#include "jamguard/angular_grid.hpp"
#include "jamguard/channel_model.hpp"
#include "jamguard/config.hpp"
#include "jamguard/types.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace jamguard {

struct UserRpSet {
    IndexSet rps;
    bool degenerate = false; // every estimated RP was attributed to the jammer
};

// Omega_hat_k = Omega_hat_{k,w} \ Q_g.
UserRpSet user_rp_set(const IndexSet &pilot_set, const IndexSet &common_set);

struct EstimatorParams {
    double pilot_power = 1.0; // p_{t,k}
    int pilot_length = 1;     // tau
    double power_scale = 1.0; // mu_k assumed by the estimator
    double noise_power = 1.0; // sigma^2
};

// sqrt(tau p mu) / (sigma^2 + tau p mu), the per-RP LMMSE weight.
double lmmse_gain_coefficient(const EstimatorParams &params);
// xi = tau p mu / (sigma^2 + tau p mu), mean-square of an estimated gain.
double gain_mean_square(const EstimatorParams &params);
// sigma^2 / (sigma^2 + tau p mu), mean-square of the estimation error.
double gain_error_mean_square(const EstimatorParams &params);

struct ChannelEstimate {
    IndexSet rps;
    CVector gains;   // aligned with rps
    CVector channel; // sqrt(mu) sum_i g_hat_i a(phi_i)
    double power_scale = 0.0;
    double gain_mean_square = 0.0;
    double error_mean_square = 0.0;

    bool degenerate() const { return rps.empty(); }
};

// Per-RP LMMSE estimate from a de-spread pilot y_{t,k}: g_hat_i = c a(phi_i)^H y.
ChannelEstimate lmmse_estimate(const CVector &despread_pilot, const IndexSet &rps,
                               const AngularGrid &grid, const EstimatorParams &params);

// Same estimate from the pilot's angular image U^H y_{t,k}.
ChannelEstimate lmmse_estimate_angular(const CVector &angular_pilot, const IndexSet &rps,
                                       const AngularGrid &grid, const EstimatorParams &params);

// Reference estimator that keeps every RP of the pilot, jammer paths
// included.
ChannelEstimate baseline_estimate_no_suppression(const CVector &despread_pilot,
                                                 const IndexSet &pilot_set,
                                                 const AngularGrid &grid,
                                                 const EstimatorParams &params);

// Decoded scalar h_hat_k^H y_d for every user.
CVector mrc_combine(std::span<const ChannelEstimate> estimates, const CVector &received);

struct OverlapCounts {
    std::vector<int> own;     // C_{k/w} = |Omega_hat_k|
    Eigen::MatrixXi pairwise; // C_{k,l} = |Omega_hat_k n Omega_hat_l|
};

OverlapCounts overlap_counts(std::span<const IndexSet> user_sets);

struct ClosedFormInputs {
    std::span<const double> data_power;       // p_{d,l}
    std::span<const double> power_scale;      // mu_l
    std::span<const double> gain_mean_square; // xi_l
    double noise_power = 1.0;
};

// Closed-form MRC SINR of user k,
//   p_k mu_k C_k^2 xi_k / (p_k mu_k C_k xi_k + sum_{l != k} p_l mu_l C_{k,l} + C_k sigma^2),
// zero for a degenerate user (C_k = 0).
double sinr_closed_form(int k, const OverlapCounts &counts, const ClosedFormInputs &inputs);

// (1 - tau / T) log2(1 + sinr).
double achievable_rate(double sinr, int pilot_length, int coherence_block);

// The use-and-then-forget SINR terms of one user:
//   desired          |E{v^H h_k}|^2
//   gain_uncertainty var{v^H h_k}
//   inter_user       sum_{l != k} p_{d,l} E|v^H h_l|^2
//   jammer           E|v^H h_w|^2
//   noise            E|v^H z_d|^2
struct MomentTerms {
    double desired = 0.0;
    double gain_uncertainty = 0.0;
    double inter_user = 0.0;
    double jammer = 0.0;
    double noise = 0.0;
};

double sinr_from_moments(const MomentTerms &terms, double data_power, double jammer_data_power);

// Directional state of one coherence block: true supports of every terminal
// plus the RP sets each user's combiner was built on.
struct LinkState {
    std::span<const TerminalGeometry> users;
    const TerminalGeometry *jammer = nullptr; // null when no jammer transmits
    std::span<const IndexSet> combiner_rps;
};

// Power scale the estimator assumes for user k.
double estimator_power_scale(int k, const LinkState &link, const SystemConfig &config);

// Exact SINR terms conditioned on the supports, averaging over RP gains,
// noise, the jammer's pilot and symbols. Covers contaminated estimates:
// combiner RPs that are noise-only, shared with other users, or held by the
// jammer (whose pilot leakage makes the jammer term grow with the square of
// the shared RP count).
MomentTerms conditional_moments(int k, const LinkState &link, const SystemConfig &config);

double sinr_conditional(int k, const LinkState &link, const SystemConfig &config);

struct MomentEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

struct EmpiricalMoments {
    MomentEstimate desired;
    MomentEstimate gain_uncertainty;
    MomentEstimate inter_user;
    MomentEstimate jammer;
    MomentEstimate noise;
    MomentEstimate sinr; // SINR assembled from the moments; jackknife error
    int draws = 0;
};

// Monte-Carlo estimate of the SINR terms of user k with the supports held
// fixed: each draw regenerates gains, jammer pilot, training and data noise,
// runs the LMMSE estimator on `link.combiner_rps[k]` and records the inner
// products. Requires draws >= 2 * jackknife batches.
EmpiricalMoments sinr_empirical_moments(int k, const LinkState &link, const AngularGrid &grid,
                                        const SystemConfig &config, int draws,
                                        std::uint64_t seed);

} // namespace jamguard

#endif
