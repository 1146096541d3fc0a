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

#include "jamguard/suppression.hpp"

#include "jamguard/rng.hpp"
#include "jamguard/transmission.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace jamguard {

UserRpSet user_rp_set(const IndexSet &pilot_set, const IndexSet &common_set)
{
    UserRpSet out;
    out.rps = set_difference(pilot_set, common_set);
    out.degenerate = out.rps.empty();
    return out;
}

namespace {

double received_gain_power(const EstimatorParams &p)
{
    return p.pilot_length * p.pilot_power * p.power_scale;
}

} // namespace

double lmmse_gain_coefficient(const EstimatorParams &params)
{
    const double s = received_gain_power(params);
    return std::sqrt(s) / (params.noise_power + s);
}

double gain_mean_square(const EstimatorParams &params)
{
    const double s = received_gain_power(params);
    return s / (params.noise_power + s);
}

double gain_error_mean_square(const EstimatorParams &params)
{
    return params.noise_power / (params.noise_power + received_gain_power(params));
}

namespace {

template <class Projection>
ChannelEstimate build_estimate(const IndexSet &rps, const AngularGrid &grid,
                               const EstimatorParams &params, Projection &&project)
{
    ChannelEstimate out;
    out.rps = rps;
    out.power_scale = params.power_scale;
    out.gain_mean_square = gain_mean_square(params);
    out.error_mean_square = gain_error_mean_square(params);
    out.gains.resize(static_cast<Eigen::Index>(rps.size()));
    out.channel = CVector::Zero(grid.size());

    const double weight = lmmse_gain_coefficient(params);
    const double amplitude = std::sqrt(params.power_scale);
    for (std::size_t j = 0; j < rps.size(); ++j) {
        const int i = rps[j];
        if (i < 0 || i >= grid.size())
            throw ContractError("RP index outside the grid");
        const cplx g = weight * project(i);
        out.gains[static_cast<Eigen::Index>(j)] = g;
        out.channel += (amplitude * g) * grid.column(i);
    }
    return out;
}

} // namespace

ChannelEstimate lmmse_estimate(const CVector &despread_pilot, const IndexSet &rps,
                               const AngularGrid &grid, const EstimatorParams &params)
{
    if (despread_pilot.size() != grid.size())
        throw ContractError("pilot length differs from grid size");
    return build_estimate(rps, grid, params,
                          [&](int i) { return grid.column(i).dot(despread_pilot); });
}

ChannelEstimate lmmse_estimate_angular(const CVector &angular_pilot, const IndexSet &rps,
                                       const AngularGrid &grid, const EstimatorParams &params)
{
    if (angular_pilot.size() != grid.size())
        throw ContractError("angular image length differs from grid size");
    return build_estimate(rps, grid, params, [&](int i) { return angular_pilot[i]; });
}

ChannelEstimate baseline_estimate_no_suppression(const CVector &despread_pilot,
                                                 const IndexSet &pilot_set,
                                                 const AngularGrid &grid,
                                                 const EstimatorParams &params)
{
    return lmmse_estimate(despread_pilot, pilot_set, grid, params);
}

CVector mrc_combine(std::span<const ChannelEstimate> estimates, const CVector &received)
{
    CVector out(static_cast<Eigen::Index>(estimates.size()));
    for (std::size_t k = 0; k < estimates.size(); ++k) {
        if (estimates[k].channel.size() != received.size())
            throw ContractError("estimate length differs from received vector");
        out[static_cast<Eigen::Index>(k)] = estimates[k].channel.dot(received);
    }
    return out;
}

OverlapCounts overlap_counts(std::span<const IndexSet> user_sets)
{
    const auto k_count = static_cast<int>(user_sets.size());
    OverlapCounts out{std::vector<int>(static_cast<std::size_t>(k_count)),
                      Eigen::MatrixXi::Zero(k_count, k_count)};
    for (int k = 0; k < k_count; ++k) {
        out.own[static_cast<std::size_t>(k)] = static_cast<int>(user_sets[k].size());
        for (int l = k; l < k_count; ++l) {
            const int c = intersection_size(user_sets[k], user_sets[l]);
            out.pairwise(k, l) = c;
            out.pairwise(l, k) = c;
        }
    }
    return out;
}

double sinr_closed_form(int k, const OverlapCounts &counts, const ClosedFormInputs &inputs)
{
    const auto k_count = static_cast<int>(counts.own.size());
    if (k < 0 || k >= k_count)
        throw ContractError("user index out of range");
    if (static_cast<int>(inputs.data_power.size()) != k_count ||
        static_cast<int>(inputs.power_scale.size()) != k_count ||
        static_cast<int>(inputs.gain_mean_square.size()) != k_count)
        throw ContractError("closed-form inputs need one entry per user");

    const double c_own = counts.own[static_cast<std::size_t>(k)];
    if (c_own == 0.0)
        return 0.0;
    const double p = inputs.data_power[k];
    const double mu = inputs.power_scale[k];
    const double xi = inputs.gain_mean_square[k];

    double interference = 0.0;
    for (int l = 0; l < k_count; ++l)
        if (l != k)
            interference += inputs.data_power[l] * inputs.power_scale[l] * counts.pairwise(k, l);

    const double numerator = p * mu * c_own * c_own * xi;
    const double denominator = p * mu * c_own * xi + interference + c_own * inputs.noise_power;
    return numerator / denominator;
}

double achievable_rate(double sinr, int pilot_length, int coherence_block)
{
    if (!(sinr >= 0.0))
        throw std::domain_error("SINR must be non-negative");
    if (coherence_block <= pilot_length)
        throw std::domain_error("coherence block must exceed pilot length");
    const double prelog = 1.0 - static_cast<double>(pilot_length) / coherence_block;
    return prelog * std::log2(1.0 + sinr);
}

double sinr_from_moments(const MomentTerms &terms, double data_power, double jammer_data_power)
{
    const double numerator = data_power * terms.desired;
    if (numerator <= 0.0)
        return 0.0;
    const double denominator = data_power * terms.gain_uncertainty + terms.inter_user +
                               jammer_data_power * terms.jammer + terms.noise;
    return numerator / denominator;
}

double estimator_power_scale(int k, const LinkState &link, const SystemConfig &config)
{
    const auto &user = link.users[static_cast<std::size_t>(k)];
    const auto &rps = link.combiner_rps[static_cast<std::size_t>(k)];
    if (config.estimator_uses_true_rp_count || rps.empty())
        return user.power_scale;
    return config.antennas * user.large_scale_gain / static_cast<double>(rps.size());
}

MomentTerms conditional_moments(int k, const LinkState &link, const SystemConfig &config)
{
    const auto k_count = static_cast<int>(link.users.size());
    if (k < 0 || k >= k_count || static_cast<int>(link.combiner_rps.size()) != k_count)
        throw ContractError("link state needs one combiner set per user");

    const auto &self = link.users[static_cast<std::size_t>(k)];
    const auto &combiner = link.combiner_rps[static_cast<std::size_t>(k)];
    const double sigma2 = config.noise_power;
    const double tau = config.pilot_length;
    const double p_train = config.pilot_power[static_cast<std::size_t>(k)];
    const double mu_true = self.power_scale;

    // Scale of the combiner: v = s * sum_i y~_i a_i with s = sqrt(mu_hat) c.
    const EstimatorParams est{p_train, config.pilot_length, estimator_power_scale(k, link, config),
                              sigma2};
    const double c = lmmse_gain_coefficient(est);
    const double scale2 = est.power_scale * c * c;

    const double user_rp_power = tau * p_train * mu_true;
    const double jammer_rp_power =
        link.jammer != nullptr ? config.jammer_pilot_power * link.jammer->power_scale : 0.0;
    auto in_jammer = [&](int i) {
        return link.jammer != nullptr && contains(link.jammer->active_rps, i);
    };
    // Mean power of the pilot's angular observation on RP i.
    auto observed_power = [&](int i) {
        double p = sigma2;
        if (contains(self.active_rps, i))
            p += user_rp_power;
        if (in_jammer(i))
            p += jammer_rp_power;
        return p;
    };

    MomentTerms terms;
    double own_overlap = 0.0;
    double own_power = 0.0;
    double total_power = 0.0;
    for (int i : combiner) {
        const double p = observed_power(i);
        total_power += p;
        if (contains(self.active_rps, i)) {
            own_overlap += 1.0;
            own_power += p;
        }
    }
    terms.desired = scale2 * mu_true * user_rp_power * own_overlap * own_overlap;
    terms.gain_uncertainty = scale2 * mu_true * own_power;
    terms.noise = scale2 * sigma2 * total_power;

    for (int l = 0; l < k_count; ++l) {
        if (l == k)
            continue;
        const auto &other = link.users[static_cast<std::size_t>(l)];
        double shared_power = 0.0;
        for (int i : combiner)
            if (contains(other.active_rps, i))
                shared_power += observed_power(i);
        terms.inter_user +=
            config.data_power[static_cast<std::size_t>(l)] * scale2 * other.power_scale * shared_power;
    }

    if (link.jammer != nullptr) {
        double shared = 0.0;
        double residual_power = 0.0;
        for (int i : combiner) {
            if (!in_jammer(i))
                continue;
            shared += 1.0;
            residual_power += sigma2 + (contains(self.active_rps, i) ? user_rp_power : 0.0);
        }
        const double mu_w = link.jammer->power_scale;
        terms.jammer =
            scale2 * mu_w * (jammer_rp_power * (shared * shared + shared) + residual_power);
    }
    return terms;
}

double sinr_conditional(int k, const LinkState &link, const SystemConfig &config)
{
    const auto terms = conditional_moments(k, link, config);
    const double q_d = link.jammer != nullptr ? config.jammer_data_power : 0.0;
    return sinr_from_moments(terms, config.data_power[static_cast<std::size_t>(k)], q_d);
}

namespace {

constexpr int jackknife_batches = 25;

struct Accumulator {
    double sum = 0.0;
    double sum_sq = 0.0;
    int n = 0;

    void add(double x)
    {
        sum += x;
        sum_sq += x * x;
        ++n;
    }
    double mean() const { return sum / n; }
    double variance() const
    {
        const double m = mean();
        return std::max(0.0, (sum_sq - n * m * m) / (n - 1));
    }
    MomentEstimate estimate() const { return {mean(), std::sqrt(variance() / n)}; }
};

struct DrawSample {
    cplx desired;       // v^H h_k
    double inter_user;  // sum_{l != k} p_{d,l} |v^H h_l|^2
    double jammer;      // |v^H h_w|^2
    double noise;       // |v^H z_d|^2
};

MomentTerms moments_of(std::span<const DrawSample> samples)
{
    const double n = static_cast<double>(samples.size());
    cplx mean(0.0, 0.0);
    MomentTerms t;
    for (const auto &s : samples) {
        mean += s.desired;
        t.inter_user += s.inter_user;
        t.jammer += s.jammer;
        t.noise += s.noise;
    }
    mean /= n;
    double spread = 0.0;
    for (const auto &s : samples)
        spread += std::norm(s.desired - mean);
    t.desired = std::norm(mean);
    t.gain_uncertainty = spread / (n - 1.0);
    t.inter_user /= n;
    t.jammer /= n;
    t.noise /= n;
    return t;
}

} // namespace

EmpiricalMoments sinr_empirical_moments(int k, const LinkState &link, const AngularGrid &grid,
                                        const SystemConfig &config, int draws, std::uint64_t seed)
{
    const auto k_count = static_cast<int>(link.users.size());
    if (k_count != config.users || static_cast<int>(link.combiner_rps.size()) != k_count)
        throw ContractError("link state does not match configured user count");
    if (k < 0 || k >= k_count)
        throw ContractError("user index out of range");
    if (draws < 2 * jackknife_batches)
        throw ContractError("too few draws for moment estimation");

    const PilotBook pilots = generate_pilot_book(config.pilot_length);
    const EstimatorParams est{config.pilot_power[static_cast<std::size_t>(k)],
                              config.pilot_length, estimator_power_scale(k, link, config),
                              config.noise_power};
    const double q_d = link.jammer != nullptr ? config.jammer_data_power : 0.0;

    std::vector<DrawSample> samples;
    samples.reserve(static_cast<std::size_t>(draws));
    std::vector<ChannelRealization> channels(static_cast<std::size_t>(k_count));
    for (int d = 0; d < draws; ++d) {
        const auto tseed = trial_seed(seed, static_cast<std::uint64_t>(d));
        auto gain_rng = RngStream::for_trial(tseed, StreamTag::user_channels);
        for (int l = 0; l < k_count; ++l)
            channels[static_cast<std::size_t>(l)] =
                draw_channel(gain_rng, link.users[static_cast<std::size_t>(l)], grid, 1);

        ChannelRealization jammer_channel;
        JammerPilot jammer_pilot;
        if (link.jammer != nullptr) {
            auto jrng = RngStream::for_trial(tseed, StreamTag::jammer_channel);
            jammer_channel = draw_channel(jrng, *link.jammer, grid, 1);
            auto prng = RngStream::for_trial(tseed, StreamTag::jammer_pilot);
            jammer_pilot = generate_jammer_pilot(prng, pilots, 1);
        }
        const JammerSignal jammer_signal{jammer_channel, jammer_pilot};

        auto noise_rng = RngStream::for_trial(tseed, StreamTag::training_noise);
        const auto training = simulate_training(noise_rng, channels,
                                                link.jammer != nullptr ? &jammer_signal : nullptr,
                                                pilots, config);
        const CVector y = training.despread_pilot(k, 0);
        const auto estimate = lmmse_estimate(y, link.combiner_rps[static_cast<std::size_t>(k)],
                                             grid, est);

        DrawSample s{};
        s.desired = estimate.channel.dot(channels[static_cast<std::size_t>(k)].channels.col(0));
        for (int l = 0; l < k_count; ++l) {
            if (l == k)
                continue;
            s.inter_user += config.data_power[static_cast<std::size_t>(l)] *
                            std::norm(estimate.channel.dot(channels[static_cast<std::size_t>(l)].channels.col(0)));
        }
        if (link.jammer != nullptr)
            s.jammer = std::norm(estimate.channel.dot(jammer_channel.channels.col(0)));
        auto data_rng = RngStream::for_trial(tseed, StreamTag::data);
        CMatrix z(grid.size(), 1);
        data_rng.fill_complex_normal(z, config.noise_power);
        s.noise = std::norm(estimate.channel.dot(z.col(0)));
        samples.push_back(s);
    }

    EmpiricalMoments out;
    out.draws = draws;

    cplx mean(0.0, 0.0);
    for (const auto &s : samples)
        mean += s.desired;
    mean /= static_cast<double>(draws);
    const double mean_abs = std::abs(mean);
    const cplx direction = mean_abs > 0.0 ? mean / mean_abs : cplx(1.0, 0.0);

    Accumulator projected, spread, inter, jam, noise;
    for (const auto &s : samples) {
        projected.add((s.desired * std::conj(direction)).real());
        spread.add(std::norm(s.desired - mean));
        inter.add(s.inter_user);
        jam.add(s.jammer);
        noise.add(s.noise);
    }
    // |m|^2 by the delta method along the mean's direction.
    out.desired = {std::norm(mean), 2.0 * mean_abs * projected.estimate().std_error};
    out.gain_uncertainty = {spread.mean() * draws / (draws - 1.0), spread.estimate().std_error};
    out.inter_user = inter.estimate();
    out.jammer = jam.estimate();
    out.noise = noise.estimate();

    const double p_d = config.data_power[static_cast<std::size_t>(k)];
    const double full = sinr_from_moments(moments_of(samples), p_d, q_d);
    // Delete-one-batch jackknife for the ratio.
    const int batch = draws / jackknife_batches;
    std::vector<double> partial;
    partial.reserve(jackknife_batches);
    std::vector<DrawSample> kept;
    kept.reserve(samples.size());
    for (int b = 0; b < jackknife_batches; ++b) {
        kept.clear();
        for (int d = 0; d < draws; ++d)
            if (d / batch != b)
                kept.push_back(samples[static_cast<std::size_t>(d)]);
        partial.push_back(sinr_from_moments(moments_of(kept), p_d, q_d));
    }
    const double partial_mean =
        std::accumulate(partial.begin(), partial.end(), 0.0) / jackknife_batches;
    double jack = 0.0;
    for (double v : partial)
        jack += (v - partial_mean) * (v - partial_mean);
    out.sinr = {full, std::sqrt((jackknife_batches - 1.0) / jackknife_batches * jack)};
    return out;
}

} // namespace jamguard
