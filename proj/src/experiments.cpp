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

#include "jamguard/experiments.hpp"

#include "jamguard/config_io.hpp"
#include "jamguard/parallel.hpp"
#include "jamguard/rng.hpp"
#include "jamguard/special_functions.hpp"
#include "jamguard/trial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <numbers>

#ifndef JAMGUARD_VERSION
#define JAMGUARD_VERSION "0.0.0"
#endif

namespace jamguard {

using json = nlohmann::json;

namespace {

template <class... Args>
std::string format(const char *fmt, Args... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return buf;
}

std::vector<double> stepped(double first, double last, double step)
{
    std::vector<double> out;
    const auto n = static_cast<int>(std::lround((last - first) / step));
    for (int i = 0; i <= n; ++i)
        out.push_back(first + i * step);
    return out;
}

std::string utc_timestamp()
{
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

ResultTable start_table(const ExperimentSpec &spec)
{
    ResultTable table;
    table.metadata = {{"experiment", experiment_name(spec.kind)},
                      {"spec", experiment_to_json(spec)},
                      {"seed", spec.system.seed},
                      {"timestamp", utc_timestamp()},
                      {"version", JAMGUARD_VERSION}};
    return table;
}

void report(const ProgressFn &progress, const std::string &line)
{
    if (progress)
        progress(line);
}

template <class Row>
std::vector<double> column(const std::vector<Row> &per_trial, std::size_t j)
{
    std::vector<double> out;
    out.reserve(per_trial.size());
    for (const auto &row : per_trial)
        out.push_back(row[j]);
    return out;
}

double mean_of(const std::vector<double> &x)
{
    double s = 0.0;
    for (double v : x)
        s += v;
    return x.empty() ? 0.0 : s / static_cast<double>(x.size());
}

AngularGrid grid_for(const SystemConfig &config)
{
    return build_angular_grid(ArrayGeometry(config.antennas));
}

constexpr std::array<const char *, 4> se_metrics{"sum_se", "sum_se_closed_form", "degenerate_users",
                                                 "jammer_detected"};
using SeSample = std::array<double, 4>;

SeSample se_sample(const ArmEvaluation &ev)
{
    return {ev.sum_se, ev.sum_se_closed_form, static_cast<double>(ev.degenerate_users),
            ev.detection.outcome.jammer_detected ? 1.0 : 0.0};
}

// Per trial: no-jammer, suppressed and unsuppressed arms on one scene.
using ArmTriple = std::array<SeSample, 3>;

ArmTriple run_three_arms(const SystemConfig &config, const AngularGrid &grid,
                         const PilotBook &pilots, std::uint64_t tseed)
{
    const int nd = config.detection_subcarriers;
    const double threshold = config.rp_threshold(nd);
    const auto scene = draw_scene(config, grid, pilots, tseed, nd);
    const auto clean = observe_training(scene, grid, pilots, config, false);
    const auto jammed = observe_training(scene, grid, pilots, config, true);
    auto det_clean = detect(clean, nd, threshold, config.detector_g);
    auto det_jammed = detect(jammed, nd, threshold, config.detector_g);
    const auto none = evaluate_arm(Arm::no_jammer, scene, std::move(det_clean), config);
    const auto sup = evaluate_arm(Arm::suppressed, scene, det_jammed, config);
    const auto uns = evaluate_arm(Arm::unsuppressed, scene, std::move(det_jammed), config);
    return {se_sample(none), se_sample(sup), se_sample(uns)};
}

void add_arm_rows(ResultTable &table, const std::string &param, double value,
                  const std::vector<ArmTriple> &per_trial, std::string &summary)
{
    constexpr std::array<Arm, 3> arms{Arm::no_jammer, Arm::suppressed, Arm::unsuppressed};
    for (std::size_t a = 0; a < arms.size(); ++a) {
        for (std::size_t m = 0; m < se_metrics.size(); ++m) {
            std::vector<double> x;
            x.reserve(per_trial.size());
            for (const auto &t : per_trial)
                x.push_back(t[a][m]);
            table.add_samples(param, value, arm_name(arms[a]), se_metrics[m], x);
            if (m == 0)
                summary += format(" %s=%.3f", arm_name(arms[a]), mean_of(x));
        }
    }
}

// Validation bookkeeping: four rows per check.
struct Check {
    std::string name;
    double observed = 0.0;
    double std_error = 0.0;
    double limit = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    int samples = 0;
};

Check upper_bound_check(std::string name, double observed, double se, double bound, int n)
{
    const double tol = 3.0 * se;
    return {std::move(name), observed, se, bound, tol, observed <= bound + tol, n};
}

Check match_check(std::string name, double observed, double se, double expected, int n,
                  double floor = 0.0)
{
    const double tol = std::max(3.0 * se, floor);
    return {std::move(name), observed, se, expected, tol, std::abs(observed - expected) <= tol, n};
}

void add_check(ResultTable &table, const Check &c, const ProgressFn &progress)
{
    const auto index = static_cast<double>(table.rows.size() / 4);
    table.add({"check", index, c.name, "observed", c.observed, c.std_error, c.samples});
    table.add({"check", index, c.name, "limit", c.limit, 0.0, c.samples});
    table.add({"check", index, c.name, "tolerance", c.tolerance, 0.0, c.samples});
    table.add({"check", index, c.name, "pass", c.passed ? 1.0 : 0.0, 0.0, c.samples});
    if (!c.passed)
        table.passed = false;
    report(progress, format("validate %-28s %s observed=%.6g limit=%.6g tol=%.3g n=%d", c.name.c_str(),
                            c.passed ? "PASS" : "FAIL", c.observed, c.limit, c.tolerance, c.samples));
}

void check_noise_statistics(ResultTable &table, const ExperimentSpec &spec,
                            const ProgressFn &progress)
{
    SystemConfig cfg = spec.system;
    constexpr std::array<int, 2> subcarriers{1, 20};
    cfg.detection_subcarriers = std::max(cfg.detection_subcarriers, subcarriers.back());
    cfg.set_uniform_user_power(0.0, 0.0);
    cfg.validate();
    const auto grid = grid_for(cfg);
    const auto pilots = generate_pilot_book(cfg.pilot_length);
    const int trials = std::max(10, spec.trials / 10);
    const double s2 = cfg.noise_power;

    const auto per_trial = parallel_map<std::vector<double>>(trials, spec.threads, [&](int t) {
        const auto scene =
            draw_scene(cfg, grid, pilots, trial_seed(cfg.seed, static_cast<std::uint64_t>(t)),
                       cfg.detection_subcarriers);
        const auto training = observe_training(scene, grid, pilots, cfg, false);
        std::vector<double> out;
        for (int nd : subcarriers) {
            const auto stats = energy_statistics(training, nd, 1.0);
            out.insert(out.end(), stats.energy.data(), stats.energy.data() + stats.energy.size());
        }
        return out;
    });
    const std::size_t block = per_trial.front().size() / subcarriers.size();

    for (std::size_t a = 0; a < subcarriers.size(); ++a) {
        const int nd = subcarriers[a];
        std::vector<double> w;
        for (const auto &t : per_trial)
            w.insert(w.end(), t.begin() + static_cast<long>(a * block),
                     t.begin() + static_cast<long>((a + 1) * block));
        const auto n = static_cast<double>(w.size());
        const double m = mean_of(w);
        double m2 = 0.0, m4 = 0.0;
        for (double v : w) {
            const double d2 = (v - m) * (v - m);
            m2 += d2;
            m4 += d2 * d2;
        }
        m2 /= n;
        m4 /= n;
        const int count = static_cast<int>(w.size());
        add_check(table,
                  match_check(format("energy_mean_nd%d", nd), m, std::sqrt(m2 / n), nd * s2, count),
                  progress);
        add_check(table,
                  match_check(format("energy_variance_nd%d", nd), m2 * n / (n - 1.0),
                              std::sqrt(std::max(0.0, m4 - m2 * m2) / n), nd * s2 * s2, count),
                  progress);
        for (double eta : {1e-2, 1e-3}) {
            const double eps = threshold_for_fap(nd, s2, eta);
            const auto hits = std::count_if(w.begin(), w.end(), [&](double v) { return v > eps; });
            add_check(table,
                      upper_bound_check(format("false_alarm_eta%g_nd%d", eta, nd),
                                        static_cast<double>(hits) / n,
                                        std::sqrt(eta * (1.0 - eta) / n), eta, count),
                      progress);
        }
    }
    for (double eta : {1e-2, 1e-3}) {
        const double analytic = -s2 * std::log(eta);
        const double solved = threshold_for_fap(1, s2, eta);
        const double rel = std::abs(solved - analytic) / analytic;
        add_check(table, {format("threshold_closed_form_eta%g", eta), rel, 0.0, 1e-9, 0.0, rel <= 1e-9, 1},
                  progress);
    }
}

void check_collision_bound(ResultTable &table, const ExperimentSpec &spec,
                           const ProgressFn &progress)
{
    const SystemConfig &cfg = spec.system;
    const auto grid = grid_for(cfg);
    const int draws = 100 * spec.trials;
    const auto max_share = parallel_map<int>(draws, spec.threads, [&](int d) {
        auto rng = RngStream::for_trial(trial_seed(cfg.seed, static_cast<std::uint64_t>(d)),
                                        StreamTag::validation);
        std::vector<IndexSet> supports;
        supports.reserve(static_cast<std::size_t>(cfg.users));
        for (int k = 0; k < cfg.users; ++k)
            supports.push_back(
                sample_terminal(rng, grid, cfg.angular_spread, cfg.user_gain).active_rps);
        const auto counts = rp_occurrence_counts(supports, grid.size());
        return *std::max_element(counts.begin(), counts.end());
    });
    const auto n = static_cast<double>(draws);
    for (int g : {2, 3, 4}) {
        if (g > cfg.users)
            continue;
        const double f =
            static_cast<double>(std::count_if(max_share.begin(), max_share.end(),
                                              [&](int r) { return r >= g; })) / n;
        add_check(table,
                  upper_bound_check(format("collision_bound_g%d", g), f, std::sqrt(f * (1.0 - f) / n),
                                    collision_probability_bound(cfg.users, g, cfg.angular_spread),
                                    draws),
                  progress);
    }
}

// Monte-Carlo SINR terms of user 0 against the closed forms, supports fixed.
void check_moment_scenario(ResultTable &table, const std::string &tag, const SystemConfig &cfg,
                           const std::vector<double> &user_angles, double jammer_angle,
                           int trimmed_rps, int draws, std::uint64_t seed,
                           const ProgressFn &progress)
{
    const auto grid = grid_for(cfg);
    std::vector<TerminalGeometry> users;
    for (double theta : user_angles)
        users.push_back(make_terminal(grid, theta, cfg.angular_spread, cfg.user_gain));
    const auto jammer = make_terminal(grid, jammer_angle, cfg.jammer_angular_spread, cfg.jammer_gain);
    std::vector<IndexSet> combiner;
    for (const auto &u : users)
        combiner.push_back(u.active_rps);
    combiner[0].resize(combiner[0].size() - static_cast<std::size_t>(trimmed_rps));

    const LinkState link{users, &jammer, combiner};
    const auto mc = sinr_empirical_moments(0, link, grid, cfg, draws, seed);

    const auto k_count = users.size();
    std::vector<double> mu(k_count), xi(k_count);
    for (std::size_t l = 0; l < k_count; ++l) {
        mu[l] = users[l].power_scale;
        xi[l] = gain_mean_square({cfg.pilot_power[l], cfg.pilot_length, mu[l], cfg.noise_power});
    }
    const auto counts = overlap_counts(combiner);
    const double c = counts.own[0];
    double inter = 0.0;
    for (std::size_t l = 1; l < k_count; ++l)
        inter += cfg.data_power[l] * counts.pairwise(0, static_cast<long>(l)) * xi[0] * mu[0] * mu[l];
    const double desired = mu[0] * mu[0] * c * c * xi[0] * xi[0];
    const ClosedFormInputs closed{cfg.data_power, mu, xi, cfg.noise_power};

    add_check(table, match_check(tag + "_desired", mc.desired.value, mc.desired.std_error, desired, draws),
              progress);
    add_check(table,
              match_check(tag + "_gain_uncertainty", mc.gain_uncertainty.value,
                          mc.gain_uncertainty.std_error, mu[0] * mu[0] * c * xi[0] * xi[0], draws),
              progress);
    add_check(table,
              match_check(tag + "_inter_user", mc.inter_user.value, mc.inter_user.std_error, inter, draws),
              progress);
    // Exactly zero up to rounding of the grid's orthogonality.
    add_check(table,
              match_check(tag + "_jammer", mc.jammer.value, mc.jammer.std_error, 0.0, draws,
                          1e-20 * desired),
              progress);
    add_check(table,
              match_check(tag + "_noise", mc.noise.value, mc.noise.std_error,
                          mu[0] * c * xi[0] * cfg.noise_power, draws),
              progress);
    add_check(table,
              match_check(tag + "_sinr", mc.sinr.value, mc.sinr.std_error,
                          sinr_closed_form(0, counts, closed), draws),
              progress);
}

void check_moments(ResultTable &table, const ExperimentSpec &spec, const ProgressFn &progress)
{
    const int draws = std::max(100, 10 * spec.trials);
    SystemConfig single = spec.system;
    single.users = single.pilot_length = 1;
    single.set_uniform_user_power(spec.system.pilot_power.front(), spec.system.data_power.front());
    single.validate();
    check_moment_scenario(table, "moments_single_user", single, {0.0}, 0.8, 0, draws,
                          splitmix64(spec.system.seed ^ 0x6d6f6d31ULL), progress);

    SystemConfig shared = spec.system;
    shared.users = shared.pilot_length = 3;
    shared.detector_g = 2;
    shared.set_uniform_user_power(spec.system.pilot_power.front(), spec.system.data_power.front());
    shared.validate();
    check_moment_scenario(table, "moments_shared_rps", shared, {0.0, 0.05, -0.08}, 0.8, 2, draws,
                          splitmix64(spec.system.seed ^ 0x6d6f6d32ULL), progress);
}

void check_exact_null(ResultTable &table, const ExperimentSpec &spec, const ProgressFn &progress)
{
    const SystemConfig &cfg = spec.system;
    const auto grid = grid_for(cfg);
    const auto pilots = generate_pilot_book(cfg.pilot_length);
    const int instances = std::max(1000, spec.trials);
    const auto ratios = parallel_map<double>(instances, spec.threads, [&](int d) {
        const auto tseed = trial_seed(splitmix64(cfg.seed ^ 0x6e756c6cULL), static_cast<std::uint64_t>(d));
        const auto scene = draw_scene(cfg, grid, pilots, tseed, 1);
        auto noise_rng = RngStream::for_trial(tseed, StreamTag::training_noise);
        const JammerSignal jammer{scene.jammer_channel, scene.jammer_pilot};
        const auto training = simulate_training(noise_rng, scene.user_channels, &jammer, pilots, cfg);
        for (int j = 0; j < cfg.users; ++j) {
            const int k = (d + j) % cfg.users;
            const auto &user = scene.users[static_cast<std::size_t>(k)];
            const auto rps = set_difference(user.active_rps, scene.jammer.active_rps);
            if (rps.empty())
                continue;
            const auto est = lmmse_estimate(
                training.despread_pilot(k, 0), rps, grid,
                {cfg.pilot_power[static_cast<std::size_t>(k)], cfg.pilot_length, user.power_scale,
                 cfg.noise_power});
            const CVector hw = scene.jammer_channel.channels.col(0);
            return std::abs(est.channel.dot(hw)) / (est.channel.norm() * hw.norm());
        }
        return 0.0;
    });
    const double worst = *std::max_element(ratios.begin(), ratios.end());
    add_check(table, {"exact_null", worst, 0.0, 1e-10, 0.0, worst <= 1e-10, instances}, progress);
}

} // namespace

const char *experiment_name(ExperimentKind kind)
{
    switch (kind) {
    case ExperimentKind::cdp_vs_jammer_power:
        return "cdp";
    case ExperimentKind::fap_vs_spread:
        return "fap";
    case ExperimentKind::se_vs_jammer_power:
        return "se-jammer";
    case ExperimentKind::se_vs_antennas:
        return "se-antennas";
    case ExperimentKind::validation_suite:
        return "validate";
    }
    return "unknown";
}

std::optional<ExperimentKind> parse_experiment_kind(std::string_view name)
{
    for (auto kind : {ExperimentKind::cdp_vs_jammer_power, ExperimentKind::fap_vs_spread,
                      ExperimentKind::se_vs_jammer_power, ExperimentKind::se_vs_antennas,
                      ExperimentKind::validation_suite})
        if (name == experiment_name(kind))
            return kind;
    return std::nullopt;
}

std::string detector_arm(int min_pilots, int subcarriers)
{
    return format("g%d_nd%d", min_pilots, subcarriers);
}

void ExperimentSpec::validate() const
{
    system.validate();
    if (trials < 1)
        throw ConfigError("trials must be at least 1");
    if (threads < 1)
        throw ConfigError("threads must be at least 1");
    if (kind == ExperimentKind::validation_suite)
        return;
    if (sweep.empty())
        throw ConfigError("sweep grid must be nonempty");
    if (std::adjacent_find(sweep.begin(), sweep.end(), std::greater_equal<>()) != sweep.end())
        throw ConfigError("sweep grid must be strictly increasing");

    const bool uses_g = kind == ExperimentKind::cdp_vs_jammer_power || kind == ExperimentKind::fap_vs_spread;
    if (uses_g) {
        if (detector_g_values.empty())
            throw ConfigError("g_values must be nonempty");
        for (int g : detector_g_values)
            if (g < 2 || g > system.users)
                throw ConfigError("g_values must lie in [2, users]");
    }
    if (kind == ExperimentKind::cdp_vs_jammer_power) {
        if (subcarrier_counts.empty())
            throw ConfigError("subcarrier_counts must be nonempty");
        for (int nd : subcarrier_counts)
            if (nd < 1 || nd > system.estimated_subcarriers())
                throw ConfigError("subcarrier_counts must lie in [1, total_subcarriers / coherence_subcarriers]");
    }
    if (kind == ExperimentKind::fap_vs_spread)
        for (double d : sweep)
            if (!(d > 0.0 && d < std::numbers::pi))
                throw ConfigError("angular spreads must lie in (0, pi)");
    if (kind == ExperimentKind::se_vs_antennas)
        for (double m : sweep)
            if (m < 2.0 || m != std::floor(m))
                throw ConfigError("antenna counts must be integers >= 2");
}

ExperimentSpec default_experiment(ExperimentKind kind)
{
    ExperimentSpec spec;
    spec.kind = kind;
    switch (kind) {
    case ExperimentKind::cdp_vs_jammer_power:
        spec.sweep = stepped(-45.0, -5.0, 2.5);
        spec.detector_g_values = {6, 8, 10};
        spec.subcarrier_counts = {1, 20};
        break;
    case ExperimentKind::fap_vs_spread:
        for (int i = 1; i <= 6; ++i)
            spec.sweep.push_back(i * std::numbers::pi / 36.0);
        spec.detector_g_values = {6, 8, 10};
        break;
    case ExperimentKind::se_vs_jammer_power:
        spec.sweep = stepped(-20.0, 10.0, 2.5);
        spec.trials = 500;
        break;
    case ExperimentKind::se_vs_antennas:
        spec.sweep = {50, 100, 200, 400};
        spec.trials = 500;
        break;
    case ExperimentKind::validation_suite:
        break;
    }
    return spec;
}

void apply_experiment_json(ExperimentSpec &target, const json &doc)
{
    ExperimentSpec spec = target;
    if (!doc.is_object())
        throw ConfigError("config document must be a JSON object");
    json system = doc;
    json experiment;
    if (auto it = system.find("experiment"); it != system.end()) {
        experiment = *it;
        system.erase(it);
    }
    apply_system_json(spec.system, system);
    if (!experiment.is_null()) {
        if (!experiment.is_object())
            throw ConfigError("\"experiment\" must be an object");
        for (const auto &[key, value] : experiment.items()) {
            try {
                if (key == "sweep")
                    spec.sweep = value.get<std::vector<double>>();
                else if (key == "trials")
                    spec.trials = value.get<int>();
                else if (key == "threads")
                    spec.threads = value.get<int>();
                else if (key == "g_values")
                    spec.detector_g_values = value.get<std::vector<int>>();
                else if (key == "subcarrier_counts")
                    spec.subcarrier_counts = value.get<std::vector<int>>();
                else
                    throw ConfigError("unknown experiment key \"" + key + "\"");
            } catch (const json::exception &e) {
                throw ConfigError("experiment." + key + ": " + e.what());
            }
        }
    }
    spec.validate();
    target = std::move(spec);
}

json experiment_to_json(const ExperimentSpec &spec)
{
    json doc = system_config_to_json(spec.system);
    doc["experiment"] = {{"sweep", spec.sweep},
                         {"trials", spec.trials},
                         {"threads", spec.threads},
                         {"g_values", spec.detector_g_values},
                         {"subcarrier_counts", spec.subcarrier_counts}};
    return doc;
}

ResultTable run_cdp_experiment(const ExperimentSpec &spec, const ProgressFn &progress)
{
    spec.validate();
    SystemConfig cfg = spec.system;
    const auto &nds = spec.subcarrier_counts;
    const auto &gs = spec.detector_g_values;
    const int nd_max = *std::max_element(nds.begin(), nds.end());
    cfg.detection_subcarriers = nd_max;
    cfg.validate();
    const auto grid = grid_for(cfg);
    const auto pilots = generate_pilot_book(cfg.pilot_length);
    std::vector<double> thresholds;
    for (int nd : nds)
        thresholds.push_back(cfg.rp_threshold(nd));

    auto table = start_table(spec);
    for (double q : spec.sweep) {
        cfg.jammer_pilot_power = dbw_to_watts(q);
        const auto per_trial = parallel_map<std::vector<double>>(spec.trials, spec.threads, [&](int t) {
            const auto scene = draw_scene(cfg, grid, pilots,
                                          trial_seed(cfg.seed, static_cast<std::uint64_t>(t)), nd_max);
            const auto training = observe_training(scene, grid, pilots, cfg, true);
            std::vector<double> out;
            out.reserve(2 * nds.size() * gs.size());
            for (std::size_t a = 0; a < nds.size(); ++a) {
                const auto stats = energy_statistics(training, nds[a], thresholds[a]);
                const auto counts = rp_occurrence_counts(estimate_rp_sets(stats).pilot_sets, grid.size());
                for (int g : gs) {
                    const auto outcome = detect_jammer(counts, g);
                    out.push_back(outcome.jammer_detected ? 1.0 : 0.0);
                    out.push_back(intersection_size(outcome.common_set, scene.jammer.active_rps) > 0 ? 1.0 : 0.0);
                }
            }
            return out;
        });

        std::string summary = format("cdp q_t=%.2f dBW:", q);
        std::size_t j = 0;
        for (int nd : nds) {
            for (int g : gs) {
                const auto arm = detector_arm(g, nd);
                const auto cdp = column(per_trial, j++);
                table.add_samples("q_t_dbw", q, arm, "cdp", cdp);
                table.add_samples("q_t_dbw", q, arm, "jammer_rp_hit", column(per_trial, j++));
                summary += format(" %s=%.3f", arm.c_str(), mean_of(cdp));
            }
        }
        report(progress, summary);
    }
    return table;
}

ResultTable run_fap_experiment(const ExperimentSpec &spec, const ProgressFn &progress)
{
    spec.validate();
    SystemConfig cfg = spec.system;
    const auto &gs = spec.detector_g_values;
    const auto grid = grid_for(cfg);
    const auto pilots = generate_pilot_book(cfg.pilot_length);
    const int nd = cfg.detection_subcarriers;
    const double threshold = cfg.rp_threshold(nd);

    auto table = start_table(spec);
    for (double spread : spec.sweep) {
        cfg.angular_spread = spread;
        cfg.validate();
        const auto per_trial = parallel_map<std::vector<double>>(spec.trials, spec.threads, [&](int t) {
            const auto scene = draw_scene(cfg, grid, pilots,
                                          trial_seed(cfg.seed, static_cast<std::uint64_t>(t)), nd);
            const auto training = observe_training(scene, grid, pilots, cfg, false);
            const auto stats = energy_statistics(training, nd, threshold);
            const auto counts = rp_occurrence_counts(estimate_rp_sets(stats).pilot_sets, grid.size());
            std::vector<IndexSet> supports;
            for (const auto &u : scene.users)
                supports.push_back(u.active_rps);
            const auto true_counts = rp_occurrence_counts(supports, grid.size());
            std::vector<double> out;
            for (int g : gs) {
                out.push_back(detect_jammer(counts, g).jammer_detected ? 1.0 : 0.0);
                out.push_back(detect_jammer(true_counts, g).jammer_detected ? 1.0 : 0.0);
            }
            return out;
        });

        std::string summary = format("fap spread=%.4f rad:", spread);
        std::size_t j = 0;
        for (int g : gs) {
            const auto arm = detector_arm(g, nd);
            const auto fap = column(per_trial, j++);
            table.add_samples("spread_rad", spread, arm, "fap", fap);
            table.add_samples("spread_rad", spread, arm, "true_support_collision", column(per_trial, j++));
            table.add({"spread_rad", spread, arm, "collision_bound",
                       collision_probability_bound(cfg.users, g, spread), 0.0, spec.trials});
            summary += format(" %s=%.4f", arm.c_str(), mean_of(fap));
        }
        report(progress, summary);
    }
    return table;
}

ResultTable run_se_vs_jammer_power(const ExperimentSpec &spec, const ProgressFn &progress)
{
    spec.validate();
    SystemConfig cfg = spec.system;
    const auto grid = grid_for(cfg);
    const auto pilots = generate_pilot_book(cfg.pilot_length);

    auto table = start_table(spec);
    for (double q : spec.sweep) {
        cfg.jammer_pilot_power = cfg.jammer_data_power = dbw_to_watts(q);
        const auto per_trial = parallel_map<ArmTriple>(spec.trials, spec.threads, [&](int t) {
            return run_three_arms(cfg, grid, pilots, trial_seed(cfg.seed, static_cast<std::uint64_t>(t)));
        });
        std::string summary = format("se-jammer q=%.2f dBW:", q);
        add_arm_rows(table, "q_dbw", q, per_trial, summary);
        report(progress, summary);
    }
    return table;
}

ResultTable run_se_vs_antennas(const ExperimentSpec &spec, const ProgressFn &progress)
{
    spec.validate();
    SystemConfig cfg = spec.system;
    const auto pilots = generate_pilot_book(cfg.pilot_length);

    auto table = start_table(spec);
    for (double m : spec.sweep) {
        cfg.antennas = static_cast<int>(m);
        cfg.validate();
        const auto grid = grid_for(cfg);
        const auto per_trial = parallel_map<ArmTriple>(spec.trials, spec.threads, [&](int t) {
            return run_three_arms(cfg, grid, pilots, trial_seed(cfg.seed, static_cast<std::uint64_t>(t)));
        });
        std::string summary = format("se-antennas M=%d:", cfg.antennas);
        add_arm_rows(table, "antennas", m, per_trial, summary);
        report(progress, summary);
    }
    return table;
}

ResultTable run_validation_suite(const ExperimentSpec &spec, const ProgressFn &progress)
{
    spec.validate();
    auto table = start_table(spec);
    check_noise_statistics(table, spec, progress);
    check_collision_bound(table, spec, progress);
    check_moments(table, spec, progress);
    check_exact_null(table, spec, progress);
    table.metadata["passed"] = table.passed;
    return table;
}

ResultTable run_experiment(const ExperimentSpec &spec, const ProgressFn &progress)
{
    switch (spec.kind) {
    case ExperimentKind::cdp_vs_jammer_power:
        return run_cdp_experiment(spec, progress);
    case ExperimentKind::fap_vs_spread:
        return run_fap_experiment(spec, progress);
    case ExperimentKind::se_vs_jammer_power:
        return run_se_vs_jammer_power(spec, progress);
    case ExperimentKind::se_vs_antennas:
        return run_se_vs_antennas(spec, progress);
    case ExperimentKind::validation_suite:
        return run_validation_suite(spec, progress);
    }
    throw ContractError("unknown experiment kind");
}

json single_trial_dump(const SystemConfig &config, std::uint64_t trial_index)
{
    config.validate();
    const auto grid = grid_for(config);
    const auto pilots = generate_pilot_book(config.pilot_length);
    const int nd = config.detection_subcarriers;
    const double threshold = config.rp_threshold(nd);
    const auto tseed = trial_seed(config.seed, trial_index);
    const auto scene = draw_scene(config, grid, pilots, tseed, nd);
    const auto training = observe_training(scene, grid, pilots, config, true);
    auto detection = detect(training, nd, threshold, config.detector_g);
    const auto ev = evaluate_arm(Arm::suppressed, scene, std::move(detection), config);
    const auto &outcome = ev.detection.outcome;

    json users = json::array();
    for (int k = 0; k < config.users; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        users.push_back({{"user", k + 1},
                         {"mean_angle", scene.users[uk].mean_angle},
                         {"active_rps", to_one_based(scene.users[uk].active_rps)},
                         {"pilot_rps", to_one_based(ev.detection.estimate.pilot_sets[uk])},
                         {"estimation_rps", to_one_based(ev.user_sets[uk].rps)},
                         {"degenerate", ev.user_sets[uk].degenerate},
                         {"sinr", ev.sinr[uk]},
                         {"sinr_closed_form", ev.sinr_closed_form[uk]}});
    }
    json occupied = json::object();
    for (std::size_t i = 0; i < outcome.occurrence_counts.size(); ++i)
        if (outcome.occurrence_counts[i] > 0)
            occupied[std::to_string(i + 1)] = outcome.occurrence_counts[i];

    return {{"seed", config.seed},
            {"trial_index", trial_index},
            {"subcarriers", nd},
            {"threshold", threshold},
            {"detector_g", config.detector_g},
            {"jammer",
             {{"mean_angle", scene.jammer.mean_angle},
              {"active_rps", to_one_based(scene.jammer.active_rps)}}},
            {"occurrence_counts", occupied},
            {"common_rps", to_one_based(outcome.common_set)},
            {"jammer_detected", outcome.jammer_detected},
            {"users", users},
            {"sum_se", ev.sum_se},
            {"version", JAMGUARD_VERSION},
            {"config", system_config_to_json(config)}};
}

} // namespace jamguard
