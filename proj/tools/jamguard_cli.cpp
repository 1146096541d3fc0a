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

// jamguard command-line driver.
//
//   jamguard <cdp|fap|se-jammer|se-antennas|validate|single-trial> [flags]
//
// Exit status: 0 success, 1 validation failure, 2 bad configuration or usage.

#include "jamguard/config_io.hpp"
#include "jamguard/experiments.hpp"
#include "jamguard/types.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#ifndef JAMGUARD_VERSION
#define JAMGUARD_VERSION "0.0.0"
#endif

namespace {

using namespace jamguard;

struct Flags {
    std::string config_path;
    std::string out_dir = "results";
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::optional<int> threads;
    bool dump_intermediates = false;
    std::uint64_t trial_index = 0;
};

nlohmann::json load_config_document(const std::string &path)
{
    if (path.empty())
        return nlohmann::json::object();
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw ConfigError("config file " + path + " is not valid JSON: " + e.what());
    }
}

ExperimentSpec build_spec(ExperimentKind kind, const Flags &flags)
{
    ExperimentSpec spec = default_experiment(kind);
    spec.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    apply_experiment_json(spec, load_config_document(flags.config_path));
    if (flags.seed)
        spec.system.seed = *flags.seed;
    if (flags.trials)
        spec.trials = *flags.trials;
    if (flags.threads)
        spec.threads = *flags.threads;
    spec.validate();
    return spec;
}

void write_json(const std::filesystem::path &path, const nlohmann::json &doc)
{
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << doc.dump(2) << '\n';
    if (!out)
        throw std::runtime_error("could not write " + path.string());
}

int run_experiment_command(ExperimentKind kind, const Flags &flags)
{
    const ExperimentSpec spec = build_spec(kind, flags);
    const auto table =
        run_experiment(spec, [](const std::string &line) { std::cerr << line << '\n'; });
    const std::string stem = experiment_name(kind);
    write_result_files(table, flags.out_dir, stem);
    if (flags.dump_intermediates)
        write_json(std::filesystem::path(flags.out_dir) / (stem + "_trial0.json"),
                   single_trial_dump(spec.system, 0));
    std::cerr << "wrote " << (std::filesystem::path(flags.out_dir) / (stem + ".csv")).string()
              << '\n';
    if (kind == ExperimentKind::validation_suite && !table.passed) {
        std::cerr << "validation failed\n";
        return 1;
    }
    return 0;
}

int run_single_trial(const Flags &flags)
{
    SystemConfig config;
    auto doc = load_config_document(flags.config_path);
    doc.erase("experiment");
    apply_system_json(config, doc);
    if (flags.seed)
        config.seed = *flags.seed;
    config.validate();
    const auto dump = single_trial_dump(config, flags.trial_index);
    write_json(std::filesystem::path(flags.out_dir) / "single_trial.json", dump);
    if (flags.dump_intermediates)
        std::cout << dump.dump(2) << '\n';
    std::cerr << "single-trial seed=" << config.seed << " jammer_detected="
              << (dump["jammer_detected"].get<bool>() ? "yes" : "no")
              << " sum_se=" << dump["sum_se"].get<double>() << '\n';
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Direction-based jamming detection and suppression simulator for mmWave "
                 "massive MIMO uplink"};
    app.set_version_flag("--version", JAMGUARD_VERSION);
    app.require_subcommand(1);

    Flags flags;
    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--config", flags.config_path,
                        "JSON file with system keys and an optional \"experiment\" object")
            ->check(CLI::ExistingFile);
        cmd->add_option("--out", flags.out_dir, "Output directory")->capture_default_str();
        cmd->add_option("--seed", flags.seed, "Master seed (overrides the config)");
        cmd->add_option("--trials", flags.trials, "Trials per sweep point")->check(CLI::PositiveNumber);
        cmd->add_option("--threads", flags.threads, "Worker threads (default: all cores)")
            ->check(CLI::PositiveNumber);
        cmd->add_flag("--dump-intermediates", flags.dump_intermediates,
                      "Also dump the RP sets, common set and SINRs of one trial");
    };

    struct Command {
        const char *name;
        const char *help;
        std::optional<ExperimentKind> kind;
    };
    const Command commands[] = {
        {"cdp", "Correct-detection probability versus jammer training power",
         ExperimentKind::cdp_vs_jammer_power},
        {"fap", "False-alarm probability versus angular spread", ExperimentKind::fap_vs_spread},
        {"se-jammer", "Sum spectral efficiency versus jammer power",
         ExperimentKind::se_vs_jammer_power},
        {"se-antennas", "Sum spectral efficiency versus antenna count",
         ExperimentKind::se_vs_antennas},
        {"validate", "Statistical property checks; exit 1 on any failure",
         ExperimentKind::validation_suite},
        {"single-trial", "Run one trial and write its intermediates", std::nullopt},
    };
    std::vector<std::pair<CLI::App *, std::optional<ExperimentKind>>> subs;
    for (const auto &c : commands) {
        auto *cmd = app.add_subcommand(c.name, c.help);
        add_common(cmd);
        if (!c.kind)
            cmd->add_option("--trial-index", flags.trial_index, "Trial index within the seed")
                ->capture_default_str();
        subs.emplace_back(cmd, c.kind);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        for (const auto &[cmd, kind] : subs) {
            if (!cmd->parsed())
                continue;
            return kind ? run_experiment_command(*kind, flags) : run_single_trial(flags);
        }
    } catch (const ConfigError &e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
