# SPDX-License-Identifier: Apache-2.0
#
# jamguard: direction-based jamming detection and suppression for mmWave massive MIMO
# Copyright (C) 2026 The jamguard authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ------------------------------------------------------------------------

"""Direction-based jamming detection and suppression simulator.

Thin wrapper over the compiled core. Configurations are plain dicts using the
same keys as the CLI's JSON config files.
"""

import csv
import io
import json

from . import _core
from ._core import (
    ConfigError,
    collision_probability_bound,
    detect_jammer,
    grid_angles,
    steering_vector,
    threshold_for_fap,
    to_angular_domain,
    user_rp_set,
)

__version__ = _core.version()

EXPERIMENTS = ("cdp", "fap", "se-jammer", "se-antennas", "validate")


def default_config():
    """System configuration at the reference operating point."""
    return json.loads(_core.default_config_json())


def normalize_config(config):
    """Validate a config dict and return it with every key filled in."""
    return json.loads(_core.normalize_config_json(json.dumps(config or {})))


def parse_csv(text):
    """Rows of a result CSV as dicts with numeric fields converted."""
    rows = []
    for row in csv.DictReader(io.StringIO(text)):
        row["sweep_value"] = float(row["sweep_value"])
        row["mean"] = float(row["mean"])
        row["stderr"] = float(row["stderr"])
        row["trials"] = int(row["trials"])
        rows.append(row)
    return rows


def run_experiment(kind, config=None, experiment=None, threads=1):
    """Run one experiment and return {"csv", "rows", "metadata", "passed"}.

    `experiment` may set sweep, trials, threads, g_values and subcarrier_counts.
    """
    doc = dict(config or {})
    if experiment:
        doc["experiment"] = experiment
    text, metadata, passed = _core.run_experiment_json(kind, json.dumps(doc), threads)
    return {"csv": text, "rows": parse_csv(text), "metadata": json.loads(metadata), "passed": passed}


def single_trial(config=None, trial_index=0):
    """Every intermediate of one trial; RP indices are 1-based."""
    return json.loads(_core.single_trial_json(json.dumps(config or {}), trial_index))
