# Copyright 2016 Cloudbase Solutions Srl
#
#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

"""Constants used across the project."""

TASK_RUNNING = "running"
TASK_DONE = "done"
TASK_FAILED = "failed"

CHECK_PASSED = "pass"
CHECK_FAILED = "fail"
CHECK_SKIPPED = "skipped"

SCHEMA_VERSION = 1
SWEEP_COLUMNS = ("D", "coefficient", "pi_exponent", "p2_exponent",
                 "terms", "tail_bound", "flags")
OUTPUT_FORMATS = ("json", "csv", "text")
DIGITS_ENV = "NDIM_DIGITS"

# Precision defaults.
DEFAULT_DIGITS = 50
MIN_DIGITS = 20
DEFAULT_MAX_TERMS = 20000
DEFAULT_GUARD_DIGITS = 15
DEFAULT_POLE_SHIFT = "1e-3"

# Direct partial sums tried before the accelerated unit-argument summation.
PROBE_TERMS = 64
# Consecutive small terms required by the stopping rule.
STOP_RUN = 3
# Partial sums fed to the Levin transform before giving up on it.
LEVIN_TERMS = 600
# Convergence margins at or below this value are flagged.
SLOW_MARGIN = "0.05"
# Radius around the listed poles of the three-loop closed form.
NEAR_POLE_RADIUS = "1e-3"

# Result flags.
FLAG_ACCELERATED = "accelerated"
FLAG_SLOW = "slow-convergence"
FLAG_EXTRAPOLATED = "extrapolated"
FLAG_REDUCED_PRECISION = "reduced-precision"
FLAG_POLE = "pole"
FLAG_OUTSIDE_REGION = "outside-region"
