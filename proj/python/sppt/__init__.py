# Copyright 2026 The SPPT Toolkit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Strongly PPT bipartite states: factors, verdicts, families and channels."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import conjecture_report_json as _conjecture_report_json


def run_conjecture(dim_a=3, dim_b=3, count=100, sampler="commuting", seed=0, threads=0):
    """Runs the randomized harness and returns the report as a dict."""
    return _json.loads(_conjecture_report_json(dim_a, dim_b, count, sampler, seed, threads))


def is_sppt(verdict):
    """True for an SpptVerdict that passed; False for NotRepresentable."""
    return bool(getattr(verdict, "is_sppt", False))
