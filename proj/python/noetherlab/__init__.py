# Copyright 2026 The noetherlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import su2_tradeoff_json, u1_tradeoff_json, verify_all as _verify_all


def su2_tradeoff(two_j, step):
    return _json.loads(su2_tradeoff_json(two_j, step))


def u1_tradeoff(levels, step):
    return _json.loads(u1_tradeoff_json(list(levels), step))


def verify_all(seed=42, samples=20000):
    return _json.loads(_verify_all(seed, samples))
