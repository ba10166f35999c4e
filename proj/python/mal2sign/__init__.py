# Copyright 2026 The mal2sign Authors.
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
"""Malayalam text to sign-language keyframe timelines."""

import os
import pathlib

from ._core import *  # noqa: F401,F403
from ._core import __version__, _load_resources, default_config_path


def _packaged_config():
    bundled = pathlib.Path(__file__).resolve().parent / "data" / "config.json"
    return str(bundled) if bundled.exists() else default_config_path()


def load_resources(config=None, rules=None, lexicon=None):
    """Loads rules, lexicon and timeline settings.

    |config| falls back to $MAL2SIGN_CONFIG, then the bundled demo data.
    """
    if config is None:
        config = os.environ.get("MAL2SIGN_CONFIG") or _packaged_config()
    return _load_resources(str(config), rules and str(rules), lexicon and str(lexicon))
