"""Frozen regression constants for the inequality-type checks.

The literature gives these bounds only up to unspecified constants, so the
toolkit freezes empirically fitted values (with headroom) in a checked-in
JSON file.  ``scripts/fit_constants.py`` regenerates the file from the
recorded seed.
"""

from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path

_CONSTANTS_PATH = Path(__file__).with_name("regression_constants.json")


@lru_cache(maxsize=1)
def regression_constants() -> dict:
    with open(_CONSTANTS_PATH, encoding="utf-8") as fh:
        return json.load(fh)
