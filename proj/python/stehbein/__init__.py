"""Python front end for the stehbein verification engine.

Geometries and reports are plain dicts in the same JSON layout the CLI reads
and writes; complex numbers are [re, im] pairs.
"""

import json

from . import _core
from ._core import (
    InputError,
    check_braid,
    check_groups,
    check_jn_involutive,
    check_sigma_unitarity,
    fixture_names,
    jn,
)

__all__ = [
    "InputError",
    "check_braid",
    "check_groups",
    "check_jn_involutive",
    "check_sigma_unitarity",
    "curvature",
    "fixture",
    "fixture_names",
    "jn",
    "verify",
]


def fixture(name, seed=42):
    return json.loads(_core.fixture_json(name, seed))


def verify(data, tol=0.0, checks=(), max_order=4, seed=42, connection="auto"):
    """Run the check suite on a geometry or braiding dict and return the report."""
    text = json.dumps(data)
    return json.loads(_core.verify_json(text, tol, ",".join(checks), max_order, seed, connection))


def curvature(data, connection):
    return json.loads(_core.curvature_json(json.dumps(data), connection))
