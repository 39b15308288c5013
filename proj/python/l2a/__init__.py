"""Exact checks for Lie 2-algebras, 2-actions and comomentum maps."""

import json
import os

from . import _core
from ._core import (
    InputError,
    PreconditionError,
    cartan_selfcheck,
    contract,
    d,
    endo_selfcheck,
    example_ids,
    kernel2,
    lie_derivative,
    schouten,
)

__all__ = [
    "InputError",
    "PreconditionError",
    "cartan_selfcheck",
    "cohomology",
    "contract",
    "d",
    "endo_selfcheck",
    "example_ids",
    "kernel2",
    "lie_derivative",
    "run_example",
    "schouten",
    "skeletalize",
    "verify",
]


def _load(obj):
    # dicts are taken as definitions, strings as paths
    if isinstance(obj, dict):
        return json.dumps(obj), ""
    path = os.fspath(obj)
    with open(path) as f:
        return f.read(), os.path.dirname(os.path.abspath(path))


def verify(obj):
    text, base = _load(obj)
    return json.loads(_core.verify_json(text, base))


def skeletalize(obj):
    text, base = _load(obj)
    return json.loads(_core.skeletalize_json(text, base))


def cohomology(obj, trivial=False):
    text, base = _load(obj)
    return _core.cohomology_dims(text, base, trivial)


def run_example(example_id, data_dir=""):
    return json.loads(_core.run_example_json(example_id, os.fspath(data_dir)))
