"""Exact enumeration, property checks and isomorphism tests for likens.

Specs are given in inline form: "nstar", "modclass:2", "numerical:3,4,5",
"custom-logint:2,257", "custom-rational:3/2,5/2".
"""

import json

from . import _liken
from ._liken import LikenError

__all__ = [
    "LikenError",
    "enumerate_prefix",
    "check",
    "compare",
    "order_check",
    "semigroup",
    "construct",
    "verify_main",
    "run_cli",
]


def enumerate_prefix(spec, count):
    """Elements x_0 .. x_count as the JSON prefix export (a dict)."""
    return json.loads(_liken.enumerate_prefix(spec, count))


def check(spec, count, props):
    """One property report per name in props."""
    return json.loads(_liken.check(spec, count, list(props)))


def compare(a, b, k_max=20, precision=4096):
    return json.loads(_liken.compare(a, b, k_max, precision))


def order_check(a, b, count):
    return json.loads(_liken.order_check(a, b, count))


def semigroup(gens, apery=()):
    return json.loads(_liken.semigroup(list(gens), list(apery)))


def construct(policy="convexity-window", steps=100):
    return json.loads(_liken.construct(policy, steps))


def verify_main(spec, count):
    return json.loads(_liken.verify_main(spec, count))


def run_cli(*args):
    """Runs the command line in-process and returns (exit_code, stdout, stderr)."""
    return _liken.run_cli([str(a) for a in args])
