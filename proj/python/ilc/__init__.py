"""Incremental lambda-calculus workbench.

Terms and deltas are passed and returned as concrete syntax strings.
"""

import json as _json

from ._core import (
    EndpointMismatch,
    Error,
    ParseError,
    apply,
    check_valid,
    compatible,
    compose,
    delta_eval,
    diff,
    normalize_delta,
    normalize_term,
    residual,
    src,
    tgt,
)
from . import _core

__all__ = [
    "EndpointMismatch", "Error", "ParseError", "apply", "check_valid",
    "compatible", "compose", "delta_eval", "diff", "eval", "fuzz",
    "normalize_delta", "normalize_term", "parse_delta", "parse_term",
    "request", "residual", "src", "tgt",
]


def parse_term(text):
    """JSON tree of a term."""
    return _json.loads(_core.term_json(text))


def parse_delta(text):
    """JSON tree of a delta."""
    return _json.loads(_core.delta_json(text))


def eval(term, fuel=100000):  # noqa: A001
    """Outcome as a dict with kind value, stuck or out_of_fuel."""
    return _json.loads(_core.eval(term, fuel))


def fuzz(trials=2000, seed=1, fuel=512, size=40, threads=0):
    return _json.loads(_core.fuzz(trials, seed, fuel, size, threads))


def request(path, body):
    """Runs one service request in-process; returns (status, dict)."""
    status, text = _core.request(path, _json.dumps(body))
    return status, _json.loads(text)
