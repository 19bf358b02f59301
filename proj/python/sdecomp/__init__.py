"""Python access to the sdecomp core.

Every query returns plain dicts and lists decoded from the same JSON the
command line tool prints.
"""

import json

from ._sdecomp import SdecompError, lucas_binom, tool_version, verify_witness
from . import _sdecomp

__all__ = [
    "SdecompError",
    "classify",
    "field",
    "lucas_binom",
    "run_cli",
    "search",
    "stepanov",
    "tool_version",
    "verify_witness",
]

__version__ = tool_version()


def field(q):
    """Modulus, generator and characteristic of F_q."""
    return json.loads(_sdecomp.field_json(q))


def classify(d, q):
    """Digit classification of (d, q) with all theorem verdicts."""
    return json.loads(_sdecomp.classify_json(d, q))


def search(q, d, arity=2, min_size=2, budget=None, threads=0, max_witnesses=None):
    kwargs = {"arity": arity, "min_size": min_size, "threads": threads}
    if budget is not None:
        kwargs["budget"] = budget
    if max_witnesses is not None:
        kwargs["max_witnesses"] = max_witnesses
    return json.loads(_sdecomp.search_json(q, d, **kwargs))


def stepanov(q, d, a, b):
    """Certificate for |A||B| <= (q-1)/d + |A cap -B|."""
    return json.loads(_sdecomp.stepanov_json(q, d, list(a), list(b)))


def run_cli(args):
    """Runs the command line tool in process; returns (exit_code, stdout, stderr)."""
    return _sdecomp.run_cli([str(a) for a in args])
