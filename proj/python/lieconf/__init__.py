"""Python access to the lieconf classification library.

Every function returns plain Python data decoded from the library's JSON.
"""

import json

from . import _lieconf
from ._lieconf import DEFAULT_EXPECT, LieConfError

__all__ = [
    "DEFAULT_EXPECT",
    "LieConfError",
    "check_examples",
    "classify",
    "dump_constants",
    "dump_roots",
    "run",
    "solve",
]


def dump_roots(system):
    return json.loads(_lieconf.dump_roots(system))


def dump_constants(system):
    return json.loads(_lieconf.dump_constants(system))


def classify(max_rank=8, case="all", threads=0, expect=DEFAULT_EXPECT):
    """Report with candidates, survivors and a "comparison" against `expect`."""
    return json.loads(_lieconf.classify(max_rank, case, threads, str(expect)))


def solve(config):
    """`config` is a dict or JSON string with system, case, delta, alpha, extra_h."""
    if not isinstance(config, str):
        config = json.dumps(config)
    return json.loads(_lieconf.solve(config))


def check_examples(construction="all", n=None, trials=50, seed=1):
    return json.loads(_lieconf.check_examples(construction, n, trials, seed))


def run(args):
    """Runs the command line; returns (exit code, stdout, stderr)."""
    return _lieconf.run(list(args))
