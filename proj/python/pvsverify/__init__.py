"""Exact verification dossiers for the prehomogeneous pencil convergence
argument.

The compiled core speaks JSON text; this package adds small dict-level
conveniences on top.  Rationals are exact and travel as "p/q" strings.
"""

import json

try:
    from ._pvsverify import (
        certificates,
        check_names,
        default_config,
        explain,
        manifest,
        run,
        scrub_wall_clock,
    )
except ImportError:  # in-tree test runs put the extension on sys.path directly
    from _pvsverify import (
        certificates,
        check_names,
        default_config,
        explain,
        manifest,
        run,
        scrub_wall_clock,
    )

__all__ = [
    "certificates",
    "check_names",
    "default_config",
    "explain",
    "manifest",
    "run",
    "run_dossier",
    "scrub_wall_clock",
]


def run_dossier(**overrides):
    """Run the checks with keyword overrides and return the dossier as a dict.

    Accepted keys mirror the CLI flags: cases, primes, samples, seed,
    checks, threads.
    """
    return json.loads(run(json.dumps(overrides)))
