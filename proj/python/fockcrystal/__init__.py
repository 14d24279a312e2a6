"""Fock space, crystal and Specht module computations (C++ core)."""

from ._core import *  # noqa: F401,F403
from ._core import InvalidArgument, ResourceLimit, ConventionViolation, run_cli  # noqa: F401


def cli(*args):
    """Run a CLI subcommand in-process; returns (exit_code, stdout, stderr)."""
    return run_cli([str(a) for a in args])
